// Copyright 2026 The lsss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lsss/latin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "doctest.h"

using namespace lsss;

namespace {

const std::vector<std::vector<int>> kL3 = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};

PartialLatinSquare triples3(std::vector<Triple> ts) {
  return PartialLatinSquare::from_triples(3, ts);
}

// Row-by-row permutation enumeration, independent of the backtracking
// solver: counts order-n squares by trying every permutation per row.
int64_t perm_count(int n) {
  std::vector<int> base(size_t(n), 0);
  std::iota(base.begin(), base.end(), 0);
  std::vector<std::vector<int>> perms;
  std::vector<int> p = base;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::vector<std::vector<int>> rows;
  int64_t count = 0;
  auto fits = [&](const std::vector<int>& cand) {
    for (const auto& row : rows)
      for (int c = 0; c < n; ++c)
        if (row[c] == cand[c]) return false;
    return true;
  };
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      ++count;
      return;
    }
    for (const auto& cand : perms) {
      if (!fits(cand)) continue;
      rows.push_back(cand);
      self(self, depth + 1);
      rows.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return Errc::IoError;
}

}  // namespace

TEST_CASE("partial square construction and mutation") {
  PartialLatinSquare p(3);
  CHECK(p.order() == 3);
  CHECK(p.size() == 0);
  CHECK_FALSE(p.full());
  p = p.with(Triple{0, 0, 0});
  CHECK(p.at(0, 0) == 0);
  CHECK(p.filled(0, 0));
  CHECK(p.contains(Triple{0, 0, 0}));
  CHECK_FALSE(p.contains(Triple{0, 0, 1}));
  CHECK(p.size() == 1);

  CHECK(code_of([&] { p.with(Triple{0, 0, 1}); }) == Errc::InvalidPartial);  // occupied
  CHECK(code_of([&] { p.with(Triple{0, 2, 0}); }) == Errc::InvalidPartial);  // row repeat
  CHECK(code_of([&] { p.with(Triple{2, 0, 0}); }) == Errc::InvalidPartial);  // col repeat
  CHECK(code_of([&] { p.with(Triple{0, 0, 3}); }) == Errc::InvalidPartial);  // range
  CHECK(code_of([&] { p.with(Triple{-1, 0, 0}); }) == Errc::InvalidPartial);
  CHECK(p.with(Triple{0, 0, 0}) == p);  // re-adding the same triple is a no-op

  PartialLatinSquare q = p.without(Triple{0, 0, 0});
  CHECK(q.size() == 0);
  CHECK(code_of([&] { q.without(Triple{0, 0, 0}); }) == Errc::InvalidPartial);

  CHECK(code_of([] { PartialLatinSquare(0); }) == Errc::InvalidOrder);
  CHECK(code_of([] { PartialLatinSquare(kMaxOrder + 1); }) == Errc::InvalidOrder);
}

TEST_CASE("partial square from grids and triples") {
  PartialLatinSquare p = PartialLatinSquare::from_grid({{0, -1, -1}, {-1, 2, -1}, {-1, -1, -1}});
  CHECK(p.size() == 2);
  CHECK(p.at(1, 1) == 2);
  auto ts = p.triples();
  REQUIRE(ts.size() == 2);
  CHECK(ts[0] == Triple{0, 0, 0});  // row-major order
  CHECK(ts[1] == Triple{1, 1, 2});

  CHECK(code_of([] { PartialLatinSquare::from_grid({{0, 1}, {1}}); }) ==
        Errc::InvalidPartial);
  CHECK(code_of([] { PartialLatinSquare::from_grid({{0, 0}, {-1, -1}}); }) ==
        Errc::InvalidPartial);

  // duplicate triples collapse; conflicting ones do not
  auto q = PartialLatinSquare::from_triples(
      3, std::vector<Triple>{{0, 0, 0}, {0, 0, 0}, {1, 1, 2}});
  CHECK(q.size() == 2);
  CHECK(code_of([] {
          PartialLatinSquare::from_triples(3, std::vector<Triple>{{0, 0, 0}, {0, 0, 1}});
        }) == Errc::InvalidPartial);
}

TEST_CASE("full square validation") {
  LatinSquare sq = LatinSquare::from_grid(kL3);
  CHECK(sq.order() == 3);
  CHECK(sq.at(1, 1) == 2);
  CHECK(validate_square(kL3));
  CHECK_FALSE(validate_square({{0, 1}, {0, 1}}));          // column repeats
  CHECK_FALSE(validate_square({{0, 0}, {1, 1}}));          // row repeats
  CHECK(code_of([] { validate_square({{0, 1}, {1}}); }) == Errc::InvalidGrid);
  CHECK(code_of([] { validate_square({{0, 2}, {2, 0}}); }) == Errc::InvalidGrid);
  CHECK(code_of([] { validate_square({}); }) == Errc::InvalidGrid);
  CHECK(code_of([] { LatinSquare::from_grid({{0, 1}, {0, 1}}); }) == Errc::InvalidGrid);
  CHECK(code_of([] { LatinSquare::from_grid({{0, 0}, {1, 1}}); }) == Errc::InvalidGrid);

  // as_partial and from_partial round-trip
  PartialLatinSquare p = sq.as_partial();
  CHECK(p.full());
  CHECK(LatinSquare::from_partial(p) == sq);
  CHECK(code_of([] { LatinSquare::from_partial(PartialLatinSquare(2)); }) ==
        Errc::InvalidGrid);
}

TEST_CASE("cayley squares") {
  LatinSquare sq = cayley_square(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(sq.at(i, j) == (i + j) % 5);
  CHECK(code_of([] { cayley_square(0); }) == Errc::InvalidOrder);
}

TEST_CASE("random squares are valid and seed-deterministic") {
  LatinSquare a = random_square(10, 1234);
  LatinSquare b = random_square(10, 1234);
  CHECK(a == b);
  LatinSquare c = random_square(10, 1235);
  CHECK_FALSE(a == c);
  std::vector<std::vector<int>> grid;
  for (int r = 0; r < 10; ++r) {
    grid.emplace_back();
    for (int col = 0; col < 10; ++col) grid.back().push_back(a.at(r, col));
  }
  CHECK(validate_square(grid));
  CHECK(code_of([] { random_square(0, 1); }) == Errc::InvalidOrder);
  CHECK(code_of([] { random_square(kSolverMaxOrder + 1, 1); }) == Errc::OrderTooLarge);
}

TEST_CASE("completion counting matches the frozen enumeration") {
  CHECK(count_completions(PartialLatinSquare(1), 100) == 1);
  CHECK(count_completions(PartialLatinSquare(2), 100) == 2);
  CHECK(count_completions(PartialLatinSquare(3), 100) == 12);
  CHECK(count_completions(PartialLatinSquare(4), 1000) == 576);

  // limit caps the count
  CHECK(count_completions(PartialLatinSquare(4), 10) == 10);
  CHECK(code_of([] { count_completions(PartialLatinSquare(2), 0); }) ==
        Errc::SchemaViolation);

  // 4 order-3 squares contain (0,0,0)
  CHECK(count_completions(triples3({{0, 0, 0}}), 100) == 4);

  PartialLatinSquare big(kSolverMaxOrder + 1);
  CHECK(code_of([&] { count_completions(big, 2); }) == Errc::OrderTooLarge);
}

TEST_CASE("the three two-entry sets pin the same order-3 square") {
  LatinSquare l3 = LatinSquare::from_grid(kL3);
  std::vector<PartialLatinSquare> sets = {
      triples3({{0, 0, 0}, {1, 1, 2}}),
      triples3({{1, 1, 2}, {2, 2, 1}}),
      triples3({{0, 0, 0}, {2, 2, 1}}),
  };
  for (const auto& cs : sets) {
    CHECK(count_completions(cs, 10) == 1);
    CHECK(complete(cs) == l3);
    for (const Triple& t : cs.triples())
      CHECK(count_completions(cs.without(t), 10) == 4);
    CHECK(is_critical_set(cs));
    CHECK(is_strong_critical_set(cs));
  }
  // subsets are no longer critical, supersets are not minimal
  CHECK_FALSE(is_critical_set(triples3({{0, 0, 0}})));
  CHECK_FALSE(is_critical_set(triples3({{0, 0, 0}, {1, 1, 2}, {2, 2, 1}})));
}

TEST_CASE("first completion follows row-major cells and ascending symbols") {
  PartialLatinSquare left = PartialLatinSquare::from_triples(
      4, std::vector<Triple>{{0, 0, 0}, {0, 2, 3}, {1, 1, 2}, {2, 2, 1}, {3, 3, 3}});
  LatinSquare expected = LatinSquare::from_grid(
      {{0, 1, 3, 2}, {3, 2, 0, 1}, {2, 3, 1, 0}, {1, 0, 2, 3}});
  CHECK(complete(left) == expected);

  PartialLatinSquare right = PartialLatinSquare::from_triples(
      4, std::vector<Triple>{{0, 0, 0}, {0, 2, 3}, {0, 3, 1}, {3, 1, 2}});
  CHECK(count_completions(right, 10) == 0);
  CHECK(code_of([&] { complete(right); }) == Errc::NoCompletion);

  CHECK(complete(PartialLatinSquare(4)) ==
        LatinSquare::from_grid({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}}));

  LatinSquare l3 = LatinSquare::from_grid(kL3);
  CHECK(complete(l3.as_partial()) == l3);
}

TEST_CASE("force-out trace for the first two-entry set") {
  PartialLatinSquare c1 = triples3({{0, 0, 0}, {1, 1, 2}});
  ForceOutTrace trace = force_out(c1);
  std::vector<Triple> expected = {{0, 1, 1}, {0, 2, 2}, {1, 0, 1}, {1, 2, 0},
                                  {2, 0, 2}, {2, 1, 0}, {2, 2, 1}};
  CHECK(trace.start == c1);
  CHECK(trace.steps == expected);
  CHECK(trace.final_state.full());
  CHECK(LatinSquare::from_partial(trace.final_state) == LatinSquare::from_grid(kL3));

  ForceOutTrace col = force_out(c1, ScanOrder::ColumnMajor);
  CHECK(col.final_state == trace.final_state);

  // a cell with no candidates stops the scan immediately
  PartialLatinSquare stuck = PartialLatinSquare::from_triples(
      3, std::vector<Triple>{{0, 0, 0}, {0, 1, 1}, {1, 2, 2}});
  CHECK(code_of([&] { force_out(stuck); }) == Errc::Contradiction);

  // squares with nothing forced keep their state
  ForceOutTrace idle = force_out(PartialLatinSquare(3));
  CHECK(idle.steps.empty());
  CHECK(idle.final_state == PartialLatinSquare(3));
}

TEST_CASE("rectangle extension") {
  LatinSquare sq = extend_rectangle({{0, 1, 2, 3}});
  CHECK(sq.order() == 4);
  for (int c = 0; c < 4; ++c) CHECK(sq.at(0, c) == c);
  CHECK(extend_rectangle({{0, 1, 2, 3}}) == sq);  // deterministic

  LatinSquare two = extend_rectangle({{1, 0, 3, 2}, {0, 3, 2, 1}});
  CHECK(two.at(0, 0) == 1);
  CHECK(two.at(1, 1) == 3);

  CHECK(code_of([] { extend_rectangle({}); }) == Errc::InvalidRectangle);
  CHECK(code_of([] { extend_rectangle({{0, 1}, {1, 0}}); }) == Errc::InvalidRectangle);
  CHECK(code_of([] { extend_rectangle({{0, 1}, {1}}); }) == Errc::InvalidRectangle);
  CHECK(code_of([] { extend_rectangle({{0, 0, 1}}); }) == Errc::InvalidRectangle);
  CHECK(code_of([] { extend_rectangle({{0, 1, 2}, {0, 2, 1}}); }) ==
        Errc::InvalidRectangle);
  CHECK(code_of([] { extend_rectangle({{0, 3, 1}}); }) == Errc::InvalidRectangle);
}

TEST_CASE("exhaustive counts agree with an independent enumeration") {
  CHECK(enumerate_count(1) == 1);
  CHECK(enumerate_count(2) == 2);
  CHECK(enumerate_count(3) == 12);
  CHECK(enumerate_count(4) == 576);
  CHECK(perm_count(4) == 576);
  CHECK(perm_count(3) == 12);
  CHECK(code_of([] { enumerate_count(6); }) == Errc::OrderTooLarge);
  CHECK(code_of([] { enumerate_count(0); }) == Errc::InvalidOrder);
}

TEST_CASE("factorial-product lower bound") {
  namespace mp = boost::multiprecision;
  CHECK(count_lower_bound(2) == 2);
  CHECK(count_lower_bound(3) == 12);
  CHECK(count_lower_bound(4) == 288);
  CHECK(count_lower_bound(5) == 34560);
  CHECK(count_lower_bound(11) > mp::cpp_int("1000000000000000000"));
  CHECK(code_of([] { count_lower_bound(1); }) == Errc::InvalidOrder);
}

TEST_CASE("grid text round-trips") {
  LatinSquare sq = random_square(6, 99);
  RawGrid raw = parse_grid_text(format_grid_text(sq));
  CHECK(raw.order == 6);
  CHECK(raw.full());
  CHECK(LatinSquare::from_grid(raw.cells) == sq);

  PartialLatinSquare p = triples3({{0, 0, 0}, {1, 1, 2}});
  std::string text = format_grid_text(p);
  CHECK(text == "3\n0 . .\n. 2 .\n. . .\n");
  RawGrid praw = parse_grid_text(text);
  CHECK_FALSE(praw.full());
  CHECK(PartialLatinSquare::from_grid(praw.cells) == p);

  // tolerant of blank lines and extra spaces, strict about structure
  CHECK(parse_grid_text("\n 2 \n0 1\n1 0\n\n").order == 2);
  CHECK(code_of([] { parse_grid_text(""); }) == Errc::SchemaViolation);
  CHECK(code_of([] { parse_grid_text("x\n"); }) == Errc::SchemaViolation);
  CHECK(code_of([] { parse_grid_text("2 2\n0 1\n1 0\n"); }) == Errc::SchemaViolation);
  CHECK(code_of([] { parse_grid_text("2\n0 1\n"); }) == Errc::SchemaViolation);
  CHECK(code_of([] { parse_grid_text("2\n0 1 0\n1 0\n"); }) == Errc::SchemaViolation);
  CHECK(code_of([] { parse_grid_text("2\n0 1\n1 0\njunk\n"); }) == Errc::SchemaViolation);
  CHECK(code_of([] { parse_grid_text("2\n0 -1\n1 0\n"); }) == Errc::SchemaViolation);
}
