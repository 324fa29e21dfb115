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
#include <bit>
#include <cassert>
#include <charconv>
#include <functional>
#include <limits>
#include <sstream>

#include "lsss/rng.hpp"

namespace lsss {

namespace {

std::string cell_name(int r, int c) {
  return "(" + std::to_string(r) + ", " + std::to_string(c) + ")";
}

}  // namespace

// ---------------------------------------------------------------------------
// PartialLatinSquare

PartialLatinSquare::PartialLatinSquare(int order) : order_(order) {
  if (order < 1 || order > kMaxOrder)
    fail(Errc::InvalidOrder, "order must be in 1.." + std::to_string(kMaxOrder) +
                                 ", got " + std::to_string(order));
  cells_.assign(size_t(order) * order, int16_t(-1));
}

PartialLatinSquare PartialLatinSquare::from_grid(const std::vector<std::vector<int>>& grid) {
  int n = int(grid.size());
  if (n < 1 || n > kMaxOrder)
    fail(Errc::InvalidPartial, "grid must have 1.." + std::to_string(kMaxOrder) + " rows");
  PartialLatinSquare p(n);
  for (int r = 0; r < n; ++r) {
    if (int(grid[r].size()) != n)
      fail(Errc::InvalidPartial, "row " + std::to_string(r) + " has " +
                                     std::to_string(grid[r].size()) + " cells, expected " +
                                     std::to_string(n));
    for (int c = 0; c < n; ++c) {
      int v = grid[r][c];
      if (v == -1) continue;
      p = p.with(Triple{r, c, v});
    }
  }
  return p;
}

PartialLatinSquare PartialLatinSquare::from_triples(int order, std::span<const Triple> triples) {
  PartialLatinSquare p(order);
  for (const Triple& t : triples) {
    if (p.contains(t)) continue;  // set semantics: exact duplicates collapse
    p = p.with(t);
  }
  return p;
}

int PartialLatinSquare::at(int row, int col) const {
  assert(row >= 0 && row < order_ && col >= 0 && col < order_);
  return cells_[size_t(row) * order_ + col];
}

bool PartialLatinSquare::contains(const Triple& t) const {
  if (t.row < 0 || t.row >= order_ || t.col < 0 || t.col >= order_) return false;
  return at(t.row, t.col) == t.sym;
}

std::vector<Triple> PartialLatinSquare::triples() const {
  std::vector<Triple> out;
  out.reserve(size_t(count_));
  for (int r = 0; r < order_; ++r)
    for (int c = 0; c < order_; ++c)
      if (at(r, c) >= 0) out.push_back(Triple{r, c, at(r, c)});
  return out;
}

PartialLatinSquare PartialLatinSquare::with(const Triple& t) const {
  if (t.row < 0 || t.row >= order_ || t.col < 0 || t.col >= order_ || t.sym < 0 ||
      t.sym >= order_)
    fail(Errc::InvalidPartial, "triple out of range for order " + std::to_string(order_));
  int existing = at(t.row, t.col);
  if (existing == t.sym) return *this;
  if (existing >= 0)
    fail(Errc::InvalidPartial, "cell " + cell_name(t.row, t.col) + " already holds " +
                                   std::to_string(existing));
  for (int c = 0; c < order_; ++c)
    if (at(t.row, c) == t.sym)
      fail(Errc::InvalidPartial,
           "symbol " + std::to_string(t.sym) + " repeats in row " + std::to_string(t.row));
  for (int r = 0; r < order_; ++r)
    if (at(r, t.col) == t.sym)
      fail(Errc::InvalidPartial,
           "symbol " + std::to_string(t.sym) + " repeats in column " + std::to_string(t.col));
  PartialLatinSquare out = *this;
  out.cells_[size_t(t.row) * order_ + t.col] = int16_t(t.sym);
  out.count_ += 1;
  return out;
}

PartialLatinSquare PartialLatinSquare::without(const Triple& t) const {
  if (!contains(t))
    fail(Errc::InvalidPartial, "triple not present at " + cell_name(t.row, t.col));
  PartialLatinSquare out = *this;
  out.cells_[size_t(t.row) * order_ + t.col] = int16_t(-1);
  out.count_ -= 1;
  return out;
}

// ---------------------------------------------------------------------------
// LatinSquare

LatinSquare LatinSquare::from_grid(const std::vector<std::vector<int>>& grid) {
  int n = int(grid.size());
  if (n < 1 || n > kMaxOrder)
    fail(Errc::InvalidGrid, "grid must have 1.." + std::to_string(kMaxOrder) + " rows");
  LatinSquare sq;
  sq.order_ = n;
  sq.cells_.assign(size_t(n) * n, 0);
  // seen[x] marks symbol x in the current line
  std::vector<char> seen(size_t(n), 0);
  for (int r = 0; r < n; ++r) {
    if (int(grid[r].size()) != n)
      fail(Errc::InvalidGrid, "row " + std::to_string(r) + " has " +
                                  std::to_string(grid[r].size()) + " cells, expected " +
                                  std::to_string(n));
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      int v = grid[r][c];
      if (v < 0 || v >= n)
        fail(Errc::InvalidGrid, "symbol " + std::to_string(v) + " at " + cell_name(r, c) +
                                    " outside 0.." + std::to_string(n - 1));
      if (seen[v])
        fail(Errc::InvalidGrid, "row " + std::to_string(r) + " repeats symbol " +
                                    std::to_string(v));
      seen[v] = 1;
      sq.cells_[size_t(r) * n + c] = int16_t(v);
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      int v = sq.at(r, c);
      if (seen[v])
        fail(Errc::InvalidGrid, "column " + std::to_string(c) + " repeats symbol " +
                                    std::to_string(v));
      seen[v] = 1;
    }
  }
  return sq;
}

LatinSquare LatinSquare::from_partial(const PartialLatinSquare& p) {
  if (!p.full()) fail(Errc::InvalidGrid, "partial square is not fully filled");
  LatinSquare sq;
  sq.order_ = p.order_;
  sq.cells_ = p.cells_;
  return sq;
}

PartialLatinSquare LatinSquare::as_partial() const {
  PartialLatinSquare p(order_);
  p.cells_ = cells_;
  p.count_ = order_ * order_;
  return p;
}

// ---------------------------------------------------------------------------
// validation and generators

bool validate_square(const std::vector<std::vector<int>>& grid) {
  int n = int(grid.size());
  if (n < 1 || n > kMaxOrder)
    fail(Errc::InvalidGrid, "grid must have 1.." + std::to_string(kMaxOrder) + " rows");
  std::vector<char> seen(size_t(n), 0);
  for (int r = 0; r < n; ++r) {
    if (int(grid[r].size()) != n)
      fail(Errc::InvalidGrid, "row " + std::to_string(r) + " has " +
                                  std::to_string(grid[r].size()) + " cells, expected " +
                                  std::to_string(n));
    for (int c = 0; c < n; ++c) {
      int v = grid[r][c];
      if (v < 0 || v >= n)
        fail(Errc::InvalidGrid, "symbol " + std::to_string(v) + " at " + cell_name(r, c) +
                                    " outside 0.." + std::to_string(n - 1));
    }
  }
  for (int r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int c = 0; c < n; ++c) {
      if (seen[grid[r][c]]) return false;
      seen[grid[r][c]] = 1;
    }
  }
  for (int c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int r = 0; r < n; ++r) {
      if (seen[grid[r][c]]) return false;
      seen[grid[r][c]] = 1;
    }
  }
  return true;
}

LatinSquare cayley_square(int n) {
  if (n < 1 || n > kMaxOrder)
    fail(Errc::InvalidOrder, "order must be in 1.." + std::to_string(kMaxOrder));
  std::vector<std::vector<int>> grid(size_t(n), std::vector<int>(size_t(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) grid[i][j] = (i + j) % n;
  return LatinSquare::from_grid(grid);
}

namespace {

// Kuhn augmenting-path matching for one new row: assigns each column a
// symbol not yet used in that column, visiting candidates in prefs order.
// owner[sym] is the column currently holding sym.
bool augment_row(int col, const std::vector<std::vector<int>>& prefs,
                 const std::vector<uint64_t>& col_used, std::vector<int>& owner,
                 std::vector<char>& visited) {
  for (int sym : prefs[col]) {
    if (col_used[col] >> sym & 1) continue;
    if (visited[sym]) continue;
    visited[sym] = 1;
    if (owner[sym] < 0 || augment_row(owner[sym], prefs, col_used, owner, visited)) {
      owner[sym] = col;
      return true;
    }
  }
  return false;
}

// Fills one row against per-column used-symbol masks; empty result means no
// perfect matching exists (never the case when the rows so far form a Latin
// rectangle, by Hall's theorem).
std::vector<int> match_row(int n, const std::vector<uint64_t>& col_used,
                           const std::vector<std::vector<int>>& prefs) {
  std::vector<int> owner(size_t(n), -1);
  std::vector<char> visited(size_t(n), 0);
  for (int col = 0; col < n; ++col) {
    std::fill(visited.begin(), visited.end(), 0);
    if (!augment_row(col, prefs, col_used, owner, visited)) return {};
  }
  std::vector<int> row(size_t(n), 0);
  for (int sym = 0; sym < n; ++sym)
    if (owner[sym] >= 0) row[size_t(owner[sym])] = sym;
  return row;
}

}  // namespace

LatinSquare random_square(int n, uint64_t seed) {
  if (n < 1) fail(Errc::InvalidOrder, "order must be >= 1");
  if (n > kSolverMaxOrder)
    fail(Errc::OrderTooLarge, "generation is limited to order " +
                                  std::to_string(kSolverMaxOrder));
  std::mt19937_64 rng(seed);
  std::vector<uint64_t> col_used(size_t(n), 0);
  std::vector<std::vector<int>> grid;
  grid.reserve(size_t(n));
  std::vector<std::vector<int>> prefs;
  prefs.resize(size_t(n));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      prefs[c].resize(size_t(n));
      for (int s = 0; s < n; ++s) prefs[c][s] = s;
      seeded_shuffle(prefs[c], rng);
    }
    std::vector<int> row = match_row(n, col_used, prefs);
    assert(!row.empty());
    for (int c = 0; c < n; ++c) col_used[c] |= 1ull << row[c];
    grid.push_back(std::move(row));
  }
  return LatinSquare::from_grid(grid);
}

// ---------------------------------------------------------------------------
// completion solver

namespace {

// Backtracking state over uint64 candidate masks, hence the order bound.
struct Solver {
  int n;
  uint64_t full_mask;
  std::vector<int16_t> cells;
  std::vector<uint64_t> row_used, col_used;
  std::vector<int> empties;  // row-major indices of empty cells

  explicit Solver(const PartialLatinSquare& p) : n(p.order()) {
    if (n > kSolverMaxOrder)
      fail(Errc::OrderTooLarge,
           "search is limited to order " + std::to_string(kSolverMaxOrder));
    full_mask = (n == 64) ? ~0ull : (1ull << n) - 1;
    cells.assign(size_t(n) * n, int16_t(-1));
    row_used.assign(size_t(n), 0);
    col_used.assign(size_t(n), 0);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        int v = p.at(r, c);
        if (v >= 0) {
          cells[size_t(r) * n + c] = int16_t(v);
          row_used[r] |= 1ull << v;
          col_used[c] |= 1ull << v;
        } else {
          empties.push_back(r * n + c);
        }
      }
  }

  uint64_t candidates(int r, int c) const {
    return full_mask & ~(row_used[r] | col_used[c]);
  }

  void place(int r, int c, int s) {
    cells[size_t(r) * n + c] = int16_t(s);
    row_used[r] |= 1ull << s;
    col_used[c] |= 1ull << s;
  }

  void unplace(int r, int c, int s) {
    cells[size_t(r) * n + c] = int16_t(-1);
    row_used[r] &= ~(1ull << s);
    col_used[c] &= ~(1ull << s);
  }

  PartialLatinSquare snapshot(const PartialLatinSquare& like) const {
    PartialLatinSquare out(like.order());
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        int v = cells[size_t(r) * n + c];
        if (v >= 0) out = out.with(Triple{r, c, v});
      }
    return out;
  }
};

// Counts completions below `limit`, exploring cells row-major and symbols
// ascending.
int64_t count_rec(Solver& s, size_t k, int64_t limit) {
  if (k == s.empties.size()) return 1;
  int idx = s.empties[k];
  int r = idx / s.n, c = idx % s.n;
  uint64_t avail = s.candidates(r, c);
  int64_t total = 0;
  while (avail) {
    int sym = std::countr_zero(avail);
    avail &= avail - 1;
    s.place(r, c, sym);
    total += count_rec(s, k + 1, limit - total);
    s.unplace(r, c, sym);
    if (total >= limit) return total;
  }
  return total;
}

bool first_rec(Solver& s, size_t k) {
  if (k == s.empties.size()) return true;
  int idx = s.empties[k];
  int r = idx / s.n, c = idx % s.n;
  uint64_t avail = s.candidates(r, c);
  while (avail) {
    int sym = std::countr_zero(avail);
    avail &= avail - 1;
    s.place(r, c, sym);
    if (first_rec(s, k + 1)) return true;
    s.unplace(r, c, sym);
  }
  return false;
}

}  // namespace

int64_t count_completions(const PartialLatinSquare& p, int64_t limit) {
  if (limit < 1) fail(Errc::SchemaViolation, "limit must be >= 1");
  Solver s(p);
  return count_rec(s, 0, limit);
}

LatinSquare complete(const PartialLatinSquare& p) {
  Solver s(p);
  if (!first_rec(s, 0)) fail(Errc::NoCompletion, "partial square has no completion");
  std::vector<std::vector<int>> grid(size_t(s.n), std::vector<int>(size_t(s.n), 0));
  for (int r = 0; r < s.n; ++r)
    for (int c = 0; c < s.n; ++c) grid[r][c] = s.cells[size_t(r) * s.n + c];
  return LatinSquare::from_grid(grid);
}

ForceOutTrace force_out(const PartialLatinSquare& p, ScanOrder scan) {
  Solver s(p);
  std::vector<Triple> steps;
  bool placed = true;
  while (placed) {
    placed = false;
    for (int i = 0; i < s.n * s.n; ++i) {
      int r = (scan == ScanOrder::RowMajor) ? i / s.n : i % s.n;
      int c = (scan == ScanOrder::RowMajor) ? i % s.n : i / s.n;
      if (s.cells[size_t(r) * s.n + c] >= 0) continue;
      uint64_t cand = s.candidates(r, c);
      if (cand == 0)
        fail(Errc::Contradiction, "cell " + cell_name(r, c) + " has no candidates");
      if (std::has_single_bit(cand)) {
        int sym = std::countr_zero(cand);
        s.place(r, c, sym);
        steps.push_back(Triple{r, c, sym});
        placed = true;
        break;
      }
    }
  }
  return ForceOutTrace{p, std::move(steps), s.snapshot(p)};
}

bool is_critical_set(const PartialLatinSquare& p) {
  if (count_completions(p, 2) != 1) return false;
  for (const Triple& t : p.triples())
    if (count_completions(p.without(t), 2) < 2) return false;
  return true;
}

bool is_strong_critical_set(const PartialLatinSquare& p) {
  if (!is_critical_set(p)) return false;
  return force_out(p).final_state.full();
}

LatinSquare extend_rectangle(const std::vector<std::vector<int>>& rect) {
  int m = int(rect.size());
  if (m < 1) fail(Errc::InvalidRectangle, "rectangle must have at least one row");
  int n = int(rect[0].size());
  if (m >= n) fail(Errc::InvalidRectangle, "rectangle must have fewer rows than columns");
  if (n > kSolverMaxOrder)
    fail(Errc::OrderTooLarge,
         "extension is limited to order " + std::to_string(kSolverMaxOrder));
  std::vector<uint64_t> col_used(size_t(n), 0);
  for (int r = 0; r < m; ++r) {
    if (int(rect[r].size()) != n)
      fail(Errc::InvalidRectangle, "row " + std::to_string(r) + " has " +
                                       std::to_string(rect[r].size()) + " cells, expected " +
                                       std::to_string(n));
    uint64_t row_mask = 0;
    for (int c = 0; c < n; ++c) {
      int v = rect[r][c];
      if (v < 0 || v >= n)
        fail(Errc::InvalidRectangle, "symbol " + std::to_string(v) + " at " +
                                         cell_name(r, c) + " outside 0.." +
                                         std::to_string(n - 1));
      if (row_mask >> v & 1)
        fail(Errc::InvalidRectangle,
             "row " + std::to_string(r) + " repeats symbol " + std::to_string(v));
      if (col_used[c] >> v & 1)
        fail(Errc::InvalidRectangle,
             "column " + std::to_string(c) + " repeats symbol " + std::to_string(v));
      row_mask |= 1ull << v;
      col_used[c] |= 1ull << v;
    }
  }
  std::vector<std::vector<int>> grid = rect;
  std::vector<std::vector<int>> prefs(size_t(n), std::vector<int>(size_t(n), 0));
  for (int c = 0; c < n; ++c)
    for (int s = 0; s < n; ++s) prefs[c][s] = s;  // ascending keeps it deterministic
  for (int r = m; r < n; ++r) {
    std::vector<int> row = match_row(n, col_used, prefs);
    assert(!row.empty());
    for (int c = 0; c < n; ++c) col_used[c] |= 1ull << row[c];
    grid.push_back(std::move(row));
  }
  return LatinSquare::from_grid(grid);
}

int64_t enumerate_count(int n) {
  if (n < 1) fail(Errc::InvalidOrder, "order must be >= 1");
  if (n > 5) fail(Errc::OrderTooLarge, "exhaustive enumeration is limited to order 5");
  return count_completions(PartialLatinSquare(n), std::numeric_limits<int64_t>::max());
}

boost::multiprecision::cpp_int count_lower_bound(int n) {
  if (n < 2) fail(Errc::InvalidOrder, "order must be >= 2");
  boost::multiprecision::cpp_int out = 1;
  for (int k = 2; k <= n; ++k) {
    boost::multiprecision::cpp_int f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    out *= f;
  }
  return out;
}

// ---------------------------------------------------------------------------
// text format

bool RawGrid::full() const {
  for (const auto& row : cells)
    for (int v : row)
      if (v < 0) return false;
  return true;
}

RawGrid parse_grid_text(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == '\n') {
        lines.push_back(cur);
        cur.clear();
      } else if (ch != '\r') {
        cur.push_back(ch);
      }
    }
    if (!cur.empty()) lines.push_back(cur);
  }
  auto tokenize = [](const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream in(line);
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
  };
  size_t li = 0;
  while (li < lines.size() && tokenize(lines[li]).empty()) ++li;
  if (li >= lines.size()) fail(Errc::SchemaViolation, "line 1: missing order");
  auto head = tokenize(lines[li]);
  if (head.size() != 1)
    fail(Errc::SchemaViolation, "line 1: expected a single order token");
  int n = 0;
  auto [p1, e1] = std::from_chars(head[0].data(), head[0].data() + head[0].size(), n);
  if (e1 != std::errc() || p1 != head[0].data() + head[0].size() || n < 1 || n > kMaxOrder)
    fail(Errc::SchemaViolation, "line 1: order must be an integer in 1.." +
                                    std::to_string(kMaxOrder));
  ++li;
  RawGrid out;
  out.order = n;
  out.cells.assign(size_t(n), std::vector<int>(size_t(n), -1));
  for (int r = 0; r < n; ++r, ++li) {
    if (li >= lines.size())
      fail(Errc::SchemaViolation, "grid row " + std::to_string(r) + " is missing");
    auto toks = tokenize(lines[li]);
    if (int(toks.size()) != n)
      fail(Errc::SchemaViolation, "grid row " + std::to_string(r) + " has " +
                                      std::to_string(toks.size()) + " tokens, expected " +
                                      std::to_string(n));
    for (int c = 0; c < n; ++c) {
      const std::string& t = toks[c];
      if (t == ".") continue;
      int v = 0;
      auto [p2, e2] = std::from_chars(t.data(), t.data() + t.size(), v);
      if (e2 != std::errc() || p2 != t.data() + t.size() || v < 0)
        fail(Errc::SchemaViolation, "grid row " + std::to_string(r) + " token " +
                                        std::to_string(c) + ": expected a symbol or '.'");
      out.cells[r][c] = v;
    }
  }
  for (; li < lines.size(); ++li)
    if (!tokenize(lines[li]).empty())
      fail(Errc::SchemaViolation, "unexpected content after the grid");
  return out;
}

namespace {

std::string format_rows(int n, const std::function<int(int, int)>& at) {
  std::string out = std::to_string(n) + "\n";
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (c) out.push_back(' ');
      int v = at(r, c);
      if (v < 0)
        out.push_back('.');
      else
        out += std::to_string(v);
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace

std::string format_grid_text(const PartialLatinSquare& p) {
  return format_rows(p.order(), [&](int r, int c) { return p.at(r, c); });
}

std::string format_grid_text(const LatinSquare& square) {
  return format_rows(square.order(), [&](int r, int c) { return square.at(r, c); });
}

}  // namespace lsss
