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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lsss/error.hpp"

namespace lsss {

// Orders are bounded only to keep hostile inputs from allocating absurd
// grids; every algorithm that searches (completion, force-out) has the
// tighter kSolverMaxOrder bound because candidate sets are uint64 bitmasks.
inline constexpr int kMaxOrder = 4096;
inline constexpr int kSolverMaxOrder = 64;

// One filled cell: symbol `sym` at (row, col), all in 0..n-1.
struct Triple {
  int row = 0;
  int col = 0;
  int sym = 0;
  auto operator<=>(const Triple&) const = default;
};

class LatinSquare;

// Partially filled n x n grid: at most one symbol per cell and no symbol
// twice in a row or column. Value type; the "mutators" return copies.
class PartialLatinSquare {
 public:
  explicit PartialLatinSquare(int order);

  // -1 marks an empty cell. Throws InvalidPartial on conflicts or bad symbols.
  static PartialLatinSquare from_grid(const std::vector<std::vector<int>>& grid);
  static PartialLatinSquare from_triples(int order, std::span<const Triple> triples);

  int order() const { return order_; }
  int at(int row, int col) const;  // -1 when empty
  bool filled(int row, int col) const { return at(row, col) >= 0; }
  int size() const { return count_; }
  bool full() const { return count_ == order_ * order_; }
  bool contains(const Triple& t) const;
  std::vector<Triple> triples() const;  // row-major order

  PartialLatinSquare with(const Triple& t) const;     // add; InvalidPartial on conflict
  PartialLatinSquare without(const Triple& t) const;  // remove; InvalidPartial if absent

  bool operator==(const PartialLatinSquare&) const = default;

 private:
  int order_ = 0;
  int count_ = 0;
  std::vector<int16_t> cells_;  // row-major, -1 = empty

  friend class LatinSquare;
};

// Fully filled square: every row and every column is a permutation of 0..n-1.
class LatinSquare {
 public:
  static LatinSquare from_grid(const std::vector<std::vector<int>>& grid);  // InvalidGrid
  static LatinSquare from_partial(const PartialLatinSquare& p);             // must be full

  int order() const { return order_; }
  int at(int row, int col) const { return cells_[size_t(row) * order_ + col]; }
  PartialLatinSquare as_partial() const;

  bool operator==(const LatinSquare&) const = default;

 private:
  LatinSquare() = default;
  int order_ = 0;
  std::vector<int16_t> cells_;
};

// True iff every row and column of the grid is a permutation of 0..n-1.
// Malformed input (empty, ragged, symbol outside 0..n-1) throws InvalidGrid.
bool validate_square(const std::vector<std::vector<int>>& grid);

LatinSquare cayley_square(int n);  // cell (i, j) holds (i + j) mod n

// Deterministic per (n, seed): rows are filled top to bottom, each row by an
// augmenting-path matching that visits symbols in seeded-shuffled order.
LatinSquare random_square(int n, uint64_t seed);

// Number of completions of p, capped at limit (>= 1). Search order is
// row-major cells, ascending symbols.
int64_t count_completions(const PartialLatinSquare& p, int64_t limit);

// First completion in the same deterministic search order. NoCompletion if
// the partial square cannot be completed.
LatinSquare complete(const PartialLatinSquare& p);

enum class ScanOrder { RowMajor, ColumnMajor };

struct ForceOutTrace {
  PartialLatinSquare start;
  std::vector<Triple> steps;
  PartialLatinSquare final_state;
};

// Repeatedly fills the first empty cell (in scan order) whose candidate set
// is a singleton, restarting the scan after each placement, until no forced
// cell remains. An empty candidate set encountered during a scan throws
// Contradiction naming the cell.
ForceOutTrace force_out(const PartialLatinSquare& p, ScanOrder scan = ScanOrder::RowMajor);

// p has exactly one completion and every single-entry deletion breaks
// uniqueness.
bool is_critical_set(const PartialLatinSquare& p);

// Critical set whose force-out closure reaches the full square.
bool is_strong_critical_set(const PartialLatinSquare& p);

// Completes an m x n Latin rectangle (1 <= m < n full rows, each row a
// permutation, no column repeats) to an order-n square, filling rows top to
// bottom with columns processed ascending.
LatinSquare extend_rectangle(const std::vector<std::vector<int>>& rect);

// Exhaustive count of order-n Latin squares; n <= 5 (OrderTooLarge beyond).
int64_t enumerate_count(int n);

// Product 2! * 3! * ... * n!, a lower bound for the order-n square count.
boost::multiprecision::cpp_int count_lower_bound(int n);

// Text format: first line is the order n, then n lines of n space-separated
// tokens, each a decimal symbol or "." for an empty cell.
struct RawGrid {
  int order = 0;
  std::vector<std::vector<int>> cells;  // -1 = empty
  bool full() const;
};

RawGrid parse_grid_text(std::string_view text);  // SchemaViolation on bad shape
std::string format_grid_text(const PartialLatinSquare& p);
std::string format_grid_text(const LatinSquare& square);

}  // namespace lsss
