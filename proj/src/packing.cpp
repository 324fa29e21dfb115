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

#include "lsss/packing.hpp"

#include <algorithm>
#include <cstring>

namespace lsss {

namespace {

constexpr int kOrder = 10;

// MSB-first bit cursor over a fixed byte array.
struct BitWriter {
  uint8_t* out;
  size_t pos = 0;

  void put(uint32_t value, int bits) {
    for (int i = bits - 1; i >= 0; --i) {
      if (value >> i & 1) out[pos >> 3] |= uint8_t(0x80u >> (pos & 7));
      ++pos;
    }
  }
};

struct BitReader {
  const uint8_t* in;
  size_t pos = 0;

  uint32_t get(int bits) {
    uint32_t v = 0;
    for (int i = 0; i < bits; ++i) {
      v = (v << 1) | (in[pos >> 3] >> (7 - (pos & 7)) & 1);
      ++pos;
    }
    return v;
  }
};

// The 76 retained cells in row-major order.
std::vector<std::pair<int, int>> retained_cells() {
  std::vector<std::pair<int, int>> cells;
  cells.reserve(76);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 9; ++c) cells.emplace_back(r, c);
  for (int r = 4; r < 9; ++r)
    for (int c = 0; c < 8; ++c) cells.emplace_back(r, c);
  return cells;
}

void require_order10(const LatinSquare& square) {
  if (square.order() != kOrder)
    fail(Errc::InvalidGrid, "packing requires order 10, got " +
                                std::to_string(square.order()));
}

// Missing symbols of a line holding the given digits (0..9 each).
std::vector<int> missing_of(const std::vector<int>& digits) {
  bool seen[kOrder] = {};
  for (int d : digits) seen[d] = true;
  std::vector<int> out;
  for (int s = 0; s < kOrder; ++s)
    if (!seen[s]) out.push_back(s);
  return out;
}

LatinSquare finish_grid(std::vector<std::vector<int>>& grid) {
  if (!validate_square(grid))
    fail(Errc::CorruptPacking, "decoded grid is not a Latin square");
  return LatinSquare::from_grid(grid);
}

}  // namespace

Packed256 pack256(const LatinSquare& square) {
  require_order10(square);
  Packed256 out;
  BitWriter w{out.bytes.data()};
  auto cells = retained_cells();
  for (size_t i = 0; i + 3 <= 75; i += 3) {
    uint32_t v = 0;
    for (size_t j = 0; j < 3; ++j) {
      auto [r, c] = cells[i + j];
      v = v * 10 + uint32_t(square.at(r, c));
    }
    w.put(v, 10);
  }
  auto [lr, lc] = cells[75];
  w.put(uint32_t(square.at(lr, lc)), 4);
  w.put(0, 2);
  return out;
}

LatinSquare unpack256(const Packed256& packed) {
  BitReader rd{packed.bytes.data()};
  std::vector<int> digits;
  digits.reserve(76);
  for (int f = 0; f < 25; ++f) {
    uint32_t v = rd.get(10);
    if (v > 999)
      fail(Errc::CorruptPacking, "field " + std::to_string(f) + " exceeds 999");
    digits.push_back(int(v / 100));
    digits.push_back(int(v / 10 % 10));
    digits.push_back(int(v % 10));
  }
  uint32_t last = rd.get(4);
  if (last > 9) fail(Errc::CorruptPacking, "final digit exceeds 9");
  digits.push_back(int(last));
  if (rd.get(2) != 0) fail(Errc::CorruptPacking, "trailing bits are not zero");

  std::vector<std::vector<int>> grid(kOrder, std::vector<int>(kOrder, -1));
  auto cells = retained_cells();
  for (size_t i = 0; i < cells.size(); ++i) grid[cells[i].first][cells[i].second] = digits[i];

  // rows 0..3: one missing symbol, it sits in column 9
  for (int r = 0; r < 4; ++r) {
    std::vector<int> row(grid[r].begin(), grid[r].begin() + 9);
    auto miss = missing_of(row);
    if (miss.size() != 1)
      fail(Errc::CorruptPacking, "row " + std::to_string(r) + " repeats a symbol");
    grid[r][9] = miss[0];
  }

  // rows 4..8: two missing symbols; the one already present in column 8
  // (above this row) cannot go there again, so it lands in column 9
  for (int r = 4; r < 9; ++r) {
    std::vector<int> row(grid[r].begin(), grid[r].begin() + 8);
    auto miss = missing_of(row);
    if (miss.size() != 2)
      fail(Errc::CorruptPacking, "row " + std::to_string(r) + " repeats a symbol");
    bool in_col8[2] = {false, false};
    for (int rr = 0; rr < r; ++rr)
      for (int k = 0; k < 2; ++k)
        if (grid[rr][8] == miss[k]) in_col8[k] = true;
    if (in_col8[0] && in_col8[1])
      fail(Errc::CorruptPacking,
           "row " + std::to_string(r) + ": both missing symbols occur in column 8");
    if (!in_col8[0] && !in_col8[1])
      fail(Errc::NotRecoverable,
           "row " + std::to_string(r) + ": neither missing symbol occurs in column 8");
    int to9 = in_col8[0] ? miss[0] : miss[1];
    int to8 = in_col8[0] ? miss[1] : miss[0];
    grid[r][8] = to8;
    grid[r][9] = to9;
  }

  // row 9: each column's missing symbol
  for (int c = 0; c < kOrder; ++c) {
    std::vector<int> col;
    col.reserve(9);
    for (int r = 0; r < 9; ++r) col.push_back(grid[r][c]);
    auto miss = missing_of(col);
    if (miss.size() != 1)
      fail(Errc::CorruptPacking, "column " + std::to_string(c) + " repeats a symbol");
    grid[9][c] = miss[0];
  }
  return finish_grid(grid);
}

bool is_recoverable256(const LatinSquare& square) {
  require_order10(square);
  try {
    return unpack256(pack256(square)) == square;
  } catch (const Error& e) {
    if (e.code() == Errc::NotRecoverable || e.code() == Errc::CorruptPacking) return false;
    throw;
  }
}

Packed256 pack256_from_bytes(std::span<const uint8_t> bytes) {
  if (bytes.size() != 32)
    fail(Errc::LengthMismatch,
         "expected 32 bytes, got " + std::to_string(bytes.size()));
  Packed256 out;
  std::memcpy(out.bytes.data(), bytes.data(), 32);
  return out;
}

Packed324 pack324_from_bytes(std::span<const uint8_t> bytes) {
  if (bytes.size() != 48)
    fail(Errc::LengthMismatch,
         "expected 48 bytes, got " + std::to_string(bytes.size()));
  Packed324 out;
  std::memcpy(out.bytes.data(), bytes.data(), 48);
  return out;
}

Packed324 pack324(const LatinSquare& square) {
  require_order10(square);
  Packed324 out;
  BitWriter w{out.bytes.data()};
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) w.put(uint32_t(square.at(r, c)), 4);
  return out;
}

LatinSquare unpack324(const Packed324& packed) {
  BitReader rd{packed.bytes.data()};
  std::vector<std::vector<int>> grid(kOrder, std::vector<int>(kOrder, -1));
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) {
      uint32_t v = rd.get(4);
      if (v > 9)
        fail(Errc::CorruptPacking, "nibble at " + std::to_string(r) + "," +
                                       std::to_string(c) + " exceeds 9");
      grid[r][c] = int(v);
    }
  while (rd.pos < 48 * 8)
    if (rd.get(4) != 0) fail(Errc::CorruptPacking, "padding nibbles are not zero");

  for (int r = 0; r < 9; ++r) {
    std::vector<int> row(grid[r].begin(), grid[r].begin() + 9);
    auto miss = missing_of(row);
    if (miss.size() != 1)
      fail(Errc::CorruptPacking, "row " + std::to_string(r) + " repeats a symbol");
    grid[r][9] = miss[0];
  }
  for (int c = 0; c < kOrder; ++c) {
    std::vector<int> col;
    col.reserve(9);
    for (int r = 0; r < 9; ++r) col.push_back(grid[r][c]);
    auto miss = missing_of(col);
    if (miss.size() != 1)
      fail(Errc::CorruptPacking, "column " + std::to_string(c) + " repeats a symbol");
    grid[9][c] = miss[0];
  }
  return finish_grid(grid);
}

LatinSquare random_recoverable_square(uint64_t seed) {
  for (uint64_t i = 0;; ++i) {
    LatinSquare sq = random_square(kOrder, seed + i);
    if (is_recoverable256(sq)) return sq;
  }
}

}  // namespace lsss
