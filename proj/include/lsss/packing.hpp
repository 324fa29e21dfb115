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

#include <array>
#include <cstdint>

#include "lsss/latin.hpp"

namespace lsss {

// 32-byte packing of an order-10 square. Only 76 cells are stored: rows 0..3
// keep columns 0..8 and rows 4..8 keep columns 0..7; everything else is
// reconstructed on unpacking. The 76 digits are grouped in threes, each group
// packed as d0*100 + d1*10 + d2 into a 10-bit big-endian field (25 fields),
// then the 76th digit as a 4-bit field, then two zero bits.
struct Packed256 {
  std::array<uint8_t, 32> bytes{};
  bool operator==(const Packed256&) const = default;
};

// 48-byte packing of an order-10 square: one 4-bit nibble per cell for rows
// 0..8, columns 0..8 (81 nibbles), zero-padded to 48 bytes. Row 9 and column
// 9 are reconstructed as the per-line missing symbols.
struct Packed324 {
  std::array<uint8_t, 48> bytes{};
  bool operator==(const Packed324&) const = default;
};

Packed256 pack256(const LatinSquare& square);  // InvalidGrid unless order 10

// Rebuilds the full square. Rows 0..3 get their single missing symbol at
// column 9. Rows 4..8 (ascending) each miss two symbols {a, b}: whichever of
// them already occurs in column 8 among rows 0..3 and previously completed
// rows belongs at (row, 9) and the other at (row, 8); if neither occurs the
// row is ambiguous (NotRecoverable), if both occur the bytes cannot have come
// from a Latin square (CorruptPacking). Row 9 takes each column's missing
// symbol. Any decode or validation failure is CorruptPacking.
LatinSquare unpack256(const Packed256& packed);

// True iff unpack256(pack256(square)) succeeds and returns the same square.
bool is_recoverable256(const LatinSquare& square);

Packed256 pack256_from_bytes(std::span<const uint8_t> bytes);  // exactly 32
Packed324 pack324_from_bytes(std::span<const uint8_t> bytes);  // exactly 48

Packed324 pack324(const LatinSquare& square);  // InvalidGrid unless order 10
LatinSquare unpack324(const Packed324& packed);

// First output of random_square(10, seed + i), i = 0, 1, ..., that survives
// the 256-bit round trip. Deterministic per seed.
LatinSquare random_recoverable_square(uint64_t seed);

}  // namespace lsss
