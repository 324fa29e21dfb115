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

#include <functional>
#include <vector>

#include "doctest.h"
#include "lsss/latin.hpp"

using namespace lsss;

namespace {

// Bit oracle, independent of the BitWriter in the library: bit i of the
// stream is bit (7 - i % 8) of byte i / 8.
int bit_at(const uint8_t* bytes, size_t i) {
  return (bytes[i / 8] >> (7 - i % 8)) & 1;
}

uint32_t field_at(const uint8_t* bytes, size_t start, int width) {
  uint32_t v = 0;
  for (int k = 0; k < width; ++k) v = (v << 1) | uint32_t(bit_at(bytes, start + k));
  return v;
}

// The 76 retained digits of an order-10 square, in packing order.
std::vector<int> retained_digits(const LatinSquare& sq) {
  std::vector<int> d;
  for (int r = 0; r <= 3; ++r)
    for (int c = 0; c <= 8; ++c) d.push_back(sq.at(r, c));
  for (int r = 4; r <= 8; ++r)
    for (int c = 0; c <= 7; ++c) d.push_back(sq.at(r, c));
  return d;
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

TEST_CASE("256-bit layout matches the digit grouping") {
  LatinSquare sq = random_recoverable_square(77);
  Packed256 packed = pack256(sq);
  std::vector<int> d = retained_digits(sq);
  REQUIRE(d.size() == 76);
  for (int f = 0; f < 25; ++f) {
    uint32_t want = uint32_t(d[3 * f] * 100 + d[3 * f + 1] * 10 + d[3 * f + 2]);
    CHECK(field_at(packed.bytes.data(), size_t(f) * 10, 10) == want);
  }
  CHECK(field_at(packed.bytes.data(), 250, 4) == uint32_t(d[75]));
  CHECK(field_at(packed.bytes.data(), 254, 2) == 0);

  LatinSquare cay = cayley_square(10);
  CHECK(pack256(cay).bytes[0] == 0x03);  // digits 0,1,2 -> field 12
  CHECK(pack324(cay).bytes[0] == 0x01);  // nibbles 0,1
}

TEST_CASE("256-bit round trip on recoverable squares") {
  for (uint64_t seed : {1u, 2u, 3u, 40u, 500u}) {
    LatinSquare sq = random_recoverable_square(seed);
    CHECK(is_recoverable256(sq));
    CHECK(unpack256(pack256(sq)) == sq);
  }
  CHECK(random_recoverable_square(9) == random_recoverable_square(9));
}

TEST_CASE("ambiguous squares are reported, not silently mangled") {
  // in the cyclic square no row 4..8 has either missing symbol in column 8
  // above it, so the first ambiguous row already fails
  LatinSquare cay = cayley_square(10);
  CHECK_FALSE(is_recoverable256(cay));
  CHECK(code_of([&] { unpack256(pack256(cay)); }) == Errc::NotRecoverable);
}

TEST_CASE("corrupt 256-bit inputs are rejected") {
  Packed256 all_ones;
  all_ones.bytes.fill(0xff);
  CHECK(code_of([&] { unpack256(all_ones); }) == Errc::CorruptPacking);

  Packed256 good = pack256(random_recoverable_square(123));
  Packed256 bad = good;
  bad.bytes[31] |= 0x01;  // trailing padding bit
  CHECK(code_of([&] { unpack256(bad); }) == Errc::CorruptPacking);

  // zeroing the first field makes row 0 start 0,0,0: digits decode but the
  // reconstructed grid is not a Latin square
  Packed256 zeroed = good;
  zeroed.bytes[0] = 0;
  zeroed.bytes[1] &= 0x3f;
  CHECK(code_of([&] { unpack256(zeroed); }) == Errc::CorruptPacking);

  CHECK(code_of([] { pack256(cayley_square(9)); }) == Errc::InvalidGrid);
}

TEST_CASE("324-bit packing stores nine rows of nibbles") {
  LatinSquare cay = cayley_square(10);
  Packed324 packed = pack324(cay);
  for (int r = 0; r <= 8; ++r)
    for (int c = 0; c <= 8; ++c) {
      uint32_t nib = field_at(packed.bytes.data(), (size_t(r) * 9 + c) * 4, 4);
      CHECK(int(nib) == cay.at(r, c));
    }
  for (size_t bit = 324; bit < 384; ++bit) CHECK(bit_at(packed.bytes.data(), bit) == 0);
  CHECK(unpack324(packed) == cay);

  for (uint64_t seed : {11u, 12u, 13u}) {
    LatinSquare sq = random_square(10, seed);
    CHECK(unpack324(pack324(sq)) == sq);
  }
  CHECK(code_of([] { pack324(cayley_square(11)); }) == Errc::InvalidGrid);
}

TEST_CASE("corrupt 324-bit inputs are rejected") {
  Packed324 good = pack324(random_square(10, 5));

  Packed324 nib = good;
  nib.bytes[0] = 0xf0 | (nib.bytes[0] & 0x0f);  // nibble value 15
  CHECK(code_of([&] { unpack324(nib); }) == Errc::CorruptPacking);

  Packed324 pad = good;
  pad.bytes[47] = 0x01;  // nonzero padding
  CHECK(code_of([&] { unpack324(pad); }) == Errc::CorruptPacking);

  Packed324 dup = good;
  dup.bytes[0] = uint8_t((dup.bytes[0] & 0xf0) | ((dup.bytes[0] >> 4) & 0x0f));
  CHECK(code_of([&] { unpack324(dup); }) == Errc::CorruptPacking);  // row repeat
}

TEST_CASE("byte adapters enforce lengths") {
  Packed256 p = pack256(random_recoverable_square(1));
  CHECK(pack256_from_bytes(std::span<const uint8_t>(p.bytes.data(), 32)) == p);
  std::vector<uint8_t> short_buf(31, 0);
  CHECK(code_of([&] { pack256_from_bytes(short_buf); }) == Errc::LengthMismatch);

  Packed324 q = pack324(random_square(10, 2));
  CHECK(pack324_from_bytes(std::span<const uint8_t>(q.bytes.data(), 48)) == q);
  std::vector<uint8_t> long_buf(49, 0);
  CHECK(code_of([&] { pack324_from_bytes(long_buf); }) == Errc::LengthMismatch);
}
