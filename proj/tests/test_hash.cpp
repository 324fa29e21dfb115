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

#include "lsss/hash.hpp"

#include <functional>
#include <set>
#include <vector>

#include "doctest.h"
#include "lsss/hex.hpp"

using namespace lsss;

namespace {

Block blk(std::initializer_list<uint8_t> bytes) {
  Block b{};
  size_t i = 0;
  for (uint8_t v : bytes) b[i++] = v;
  return b;
}

std::vector<uint8_t> bytes_of(const char* s) {
  return std::vector<uint8_t>(s, s + std::char_traits<char>::length(s));
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

TEST_CASE("digest width validation") {
  for (int bits : {8, 16, 24, 32, 40}) CHECK(HashParams(bits).digest_bits == bits);
  for (int bits : {0, -8, 4, 12, 48, 64, 256})
    CHECK(code_of([&] { HashParams{bits}; }) == Errc::InvalidDigestBits);
  CHECK(HashParams(24).digest_bytes() == 3);
}

TEST_CASE("initial values are fixed per width") {
  CHECK(iv(HashParams(8)).value == 0x31);
  CHECK(iv(HashParams(16)).value == 0x1232);
  CHECK(iv(HashParams(24)).value == 0x2c4ded);
  CHECK(iv(HashParams(32)).value == 0x375a70c3);
  CHECK(iv(HashParams(40)).value == 0xea68ef008bull);
}

TEST_CASE("compression golden values") {
  Block zero = blk({});
  Block ff = blk({0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff, 0xff});
  Block asc = blk({0x00, 0x01, 0x02, 0x03, 0x04, 0x05, 0x06, 0x07});
  Block mix = blk({0x00, 0x11, 0x22, 0x33, 0x44, 0x55, 0x66, 0x77});

  HashParams h8(8);
  CHECK(compress(h8, ChainState{0}, zero).value == 0x3e);
  CHECK(compress(h8, iv(h8), zero).value == 0x2c);
  CHECK(compress(h8, ChainState{0xab}, ff).value == 0x84);

  HashParams h16(16);
  CHECK(compress(h16, ChainState{0}, zero).value == 0x01d4);
  CHECK(compress(h16, iv(h16), zero).value == 0xa668);
  CHECK(compress(h16, ChainState{0x1234}, asc).value == 0xec86);

  HashParams h32(32);
  CHECK(compress(h32, ChainState{0}, zero).value == 0x15ec7bf0);
  CHECK(compress(h32, iv(h32), zero).value == 0x773afb81);
  CHECK(compress(h32, ChainState{0xdeadbeef}, mix).value == 0x821e5594);
}

TEST_CASE("full-message golden values") {
  HashParams h8(8);
  CHECK(hash_full(h8, {}).value == 0xed);
  CHECK(hash_full(h8, bytes_of("abc")).value == 0xd8);

  HashParams h16(16);
  CHECK(hash_full(h16, {}).value == 0x82d5);
  CHECK(hash_full(h16, bytes_of("abc")).value == 0x3539);
  std::vector<uint8_t> one0 = {0x00};
  std::vector<uint8_t> one1 = {0x01};
  CHECK(hash_full(h16, one0).value == 0x3c7c);
  CHECK(hash_full(h16, one1).value == 0x0c14);

  HashParams h32(32);
  CHECK(hash_full(h32, {}).value == 0xaceae995);
  CHECK(hash_full(h32, bytes_of("abc")).value == 0x21521eed);
}

TEST_CASE("padding is strengthened and block-aligned") {
  auto empty = pad_message({});
  REQUIRE(empty.size() == 2);
  CHECK(empty[0] == blk({0x80}));
  CHECK(empty[1] == blk({}));

  auto abc = pad_message(bytes_of("abc"));
  REQUIRE(abc.size() == 2);
  CHECK(abc[0] == blk({0x61, 0x62, 0x63, 0x80}));
  CHECK(abc[1] == blk({0, 0, 0, 0, 0, 0, 0x00, 0x18}));  // 24 bits

  // a whole block of message leaves no room for 0x80, so padding adds two
  // more blocks
  std::vector<uint8_t> eight(8, 0xaa);
  auto padded = pad_message(eight);
  REQUIRE(padded.size() == 3);
  CHECK(padded[0] == blk({0xaa, 0xaa, 0xaa, 0xaa, 0xaa, 0xaa, 0xaa, 0xaa}));
  CHECK(padded[1] == blk({0x80}));
  CHECK(padded[2] == blk({0, 0, 0, 0, 0, 0, 0, 0x40}));  // 64 bits

  auto seven = pad_message(std::vector<uint8_t>(7, 1));
  REQUIRE(seven.size() == 2);
  CHECK(seven[0][7] == 0x80);
}

TEST_CASE("iteration folds block lists") {
  HashParams hp(16);
  std::vector<Block> blocks = {blk({1}), blk({2}), blk({3})};
  ChainState s = iv(hp);
  CHECK(iterate(hp, s, {}) == s);
  ChainState manual = compress(hp, compress(hp, compress(hp, s, blocks[0]), blocks[1]), blocks[2]);
  CHECK(iterate(hp, s, blocks) == manual);
  std::vector<Block> head(blocks.begin(), blocks.begin() + 2);
  std::vector<Block> tail(blocks.begin() + 2, blocks.end());
  CHECK(iterate(hp, iterate(hp, s, head), tail) == manual);
}

TEST_CASE("state encoding and hex helpers") {
  HashParams hp(32);
  auto enc = encode_state(hp, ChainState{0x01020304});
  CHECK(enc == std::vector<uint8_t>({1, 2, 3, 4}));
  CHECK(state_hex(hp, ChainState{0x01020304}) == "01020304");
  CHECK(state_hex(HashParams(8), ChainState{0x0f}) == "0f");
  CHECK(block_hex(blk({0xde, 0xad, 0, 0, 0, 0, 0xbe, 0xef})) == "dead00000000beef");

  std::vector<uint8_t> raw = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
  auto bl = bytes_to_blocks(raw);
  REQUIRE(bl.size() == 2);
  CHECK(blocks_to_bytes(bl) == raw);
  std::vector<uint8_t> ragged(9, 0);
  CHECK(code_of([&] { bytes_to_blocks(ragged); }) == Errc::UnalignedPrefix);
}

TEST_CASE("compression output always fits the width") {
  HashParams hp(8);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 1000; ++i) {
    ChainState s{rng() & 0xff};
    CHECK(compress(hp, s, random_block(rng)).value < 256);
  }
}

TEST_CASE("collision search returns verified witnesses") {
  HashParams hp(16);
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    ChainState a{rng() & 0xffff};
    ChainState b{rng() & 0xffff};
    CollisionResult col = find_collision(hp, a, b, rng());
    CHECK(compress(hp, a, col.block_a) == compress(hp, b, col.block_b));
    if (a != b) CHECK(col.probes > 0);
  }

  // equal states collide trivially with the same block
  CollisionResult same = find_collision(hp, ChainState{5}, ChainState{5}, 1);
  CHECK(same.block_a == same.block_b);
  CHECK(same.probes == 0);

  CollisionResult x = find_collision(hp, ChainState{1}, ChainState{2}, 99);
  CollisionResult y = find_collision(hp, ChainState{1}, ChainState{2}, 99);
  CHECK(x.block_a == y.block_a);
  CHECK(x.block_b == y.block_b);
  CHECK(x.probes == y.probes);
}

TEST_CASE("diamond construction and linking") {
  HashParams hp(16);
  std::vector<ChainState> leaves = {{0x0101}, {0x0202}, {0x0303}, {0x0404}};
  Diamond dia = build_diamond(hp, leaves, 9);
  CHECK(dia.height() == 2);
  CHECK(dia.leaf_count() == 4);
  CHECK(dia.levels[0] == leaves);
  CHECK(dia.build_probes > 0);
  check_diamond(dia);

  for (size_t i = 0; i < 4; ++i) {
    auto path = linking_path(dia, i);
    CHECK(path.size() == 2);
    CHECK(iterate(hp, leaves[i], path) == dia.root());
  }
  CHECK(code_of([&] { linking_path(dia, 4); }) == Errc::IndexOutOfRange);

  Diamond again = build_diamond(hp, leaves, 9);
  CHECK(again.levels == dia.levels);
  CHECK(again.edge_blocks == dia.edge_blocks);

  std::vector<ChainState> two = {{1}, {2}};
  CHECK(build_diamond(hp, two, 3).height() == 1);

  std::vector<ChainState> three = {{1}, {2}, {3}};
  CHECK(code_of([&] { build_diamond(hp, three, 3); }) == Errc::InvalidLeafCount);
  std::vector<ChainState> one = {{1}};
  CHECK(code_of([&] { build_diamond(hp, one, 3); }) == Errc::InvalidLeafCount);
  CHECK(code_of([&] { build_diamond(hp, {}, 3); }) == Errc::InvalidLeafCount);
  std::vector<ChainState> dup = {{1}, {2}, {1}, {3}};
  CHECK(code_of([&] { build_diamond(hp, dup, 3); }) == Errc::DuplicateLeaf);
}

TEST_CASE("diamond consistency checks catch tampering") {
  HashParams hp(16);
  std::vector<ChainState> leaves = {{10}, {20}, {30}, {40}};
  Diamond dia = build_diamond(hp, leaves, 4);

  Diamond bad_edge = dia;
  bad_edge.edge_blocks[0][1][0] ^= 1;
  CHECK(code_of([&] { check_diamond(bad_edge); }) == Errc::SchemaViolation);

  Diamond bad_state = dia;
  bad_state.levels[1][0].value ^= 1;
  CHECK(code_of([&] { check_diamond(bad_state); }) == Errc::SchemaViolation);

  Diamond bad_shape = dia;
  bad_shape.levels[1].push_back(ChainState{7});
  CHECK(code_of([&] { check_diamond(bad_shape); }) == Errc::SchemaViolation);

  Diamond wide_state = dia;
  wide_state.levels[0][0].value = 0x10000;
  CHECK(code_of([&] { check_diamond(wide_state); }) == Errc::SchemaViolation);
}

TEST_CASE("herding an aligned prefix reaches the committed root") {
  HashParams hp(16);
  std::mt19937_64 rng(1234);
  std::vector<ChainState> leaves;
  std::set<uint64_t> used;
  while (leaves.size() < 4) {
    uint64_t v = rng() & 0xffff;
    if (used.insert(v).second) leaves.push_back(ChainState{v});
  }
  Diamond dia = build_diamond(hp, leaves, 7);

  std::vector<uint8_t> prefix = {'p', 'r', 'e', 'f', 'i', 'x', '!', '!'};
  HerdResult hr = herd_prefix(hp, dia, prefix, 5);
  CHECK(hr.probes > 0);
  CHECK(hr.leaf_index < 4);
  CHECK(hr.suffix.size() == 2);

  ChainState after_prefix = iterate(hp, iv(hp), bytes_to_blocks(prefix));
  ChainState linked = compress(hp, after_prefix, hr.link_block);
  CHECK(linked == dia.levels[0][hr.leaf_index]);
  std::vector<Block> all = {hr.link_block};
  all.insert(all.end(), hr.suffix.begin(), hr.suffix.end());
  CHECK(iterate(hp, after_prefix, all) == dia.root());

  HerdResult rep = herd_prefix(hp, dia, prefix, 5);
  CHECK(rep.link_block == hr.link_block);
  CHECK(rep.probes == hr.probes);

  HerdResult par = herd_prefix(hp, dia, prefix, 5, 2);
  ChainState plinked = compress(hp, after_prefix, par.link_block);
  CHECK(plinked == dia.levels[0][par.leaf_index]);

  std::vector<uint8_t> unaligned(5, 0);
  CHECK(code_of([&] { herd_prefix(hp, dia, unaligned, 5); }) == Errc::UnalignedPrefix);
  CHECK(code_of([&] { herd_prefix(hp, dia, prefix, 5, 0); }) == Errc::SchemaViolation);

  // the width gate fires before the diamond is inspected, so a stub works
  Diamond wdia{HashParams(40), {}, {}, 0};
  CHECK(code_of([&] { herd_prefix(wdia.params, wdia, prefix, 5); }) ==
        Errc::InvalidDigestBits);
}
