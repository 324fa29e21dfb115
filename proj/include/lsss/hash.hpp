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
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lsss/error.hpp"

namespace lsss {

// Reduced-width Merkle-Damgard chain built on SHA-256: the compression step
// hashes the big-endian-encoded chaining value followed by one 8-byte block
// and keeps the most significant digest_bits bits. Narrow on purpose: the
// widths are chosen so collision and herding searches finish at desk scale.
struct HashParams {
  int digest_bits;
  static constexpr int block_bytes = 8;

  explicit HashParams(int bits);
  int digest_bytes() const { return digest_bits / 8; }
  bool operator==(const HashParams&) const = default;
};

// Chaining value, always < 2^digest_bits.
struct ChainState {
  uint64_t value = 0;
  auto operator<=>(const ChainState&) const = default;
};

using Block = std::array<uint8_t, HashParams::block_bytes>;

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data);

Block random_block(std::mt19937_64& rng);

std::vector<uint8_t> encode_state(const HashParams& hp, ChainState s);  // big-endian
std::string state_hex(const HashParams& hp, ChainState s);
std::string block_hex(const Block& b);

ChainState iv(const HashParams& hp);
ChainState compress(const HashParams& hp, ChainState state, const Block& block);
ChainState iterate(const HashParams& hp, ChainState start, std::span<const Block> blocks);

// Strengthened padding: message || 0x80 || zero fill to the block boundary ||
// 64-bit big-endian bit length (the length always occupies a whole block).
std::vector<Block> pad_message(std::span<const uint8_t> message);

// iterate over pad_message(message) starting from iv(hp).
ChainState hash_full(const HashParams& hp, std::span<const uint8_t> message);

// Reinterpret raw bytes as blocks; length must be a multiple of 8.
std::vector<Block> bytes_to_blocks(std::span<const uint8_t> data);
std::vector<uint8_t> blocks_to_bytes(std::span<const Block> blocks);

struct CollisionResult {
  Block block_a{};
  Block block_b{};
  uint64_t probes = 0;
};

// Birthday search for blocks with compress(a, block_a) == compress(b,
// block_b). Equal input states return immediately with equal blocks. The
// witness is re-verified before returning. Gives up with BudgetExceeded
// after 2^(digest_bits/2 + 6) probes. Deterministic per seed.
CollisionResult find_collision(const HashParams& hp, ChainState a, ChainState b, uint64_t seed);

// Complete binary collision tree: levels[0] holds the 2^k leaves, each level
// pairs nodes (2i, 2i+1) into a collision, levels.back() is the single root.
// edge_blocks[l][i] maps levels[l][i] to its parent.
struct Diamond {
  HashParams params;
  std::vector<std::vector<ChainState>> levels;
  std::vector<std::vector<Block>> edge_blocks;
  uint64_t build_probes = 0;

  int height() const { return int(levels.size()) - 1; }
  size_t leaf_count() const { return levels.front().size(); }
  ChainState root() const { return levels.back().front(); }
};

// Leaves must number 2^k (k >= 1) and be pairwise distinct. Deterministic
// per seed.
Diamond build_diamond(const HashParams& hp, std::span<const ChainState> leaves, uint64_t seed);

// Structural and cryptographic consistency of a diamond (used after
// deserialization); throws SchemaViolation on any mismatch.
void check_diamond(const Diamond& dia);

// Blocks that fold levels[0][leaf_index] up to the root.
std::vector<Block> linking_path(const Diamond& dia, size_t leaf_index);

struct HerdResult {
  Block link_block{};
  size_t leaf_index = 0;
  std::vector<Block> suffix;
  uint64_t probes = 0;
};

// Herds an arbitrary aligned prefix into the committed root: searches for a
// linking block whose compression lands on some diamond leaf, then returns
// that leaf's path, so iterate(IV, prefix ++ link_block ++ suffix) == root.
// Budget 2^(digest_bits - k + 6) probes; digest_bits <= 32. parallelism > 1
// partitions the probe space across workers (result then depends on thread
// timing; only parallelism 1 is seed-reproducible).
HerdResult herd_prefix(const HashParams& hp, const Diamond& dia,
                       std::span<const uint8_t> prefix, uint64_t seed, int parallelism = 1);

}  // namespace lsss
