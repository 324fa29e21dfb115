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

#include <openssl/sha.h>

#include <atomic>
#include <bit>
#include <cassert>
#include <cstring>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "lsss/hex.hpp"
#include "lsss/rng.hpp"

namespace lsss {

namespace {

constexpr char kIvTag[] = "LSSS-IV-v1";  // 10 bytes, no terminator hashed

uint64_t take_top_bits(const std::array<uint8_t, 32>& digest, int bits) {
  uint64_t v = 0;
  for (int i = 0; i < bits / 8; ++i) v = v << 8 | digest[i];
  return v;
}

void put_be(std::vector<uint8_t>& out, uint64_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(uint8_t(v >> (8 * i)));
}

}  // namespace

HashParams::HashParams(int bits) : digest_bits(bits) {
  if (bits != 8 && bits != 16 && bits != 24 && bits != 32 && bits != 40)
    fail(Errc::InvalidDigestBits,
         "digest_bits must be one of 8, 16, 24, 32, 40; got " + std::to_string(bits));
}

std::array<uint8_t, 32> sha256(std::span<const uint8_t> data) {
  std::array<uint8_t, 32> out;
  SHA256(data.data(), data.size(), out.data());
  return out;
}

Block random_block(std::mt19937_64& rng) {
  uint64_t v = rng();
  Block b;
  for (int i = 0; i < 8; ++i) b[i] = uint8_t(v >> (8 * (7 - i)));
  return b;
}

std::vector<uint8_t> encode_state(const HashParams& hp, ChainState s) {
  std::vector<uint8_t> out;
  out.reserve(size_t(hp.digest_bytes()));
  put_be(out, s.value, hp.digest_bytes());
  return out;
}

std::string state_hex(const HashParams& hp, ChainState s) {
  auto bytes = encode_state(hp, s);
  return to_hex(bytes);
}

std::string block_hex(const Block& b) { return to_hex(b); }

ChainState iv(const HashParams& hp) {
  std::vector<uint8_t> buf(kIvTag, kIvTag + 10);
  put_be(buf, uint64_t(hp.digest_bits), 4);
  return ChainState{take_top_bits(sha256(buf), hp.digest_bits)};
}

ChainState compress(const HashParams& hp, ChainState state, const Block& block) {
  std::vector<uint8_t> buf = encode_state(hp, state);
  buf.insert(buf.end(), block.begin(), block.end());
  return ChainState{take_top_bits(sha256(buf), hp.digest_bits)};
}

ChainState iterate(const HashParams& hp, ChainState start, std::span<const Block> blocks) {
  ChainState s = start;
  for (const Block& b : blocks) s = compress(hp, s, b);
  return s;
}

std::vector<Block> pad_message(std::span<const uint8_t> message) {
  std::vector<uint8_t> buf(message.begin(), message.end());
  uint64_t bitlen = uint64_t(message.size()) * 8;
  buf.push_back(0x80);
  while (buf.size() % 8 != 0) buf.push_back(0x00);
  put_be(buf, bitlen, 8);
  return bytes_to_blocks(buf);
}

ChainState hash_full(const HashParams& hp, std::span<const uint8_t> message) {
  auto blocks = pad_message(message);
  return iterate(hp, iv(hp), blocks);
}

std::vector<Block> bytes_to_blocks(std::span<const uint8_t> data) {
  if (data.size() % 8 != 0)
    fail(Errc::UnalignedPrefix,
         "byte length " + std::to_string(data.size()) + " is not a multiple of 8");
  std::vector<Block> out(data.size() / 8);
  for (size_t i = 0; i < out.size(); ++i)
    std::memcpy(out[i].data(), data.data() + i * 8, 8);
  return out;
}

std::vector<uint8_t> blocks_to_bytes(std::span<const Block> blocks) {
  std::vector<uint8_t> out;
  out.reserve(blocks.size() * 8);
  for (const Block& b : blocks) out.insert(out.end(), b.begin(), b.end());
  return out;
}

CollisionResult find_collision(const HashParams& hp, ChainState a, ChainState b,
                               uint64_t seed) {
  std::mt19937_64 rng(seed);
  if (a == b) {
    Block blk = random_block(rng);
    ChainState va = compress(hp, a, blk);
    assert(va == compress(hp, b, blk));
    (void)va;
    return CollisionResult{blk, blk, 0};
  }
  const uint64_t budget = 1ull << (hp.digest_bits / 2 + 6);
  std::unordered_map<uint64_t, Block> seen_a, seen_b;
  uint64_t probes = 0;
  while (probes < budget) {
    {
      Block blk = random_block(rng);
      ChainState va = compress(hp, a, blk);
      ++probes;
      auto hit = seen_b.find(va.value);
      if (hit != seen_b.end()) {
        assert(compress(hp, b, hit->second) == va);
        return CollisionResult{blk, hit->second, probes};
      }
      seen_a.emplace(va.value, blk);
    }
    if (probes >= budget) break;
    {
      Block blk = random_block(rng);
      ChainState vb = compress(hp, b, blk);
      ++probes;
      auto hit = seen_a.find(vb.value);
      if (hit != seen_a.end()) {
        assert(compress(hp, a, hit->second) == vb);
        return CollisionResult{hit->second, blk, probes};
      }
      seen_b.emplace(vb.value, blk);
    }
  }
  fail(Errc::BudgetExceeded, "no collision within " + std::to_string(budget) + " probes");
}

Diamond build_diamond(const HashParams& hp, std::span<const ChainState> leaves,
                      uint64_t seed) {
  size_t n = leaves.size();
  if (n < 2 || !std::has_single_bit(n))
    fail(Errc::InvalidLeafCount,
         "leaf count must be a power of two >= 2, got " + std::to_string(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (leaves[i] == leaves[j])
        fail(Errc::DuplicateLeaf, "leaves " + std::to_string(i) + " and " +
                                      std::to_string(j) + " are equal");
  std::mt19937_64 rng(seed);
  Diamond dia{hp, {}, {}, 0};
  dia.levels.emplace_back(leaves.begin(), leaves.end());
  while (dia.levels.back().size() > 1) {
    const auto& cur = dia.levels.back();
    std::vector<ChainState> next;
    std::vector<Block> edges(cur.size());
    next.reserve(cur.size() / 2);
    for (size_t i = 0; i + 1 < cur.size(); i += 2) {
      uint64_t sub_seed = rng();
      CollisionResult col = find_collision(hp, cur[i], cur[i + 1], sub_seed);
      edges[i] = col.block_a;
      edges[i + 1] = col.block_b;
      next.push_back(compress(hp, cur[i], col.block_a));
      dia.build_probes += col.probes;
    }
    dia.edge_blocks.push_back(std::move(edges));
    dia.levels.push_back(std::move(next));
  }
  return dia;
}

void check_diamond(const Diamond& dia) {
  const HashParams& hp = dia.params;
  if (dia.levels.empty() || dia.levels.back().size() != 1)
    fail(Errc::SchemaViolation, "diamond must end in a single root");
  size_t n = dia.levels.front().size();
  if (n < 2 || !std::has_single_bit(n))
    fail(Errc::SchemaViolation, "leaf count must be a power of two >= 2");
  if (dia.levels.size() != size_t(std::countr_zero(n)) + 1)
    fail(Errc::SchemaViolation, "level count does not match the leaf count");
  if (dia.edge_blocks.size() + 1 != dia.levels.size())
    fail(Errc::SchemaViolation, "edge level count does not match the state levels");
  uint64_t max_state = (hp.digest_bits == 64) ? ~0ull : (1ull << hp.digest_bits);
  for (size_t l = 0; l < dia.levels.size(); ++l) {
    if (l + 1 < dia.levels.size() && dia.levels[l].size() != 2 * dia.levels[l + 1].size())
      fail(Errc::SchemaViolation, "level " + std::to_string(l + 1) +
                                      " is not half of level " + std::to_string(l));
    for (ChainState s : dia.levels[l])
      if (s.value >= max_state)
        fail(Errc::SchemaViolation, "state exceeds the digest width");
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (dia.levels[0][i] == dia.levels[0][j])
        fail(Errc::SchemaViolation, "leaves " + std::to_string(i) + " and " +
                                        std::to_string(j) + " are equal");
  for (size_t l = 0; l + 1 < dia.levels.size(); ++l) {
    if (dia.edge_blocks[l].size() != dia.levels[l].size())
      fail(Errc::SchemaViolation, "edge count mismatch at level " + std::to_string(l));
    for (size_t i = 0; i < dia.levels[l].size(); ++i)
      if (compress(hp, dia.levels[l][i], dia.edge_blocks[l][i]) != dia.levels[l + 1][i / 2])
        fail(Errc::SchemaViolation, "edge " + std::to_string(i) + " at level " +
                                        std::to_string(l) + " does not reach its parent");
  }
}

std::vector<Block> linking_path(const Diamond& dia, size_t leaf_index) {
  if (leaf_index >= dia.leaf_count())
    fail(Errc::IndexOutOfRange, "leaf index " + std::to_string(leaf_index) +
                                    " out of range for " +
                                    std::to_string(dia.leaf_count()) + " leaves");
  std::vector<Block> path;
  size_t idx = leaf_index;
  for (size_t l = 0; l + 1 < dia.levels.size(); ++l) {
    path.push_back(dia.edge_blocks[l][idx]);
    idx /= 2;
  }
  return path;
}

HerdResult herd_prefix(const HashParams& hp, const Diamond& dia,
                       std::span<const uint8_t> prefix, uint64_t seed, int parallelism) {
  if (hp.digest_bits > 32)
    fail(Errc::InvalidDigestBits, "herding is limited to digest_bits <= 32");
  if (!(hp == dia.params))
    fail(Errc::SchemaViolation, "diamond was built for different parameters");
  if (parallelism < 1) fail(Errc::SchemaViolation, "parallelism must be >= 1");
  if (prefix.size() % 8 != 0)
    fail(Errc::UnalignedPrefix, "prefix length " + std::to_string(prefix.size()) +
                                    " is not a multiple of 8 bytes");
  auto prefix_blocks = bytes_to_blocks(prefix);
  ChainState start = iterate(hp, iv(hp), prefix_blocks);

  std::unordered_map<uint64_t, size_t> leaf_of;
  leaf_of.reserve(dia.leaf_count());
  for (size_t i = 0; i < dia.leaf_count(); ++i) leaf_of.emplace(dia.levels[0][i].value, i);
  int k = dia.height();
  int exp = hp.digest_bits - k + 6;
  if (exp < 0) exp = 0;
  const uint64_t budget = 1ull << exp;

  auto finish = [&](const Block& blk, size_t leaf, uint64_t probes) {
    return HerdResult{blk, leaf, linking_path(dia, leaf), probes};
  };

  if (parallelism == 1) {
    std::mt19937_64 rng(seed);
    uint64_t probes = 0;
    while (probes < budget) {
      Block blk = random_block(rng);
      ChainState v = compress(hp, start, blk);
      ++probes;
      auto hit = leaf_of.find(v.value);
      if (hit != leaf_of.end()) return finish(blk, hit->second, probes);
    }
    fail(Errc::BudgetExceeded, "no linking block within " + std::to_string(budget) +
                                   " probes");
  }

  constexpr uint64_t kChunk = 1024;
  std::atomic<uint64_t> issued{0};
  std::atomic<uint64_t> performed{0};
  std::atomic<bool> found{false};
  std::mutex result_mu;
  HerdResult result;
  auto worker = [&](int tid) {
    std::mt19937_64 rng(splitmix64(seed ^ (0x9e3779b97f4a7c15ull * uint64_t(tid + 1))));
    while (!found.load(std::memory_order_relaxed)) {
      uint64_t begin = issued.fetch_add(kChunk, std::memory_order_relaxed);
      if (begin >= budget) return;
      uint64_t todo = std::min(kChunk, budget - begin);
      for (uint64_t i = 0; i < todo; ++i) {
        if (found.load(std::memory_order_relaxed)) return;
        Block blk = random_block(rng);
        ChainState v = compress(hp, start, blk);
        performed.fetch_add(1, std::memory_order_relaxed);
        auto hit = leaf_of.find(v.value);
        if (hit != leaf_of.end()) {
          std::lock_guard<std::mutex> lock(result_mu);
          if (!found.exchange(true)) {
            result = finish(blk, hit->second, 0);
          }
          return;
        }
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(size_t(parallelism));
  for (int t = 0; t < parallelism; ++t) threads.emplace_back(worker, t);
  for (auto& th : threads) th.join();
  if (!found.load())
    fail(Errc::BudgetExceeded, "no linking block within " + std::to_string(budget) +
                                   " probes");
  result.probes = performed.load();
  return result;
}

}  // namespace lsss
