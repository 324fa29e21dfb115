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

#include "lsss/schemes.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "lsss/rng.hpp"

namespace lsss {

namespace {

using boost::multiprecision::cpp_int;

cpp_int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  cpp_int out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

std::string subset_name(const std::vector<int>& subset) {
  std::string s = "{";
  for (size_t i = 0; i < subset.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(subset[i]);
  }
  return s + "}";
}

void check_threshold_args(int n, int t) {
  if (n < 1) fail(Errc::InvalidThreshold, "need at least one participant");
  if (t < 0 || t >= n)
    fail(Errc::InvalidThreshold, "t must satisfy 0 <= t < n; got t=" +
                                     std::to_string(t) + ", n=" + std::to_string(n));
}

// 32-byte keystream chunk j, derived from the diamond root.
std::vector<uint8_t> keystream(const HashParams& hp, ChainState root, size_t len) {
  std::vector<uint8_t> out;
  out.reserve(len);
  uint64_t j = 0;
  while (out.size() < len) {
    std::vector<uint8_t> buf = encode_state(hp, root);
    for (int i = 7; i >= 0; --i) buf.push_back(uint8_t(j >> (8 * i)));
    auto digest = sha256(buf);
    size_t take = std::min(size_t(32), len - out.size());
    out.insert(out.end(), digest.begin(), digest.begin() + take);
    ++j;
  }
  return out;
}

}  // namespace

cpp_int access_structure_size(int n, int t) {
  check_threshold_args(n, t);
  cpp_int total = 0;
  for (int k = t + 1; k <= n; ++k) total += binomial(n, k);
  return total;
}

AccessStructure minimal_subsets(int n, int t) {
  check_threshold_args(n, t);
  AccessStructure acc;
  acc.n_participants = n;
  int k = t + 1;
  std::vector<int> cur(size_t(k), 0);
  for (int i = 0; i < k; ++i) cur[i] = i;
  while (true) {
    acc.subsets.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == n - k + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return acc;
}

void validate_access_structure(const AccessStructure& acc) {
  if (acc.n_participants < 1)
    fail(Errc::SchemaViolation, "n_participants must be >= 1");
  if (acc.subsets.empty())
    fail(Errc::EmptyAccessStructure, "access structure has no authorized subsets");
  for (const auto& s : acc.subsets) {
    if (s.empty()) fail(Errc::SchemaViolation, "authorized subset must be non-empty");
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= acc.n_participants)
        fail(Errc::SchemaViolation, "participant id " + std::to_string(s[i]) +
                                        " outside 0.." +
                                        std::to_string(acc.n_participants - 1));
      if (i > 0 && s[i] <= s[i - 1])
        fail(Errc::SchemaViolation,
             "subset " + subset_name(s) + " members must ascend strictly");
    }
  }
  for (size_t i = 0; i < acc.subsets.size(); ++i)
    for (size_t j = 0; j < acc.subsets.size(); ++j) {
      if (i == j) continue;
      if (acc.subsets[i] == acc.subsets[j]) {
        if (i < j) fail(Errc::SchemaViolation, "duplicate subset " +
                                                   subset_name(acc.subsets[i]));
        continue;
      }
      if (std::includes(acc.subsets[j].begin(), acc.subsets[j].end(),
                        acc.subsets[i].begin(), acc.subsets[i].end()))
        fail(Errc::SchemaViolation, "subset " + subset_name(acc.subsets[i]) +
                                        " is contained in " + subset_name(acc.subsets[j]) +
                                        "; the family must be minimal");
    }
}

AccessStructure exclude_subset(const AccessStructure& acc, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  AccessStructure out = acc;
  auto it = std::find(out.subsets.begin(), out.subsets.end(), subset);
  if (it == out.subsets.end())
    fail(Errc::SchemaViolation, "subset " + subset_name(subset) + " is not in the family");
  out.subsets.erase(it);
  return out;
}

int share_blocks(const HashParams& hp) {
  int blocks = (hp.digest_bits + 63) / 64;
  return blocks < 1 ? 1 : blocks;
}

ThresholdDeal threshold_setup(const HashParams& hp, const AccessStructure& acc,
                              std::span<const uint8_t> payload, uint64_t seed) {
  validate_access_structure(acc);
  std::mt19937_64 rng(seed);
  int n = acc.n_participants;
  int sb = share_blocks(hp);

  ThresholdDeal deal;
  deal.shares.reserve(size_t(n));
  for (int i = 0; i < n; ++i) {
    HashShare sh;
    sh.owner = i;
    for (int b = 0; b < sb; ++b) sh.blocks.push_back(random_block(rng));
    deal.shares.push_back(std::move(sh));
  }

  // leaf per subset: fold the members' concatenated blocks from the IV
  std::vector<ChainState> leaf_states;
  std::unordered_map<uint64_t, size_t> leaf_index;
  std::vector<size_t> subset_leaf(acc.subsets.size());
  for (size_t si = 0; si < acc.subsets.size(); ++si) {
    std::vector<Block> priv;
    for (int member : acc.subsets[si])
      priv.insert(priv.end(), deal.shares[size_t(member)].blocks.begin(),
                  deal.shares[size_t(member)].blocks.end());
    ChainState leaf = iterate(hp, iv(hp), priv);
    auto [it, fresh] = leaf_index.emplace(leaf.value, leaf_states.size());
    if (fresh) leaf_states.push_back(leaf);
    subset_leaf[si] = it->second;
  }

  size_t target = std::max<size_t>(2, std::bit_ceil(leaf_states.size()));
  uint64_t space = 1ull << hp.digest_bits;  // digest_bits <= 40
  while (leaf_states.size() < target) {
    uint64_t v = uniform_below(rng, space);
    if (leaf_index.contains(v)) continue;
    leaf_index.emplace(v, leaf_states.size());
    leaf_states.push_back(ChainState{v});
  }

  uint64_t diamond_seed = rng();
  Diamond dia = build_diamond(hp, leaf_states, diamond_seed);

  PublicStore& store = deal.store;
  store.digest_bits = hp.digest_bits;
  store.n_participants = n;
  store.subsets = acc.subsets;
  if (!acc.subsets.empty()) {
    size_t k = acc.subsets.front().size();
    bool uniform = std::all_of(acc.subsets.begin(), acc.subsets.end(),
                               [&](const auto& s) { return s.size() == k; });
    if (uniform && cpp_int(acc.subsets.size()) == binomial(n, int(k)) &&
        acc.subsets == minimal_subsets(n, int(k) - 1).subsets)
      store.threshold = int(k) - 1;
  }
  for (size_t si = 0; si < acc.subsets.size(); ++si)
    store.records[acc.subsets[si]] = linking_path(dia, subset_leaf[si]);

  auto ks = keystream(hp, dia.root(), payload.size());
  store.mask.assign(payload.begin(), payload.end());
  for (size_t i = 0; i < store.mask.size(); ++i) store.mask[i] ^= ks[i];
  store.payload_len = payload.size();

  for (const HashShare& sh : deal.shares)
    store.commitments.push_back(sha256(blocks_to_bytes(sh.blocks)));
  return deal;
}

std::vector<uint8_t> threshold_recover(const PublicStore& store,
                                       std::span<const HashShare> shares) {
  HashParams hp(store.digest_bits);
  int sb = share_blocks(hp);
  std::unordered_map<int, size_t> first_of;  // owner -> first share offered
  for (size_t i = 0; i < shares.size(); ++i) first_of.emplace(shares[i].owner, i);

  const std::vector<int>* chosen = nullptr;
  for (const auto& subset : store.subsets) {
    bool covered = std::all_of(subset.begin(), subset.end(),
                               [&](int m) { return first_of.contains(m); });
    if (covered) {
      chosen = &subset;
      break;
    }
  }
  if (!chosen)
    fail(Errc::NotAuthorized, "provided shares cover no authorized subset");
  auto rec = store.records.find(*chosen);
  if (rec == store.records.end())
    fail(Errc::NotAuthorized,
         "no linking record for subset " + subset_name(*chosen));

  std::vector<Block> priv;
  for (int member : *chosen) {
    const HashShare& sh = shares[first_of.at(member)];
    if (int(sh.blocks.size()) != sb)
      fail(Errc::LengthMismatch, "share of participant " + std::to_string(member) +
                                     " has " + std::to_string(sh.blocks.size()) +
                                     " blocks, expected " + std::to_string(sb));
    priv.insert(priv.end(), sh.blocks.begin(), sh.blocks.end());
  }
  ChainState state = iterate(hp, iv(hp), priv);
  ChainState root = iterate(hp, state, rec->second);

  auto ks = keystream(hp, root, store.mask.size());
  std::vector<uint8_t> payload(store.mask);
  for (size_t i = 0; i < payload.size(); ++i) payload[i] ^= ks[i];
  return payload;
}

std::optional<size_t> vss_verify(const HashShare& share, const PublicStore& store) {
  if (store.commitments.empty())
    fail(Errc::CommitmentsAbsent, "store carries no commitments");
  auto digest = sha256(blocks_to_bytes(share.blocks));
  for (size_t i = 0; i < store.commitments.size(); ++i)
    if (store.commitments[i] == digest) return i;
  return std::nullopt;
}

std::vector<TripleShare> cds_deal(const LatinSquare& square,
                                  const std::vector<PartialLatinSquare>& critical_sets,
                                  const std::map<Triple, int>& assignment) {
  if (critical_sets.empty())
    fail(Errc::SchemaViolation, "need at least one critical set");
  std::set<Triple> pool;
  for (const PartialLatinSquare& cs : critical_sets) {
    if (cs.order() != square.order())
      fail(Errc::WrongSquare, "critical set order " + std::to_string(cs.order()) +
                                  " does not match the square order " +
                                  std::to_string(square.order()));
    if (!is_critical_set(cs))
      fail(Errc::NotACriticalSet, "a given partial square is not a critical set");
    if (!(complete(cs) == square))
      fail(Errc::WrongSquare, "a given critical set completes to a different square");
    for (const Triple& t : cs.triples()) pool.insert(t);
  }
  for (const auto& [t, owner] : assignment) {
    if (!pool.contains(t))
      fail(Errc::IncompleteAssignment, "assignment covers a triple outside the union");
    if (owner < 0)
      fail(Errc::InvalidParticipants, "participant id must be >= 0");
  }
  std::map<int, std::vector<Triple>> per_owner;
  for (const Triple& t : pool) {
    auto it = assignment.find(t);
    if (it == assignment.end())
      fail(Errc::IncompleteAssignment, "assignment misses a triple of the union");
    per_owner[it->second].push_back(t);
  }
  std::vector<TripleShare> out;
  out.reserve(per_owner.size());
  for (auto& [owner, triples] : per_owner) {
    std::sort(triples.begin(), triples.end());
    out.push_back(TripleShare{owner, square.order(), std::move(triples)});
  }
  return out;
}

LatinSquare cds_recover(int order, std::span<const Triple> pool) {
  PartialLatinSquare p(order);
  for (const Triple& t : pool) {
    if (p.contains(t)) continue;
    try {
      p = p.with(t);
    } catch (const Error& e) {
      if (e.code() == Errc::InvalidPartial)
        fail(Errc::Inconsistent, e.what());
      throw;
    }
  }
  int64_t count = count_completions(p, 2);
  if (count == 0) fail(Errc::NoCompletion, "pooled triples admit no completion");
  if (count > 1)
    fail(Errc::NotUnique, "pooled triples do not pin a unique square");
  return complete(p);
}

std::vector<Triple> cgs_last_share(const PartialLatinSquare& critical,
                                   const std::vector<std::vector<Triple>>& given) {
  int n = critical.order();
  std::vector<Triple> base = critical.triples();
  if (base.empty()) fail(Errc::SchemaViolation, "critical set must be non-empty");
  for (const auto& share : given) {
    if (share.size() != base.size())
      fail(Errc::LengthMismatch, "share has " + std::to_string(share.size()) +
                                     " triples, expected " + std::to_string(base.size()));
    for (const Triple& t : share)
      if (t.row < 0 || t.row >= n || t.col < 0 || t.col >= n || t.sym < 0 || t.sym >= n)
        fail(Errc::SchemaViolation, "share triple outside (Z_" + std::to_string(n) + ")^3");
  }
  std::vector<Triple> out(base.size());
  for (size_t j = 0; j < base.size(); ++j) {
    long long r = base[j].row, c = base[j].col, s = base[j].sym;
    for (const auto& share : given) {
      r -= share[j].row;
      c -= share[j].col;
      s -= share[j].sym;
    }
    auto wrap = [n](long long v) { return int(((v % n) + n) % n); };
    out[j] = Triple{wrap(r), wrap(c), wrap(s)};
  }
  return out;
}

std::vector<TripleShare> cgs_deal(const PartialLatinSquare& critical, int participants,
                                  uint64_t seed) {
  if (participants < 2)
    fail(Errc::InvalidParticipants, "need at least 2 participants, got " +
                                        std::to_string(participants));
  int n = critical.order();
  std::vector<Triple> base = critical.triples();
  if (base.empty()) fail(Errc::SchemaViolation, "critical set must be non-empty");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Triple>> given;
  given.reserve(size_t(participants) - 1);
  for (int s = 0; s + 1 < participants; ++s) {
    std::vector<Triple> share(base.size());
    for (size_t j = 0; j < base.size(); ++j) {
      int r = int(uniform_below(rng, uint64_t(n)));
      int c = int(uniform_below(rng, uint64_t(n)));
      int k = int(uniform_below(rng, uint64_t(n)));
      share[j] = Triple{r, c, k};
    }
    given.push_back(std::move(share));
  }
  std::vector<Triple> last = cgs_last_share(critical, given);
  std::vector<TripleShare> out;
  out.reserve(size_t(participants));
  for (int i = 0; i + 1 < participants; ++i)
    out.push_back(TripleShare{i, n, given[size_t(i)]});
  out.push_back(TripleShare{participants - 1, n, std::move(last)});
  return out;
}

std::vector<Triple> cgs_combine(const std::vector<TripleShare>& shares, int order) {
  if (order < 1) fail(Errc::SchemaViolation, "order must be >= 1");
  if (shares.empty()) fail(Errc::SchemaViolation, "need at least one share");
  size_t len = shares.front().triples.size();
  for (const TripleShare& sh : shares) {
    if (sh.order != order)
      fail(Errc::SchemaViolation, "share of participant " + std::to_string(sh.owner) +
                                      " declares order " + std::to_string(sh.order) +
                                      ", expected " + std::to_string(order));
    if (sh.triples.size() != len)
      fail(Errc::LengthMismatch, "share of participant " + std::to_string(sh.owner) +
                                     " has " + std::to_string(sh.triples.size()) +
                                     " triples, expected " + std::to_string(len));
    for (const Triple& t : sh.triples)
      if (t.row < 0 || t.row >= order || t.col < 0 || t.col >= order || t.sym < 0 ||
          t.sym >= order)
        fail(Errc::SchemaViolation,
             "share triple outside (Z_" + std::to_string(order) + ")^3");
  }
  std::vector<Triple> out(len);
  for (size_t j = 0; j < len; ++j) {
    long long r = 0, c = 0, s = 0;
    for (const TripleShare& sh : shares) {
      r += sh.triples[j].row;
      c += sh.triples[j].col;
      s += sh.triples[j].sym;
    }
    out[j] = Triple{int(r % order), int(c % order), int(s % order)};
  }
  return out;
}

}  // namespace lsss
