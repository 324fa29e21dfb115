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

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lsss/hash.hpp"
#include "lsss/latin.hpp"

namespace lsss {

// Monotone access structure given by its minimal authorized subsets.
// Members ascend within a subset; the subset list is in lexicographic order.
struct AccessStructure {
  int n_participants = 0;
  std::vector<std::vector<int>> subsets;
};

// Exact count of authorized subsets of a (t+1)-of-n threshold structure:
// sum of C(n, k) for k = t+1 .. n.
boost::multiprecision::cpp_int access_structure_size(int n, int t);

// All (t+1)-subsets of {0..n-1} in lexicographic order.
AccessStructure minimal_subsets(int n, int t);

// EmptyAccessStructure when no subsets; SchemaViolation for out-of-range or
// unsorted members, duplicate subsets, or a subset containing another.
void validate_access_structure(const AccessStructure& acc);

// Removes one minimal subset (members in any order). SchemaViolation when
// the subset is not present.
AccessStructure exclude_subset(const AccessStructure& acc, std::vector<int> subset);

struct HashShare {
  int owner = 0;
  std::vector<Block> blocks;
  bool operator==(const HashShare&) const = default;
};

// Blocks per share: enough 8-byte blocks to cover digest_bits, minimum 1.
int share_blocks(const HashParams& hp);

// Everything the dealer publishes. `subsets` always lists the provisioned
// minimal subsets; `threshold` is additionally set when they form the full
// (t+1)-of-n family. `records` may omit subsets that were deliberately
// dropped after setup; recovery treats those as unauthorized.
struct PublicStore {
  std::string version = "lsss-store-v1";
  int digest_bits = 16;
  int n_participants = 0;
  std::optional<int> threshold;
  std::vector<std::vector<int>> subsets;
  std::map<std::vector<int>, std::vector<Block>> records;
  std::vector<uint8_t> mask;
  uint64_t payload_len = 0;
  std::vector<std::array<uint8_t, 32>> commitments;
  bool operator==(const PublicStore&) const = default;
};

struct ThresholdDeal {
  std::vector<HashShare> shares;
  PublicStore store;
};

// Deals one random share per participant, hashes each minimal subset's
// concatenated member blocks into a diamond leaf (padding with random
// distinct states to a power of two), publishes one linking path per subset,
// and masks the payload with a keystream derived from the diamond root.
// Participants outside every subset still receive a (useless) share.
ThresholdDeal threshold_setup(const HashParams& hp, const AccessStructure& acc,
                              std::span<const uint8_t> payload, uint64_t seed);

// Folds the lexicographically first covered minimal subset's member blocks
// and linking record from the IV and unmasks the payload. NotAuthorized when
// no declared subset is covered or its record is missing. Tampered shares
// simply produce different bytes; integrity is vss_verify's job.
std::vector<uint8_t> threshold_recover(const PublicStore& store,
                                       std::span<const HashShare> shares);

// Index of the commitment matching SHA-256 of the share's blocks, if any.
// CommitmentsAbsent when the store carries no commitments.
std::optional<size_t> vss_verify(const HashShare& share, const PublicStore& store);

struct TripleShare {
  int owner = 0;
  int order = 0;
  std::vector<Triple> triples;
  bool operator==(const TripleShare&) const = default;
};

// Critical-set dealing: every given critical set must be critical and
// complete to `square`; their union is distributed according to
// `assignment`, which must cover the union exactly.
std::vector<TripleShare> cds_deal(const LatinSquare& square,
                                  const std::vector<PartialLatinSquare>& critical_sets,
                                  const std::map<Triple, int>& assignment);

// Pools triples and completes them. Inconsistent for conflicting triples,
// NoCompletion when nothing completes, NotUnique when the pool does not pin
// a single square (an unauthorized pool).
LatinSquare cds_recover(int order, std::span<const Triple> pool);

// The balancing share: position j holds the component-wise difference, mod
// order, between the critical set's j-th triple (row-major) and the sum of
// all given shares' j-th triples.
std::vector<Triple> cgs_last_share(const PartialLatinSquare& critical,
                                   const std::vector<std::vector<Triple>>& given);

// Additive dealing over Z_n^3 per position: participants 0..p-2 draw
// uniformly random triples, the last participant gets the balancing share.
std::vector<TripleShare> cgs_deal(const PartialLatinSquare& critical, int participants,
                                  uint64_t seed);

// Component-wise sum mod order per position. All shares must have the same
// length (LengthMismatch) and the declared order.
std::vector<Triple> cgs_combine(const std::vector<TripleShare>& shares, int order);

}  // namespace lsss
