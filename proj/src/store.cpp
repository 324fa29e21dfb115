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

#include "lsss/store.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>

#include "json.hpp"
#include "lsss/hex.hpp"

namespace lsss {

namespace {

using json = nlohmann::ordered_json;

// --- strict readers; every failure names the offending field -------------

[[noreturn]] void bad(const std::string& path, const std::string& why) {
  fail(Errc::SchemaViolation, path + ": " + why);
}

void expect_keys(const json& j, const std::string& path,
                 const std::vector<std::string>& allowed) {
  if (!j.is_object()) bad(path, "expected an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      bad(path + "." + key, "unexpected field");
  }
}

const json& field(const json& j, const std::string& path, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end()) bad(path + "." + key, "missing field");
  return *it;
}

int64_t get_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) bad(path, "expected an integer");
  return j.get<int64_t>();
}

uint64_t get_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<int64_t>() >= 0))
    bad(path, "expected a non-negative integer");
  return j.get<uint64_t>();
}

std::string get_string(const json& j, const std::string& path) {
  if (!j.is_string()) bad(path, "expected a string");
  return j.get<std::string>();
}

const json& get_array(const json& j, const std::string& path) {
  if (!j.is_array()) bad(path, "expected an array");
  return j;
}

std::vector<uint8_t> get_hex(const json& j, const std::string& path) {
  std::string s = get_string(j, path);
  try {
    return from_hex(s);
  } catch (const Error&) {
    bad(path, "expected even-length lowercase hex");
  }
}

Block get_block(const json& j, const std::string& path) {
  auto bytes = get_hex(j, path);
  if (bytes.size() != 8) bad(path, "block hex must decode to 8 bytes");
  Block b;
  std::copy(bytes.begin(), bytes.end(), b.begin());
  return b;
}

void check_version(const json& j, const std::string& expected) {
  std::string v = get_string(field(j, "$", "version"), "$.version");
  if (v != expected) bad("$.version", "expected \"" + expected + "\", got \"" + v + "\"");
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::SchemaViolation, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::IoError, "cannot open " + path.string());
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) fail(Errc::IoError, "cannot read " + path.string());
  return data;
}

void write_atomic(const std::filesystem::path& path, std::string_view data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::IoError, "cannot open " + tmp.string() + " for writing");
    out.write(data.data(), std::streamsize(data.size()));
    out.flush();
    if (!out) fail(Errc::IoError, "cannot write " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    fail(Errc::IoError, "cannot rename " + tmp.string() + ": " + ec.message());
  }
}

// --- store ----------------------------------------------------------------

std::string store_to_json(const PublicStore& store) {
  (void)HashParams(store.digest_bits);  // reject unserializable widths up front
  json params;
  params["digest_bits"] = store.digest_bits;
  params["n_participants"] = store.n_participants;
  if (store.threshold)
    params["threshold"] = *store.threshold;
  else
    params["subsets"] = store.subsets;
  json records = json::array();
  for (const auto& [members, path] : store.records) {
    json rec;
    rec["members"] = members;
    json blocks = json::array();
    for (const Block& b : path) blocks.push_back(block_hex(b));
    rec["path"] = std::move(blocks);
    records.push_back(std::move(rec));
  }
  json commitments = json::array();
  for (const auto& c : store.commitments) commitments.push_back(to_hex(c));
  json j;
  j["version"] = store.version;
  j["params"] = std::move(params);
  j["records"] = std::move(records);
  j["mask"] = to_hex(store.mask);
  j["payload_len"] = store.payload_len;
  j["commitments"] = std::move(commitments);
  return j.dump(2) + "\n";
}

PublicStore store_from_json(std::string_view text) {
  json j = parse(text);
  check_version(j, "lsss-store-v1");
  expect_keys(j, "$", {"version", "params", "records", "mask", "payload_len",
                       "commitments"});
  PublicStore store;

  const json& params = field(j, "$", "params");
  expect_keys(params, "$.params",
              {"digest_bits", "n_participants", "threshold", "subsets"});
  int64_t bits = get_int(field(params, "$.params", "digest_bits"), "$.params.digest_bits");
  try {
    HashParams hp{int(bits)};
    store.digest_bits = hp.digest_bits;
  } catch (const Error& e) {
    bad("$.params.digest_bits", e.what());
  }
  int64_t n = get_int(field(params, "$.params", "n_participants"),
                      "$.params.n_participants");
  if (n < 1 || n > 1000000) bad("$.params.n_participants", "expected an integer >= 1");
  store.n_participants = int(n);

  bool has_t = params.contains("threshold"), has_s = params.contains("subsets");
  if (has_t == has_s)
    bad("$.params", "exactly one of threshold and subsets must be present");
  if (has_t) {
    int64_t t = get_int(params["threshold"], "$.params.threshold");
    if (t < 0 || t >= n) bad("$.params.threshold", "expected 0 <= t < n_participants");
    store.threshold = int(t);
    store.subsets = minimal_subsets(int(n), int(t)).subsets;
  } else {
    const json& subsets = get_array(params["subsets"], "$.params.subsets");
    for (size_t i = 0; i < subsets.size(); ++i) {
      std::string p = "$.params.subsets[" + std::to_string(i) + "]";
      const json& sub = get_array(subsets[i], p);
      std::vector<int> members;
      for (size_t k = 0; k < sub.size(); ++k)
        members.push_back(int(get_int(sub[k], p + "[" + std::to_string(k) + "]")));
      store.subsets.push_back(std::move(members));
    }
    AccessStructure acc{store.n_participants, store.subsets};
    try {
      validate_access_structure(acc);
    } catch (const Error& e) {
      bad("$.params.subsets", e.what());
    }
  }

  std::set<std::vector<int>> declared(store.subsets.begin(), store.subsets.end());
  const json& records = get_array(field(j, "$", "records"), "$.records");
  size_t path_len = 0;
  for (size_t i = 0; i < records.size(); ++i) {
    std::string p = "$.records[" + std::to_string(i) + "]";
    expect_keys(records[i], p, {"members", "path"});
    const json& mj = get_array(field(records[i], p, "members"), p + ".members");
    std::vector<int> members;
    for (size_t k = 0; k < mj.size(); ++k)
      members.push_back(int(get_int(mj[k], p + ".members[" + std::to_string(k) + "]")));
    if (!declared.count(members)) bad(p + ".members", "not a declared authorized subset");
    if (store.records.count(members)) bad(p + ".members", "duplicate record");
    const json& pj = get_array(field(records[i], p, "path"), p + ".path");
    if (pj.empty()) bad(p + ".path", "expected at least one block");
    std::vector<Block> path;
    for (size_t k = 0; k < pj.size(); ++k)
      path.push_back(get_block(pj[k], p + ".path[" + std::to_string(k) + "]"));
    if (i == 0)
      path_len = path.size();
    else if (path.size() != path_len)
      bad(p + ".path", "records disagree on the path length");
    store.records.emplace(std::move(members), std::move(path));
  }

  store.mask = get_hex(field(j, "$", "mask"), "$.mask");
  store.payload_len = get_uint(field(j, "$", "payload_len"), "$.payload_len");
  if (store.mask.size() != store.payload_len)
    bad("$.mask", "mask length does not match payload_len");

  const json& commitments = get_array(field(j, "$", "commitments"), "$.commitments");
  if (!commitments.empty() && int64_t(commitments.size()) != n)
    bad("$.commitments", "expected none or one commitment per participant");
  for (size_t i = 0; i < commitments.size(); ++i) {
    std::string p = "$.commitments[" + std::to_string(i) + "]";
    auto bytes = get_hex(commitments[i], p);
    if (bytes.size() != 32) bad(p, "commitment hex must decode to 32 bytes");
    std::array<uint8_t, 32> c;
    std::copy(bytes.begin(), bytes.end(), c.begin());
    store.commitments.push_back(c);
  }
  return store;
}

void save_store(const PublicStore& store, const std::filesystem::path& path) {
  write_atomic(path, store_to_json(store));
}

PublicStore load_store(const std::filesystem::path& path) {
  return store_from_json(read_file(path));
}

// --- share ----------------------------------------------------------------

std::string share_to_json(const HashShare& share) {
  json blocks = json::array();
  for (const Block& b : share.blocks) blocks.push_back(block_hex(b));
  json j;
  j["version"] = "lsss-share-v1";
  j["owner"] = share.owner;
  j["blocks"] = std::move(blocks);
  return j.dump(2) + "\n";
}

HashShare share_from_json(std::string_view text) {
  json j = parse(text);
  check_version(j, "lsss-share-v1");
  expect_keys(j, "$", {"version", "owner", "blocks"});
  HashShare share;
  int64_t owner = get_int(field(j, "$", "owner"), "$.owner");
  if (owner < 0) bad("$.owner", "expected a non-negative participant id");
  share.owner = int(owner);
  const json& blocks = get_array(field(j, "$", "blocks"), "$.blocks");
  if (blocks.empty()) bad("$.blocks", "expected at least one block");
  for (size_t i = 0; i < blocks.size(); ++i)
    share.blocks.push_back(get_block(blocks[i], "$.blocks[" + std::to_string(i) + "]"));
  return share;
}

void save_share(const HashShare& share, const std::filesystem::path& path) {
  write_atomic(path, share_to_json(share));
}

HashShare load_share(const std::filesystem::path& path) {
  return share_from_json(read_file(path));
}

// --- triple share ----------------------------------------------------------

std::string triple_share_to_json(const TripleShare& share) {
  json triples = json::array();
  for (const Triple& t : share.triples) triples.push_back(json::array({t.row, t.col, t.sym}));
  json j;
  j["version"] = "lsss-tshare-v1";
  j["owner"] = share.owner;
  j["order"] = share.order;
  j["triples"] = std::move(triples);
  return j.dump(2) + "\n";
}

TripleShare triple_share_from_json(std::string_view text) {
  json j = parse(text);
  check_version(j, "lsss-tshare-v1");
  expect_keys(j, "$", {"version", "owner", "order", "triples"});
  TripleShare share;
  int64_t owner = get_int(field(j, "$", "owner"), "$.owner");
  if (owner < 0) bad("$.owner", "expected a non-negative participant id");
  share.owner = int(owner);
  int64_t order = get_int(field(j, "$", "order"), "$.order");
  if (order < 1 || order > kMaxOrder) bad("$.order", "expected an order >= 1");
  share.order = int(order);
  const json& triples = get_array(field(j, "$", "triples"), "$.triples");
  if (triples.empty()) bad("$.triples", "expected at least one triple");
  for (size_t i = 0; i < triples.size(); ++i) {
    std::string p = "$.triples[" + std::to_string(i) + "]";
    const json& tj = get_array(triples[i], p);
    if (tj.size() != 3) bad(p, "expected [row, col, sym]");
    Triple t{int(get_int(tj[0], p + "[0]")), int(get_int(tj[1], p + "[1]")),
             int(get_int(tj[2], p + "[2]"))};
    if (t.row < 0 || t.row >= share.order || t.col < 0 || t.col >= share.order ||
        t.sym < 0 || t.sym >= share.order)
      bad(p, "components must lie in 0..order-1");
    share.triples.push_back(t);
  }
  return share;
}

void save_triple_share(const TripleShare& share, const std::filesystem::path& path) {
  write_atomic(path, triple_share_to_json(share));
}

TripleShare load_triple_share(const std::filesystem::path& path) {
  return triple_share_from_json(read_file(path));
}

// --- diamond ----------------------------------------------------------------

std::string diamond_to_json(const Diamond& dia) {
  json levels = json::array();
  for (const auto& level : dia.levels) {
    json lj = json::array();
    for (ChainState s : level) lj.push_back(state_hex(dia.params, s));
    levels.push_back(std::move(lj));
  }
  json edges = json::array();
  for (const auto& level : dia.edge_blocks) {
    json lj = json::array();
    for (const Block& b : level) lj.push_back(block_hex(b));
    edges.push_back(std::move(lj));
  }
  json j;
  j["version"] = "lsss-diamond-v1";
  j["digest_bits"] = dia.params.digest_bits;
  j["levels"] = std::move(levels);
  j["edge_blocks"] = std::move(edges);
  return j.dump(2) + "\n";
}

Diamond diamond_from_json(std::string_view text) {
  json j = parse(text);
  check_version(j, "lsss-diamond-v1");
  expect_keys(j, "$", {"version", "digest_bits", "levels", "edge_blocks"});
  int64_t bits = get_int(field(j, "$", "digest_bits"), "$.digest_bits");
  Diamond dia{HashParams(8), {}, {}, 0};
  try {
    dia.params = HashParams(int(bits));
  } catch (const Error& e) {
    bad("$.digest_bits", e.what());
  }
  size_t width = size_t(dia.params.digest_bits) / 4;
  const json& levels = get_array(field(j, "$", "levels"), "$.levels");
  for (size_t l = 0; l < levels.size(); ++l) {
    std::string p = "$.levels[" + std::to_string(l) + "]";
    const json& lj = get_array(levels[l], p);
    std::vector<ChainState> states;
    for (size_t i = 0; i < lj.size(); ++i) {
      std::string q = p + "[" + std::to_string(i) + "]";
      std::string hex = get_string(lj[i], q);
      if (hex.size() != width) bad(q, "state hex must be " + std::to_string(width) +
                                          " characters");
      auto bytes = get_hex(lj[i], q);
      uint64_t v = 0;
      for (uint8_t b : bytes) v = v << 8 | b;
      states.push_back(ChainState{v});
    }
    dia.levels.push_back(std::move(states));
  }
  const json& edges = get_array(field(j, "$", "edge_blocks"), "$.edge_blocks");
  for (size_t l = 0; l < edges.size(); ++l) {
    std::string p = "$.edge_blocks[" + std::to_string(l) + "]";
    const json& lj = get_array(edges[l], p);
    std::vector<Block> blocks;
    for (size_t i = 0; i < lj.size(); ++i)
      blocks.push_back(get_block(lj[i], p + "[" + std::to_string(i) + "]"));
    dia.edge_blocks.push_back(std::move(blocks));
  }
  check_diamond(dia);
  return dia;
}

void save_diamond(const Diamond& dia, const std::filesystem::path& path) {
  write_atomic(path, diamond_to_json(dia));
}

Diamond load_diamond(const std::filesystem::path& path) {
  return diamond_from_json(read_file(path));
}

}  // namespace lsss
