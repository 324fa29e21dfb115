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

#include "lsss/cli.hpp"

#include <charconv>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lsss/hex.hpp"
#include "lsss/packing.hpp"
#include "lsss/rng.hpp"
#include "lsss/schemes.hpp"
#include "lsss/store.hpp"

namespace lsss::cli {

namespace {

namespace fs = std::filesystem;

std::vector<uint8_t> read_bytes(const fs::path& path) {
  std::string data = read_file(path);
  return std::vector<uint8_t>(data.begin(), data.end());
}

void write_bytes(const fs::path& path, std::span<const uint8_t> data) {
  write_atomic(path, std::string_view(reinterpret_cast<const char*>(data.data()),
                                      data.size()));
}

LatinSquare square_from_file(const fs::path& path) {
  RawGrid raw = parse_grid_text(read_file(path));
  if (!raw.full()) fail(Errc::InvalidGrid, path.string() + ": grid has empty cells");
  return LatinSquare::from_grid(raw.cells);
}

PartialLatinSquare partial_from_file(const fs::path& path) {
  RawGrid raw = parse_grid_text(read_file(path));
  return PartialLatinSquare::from_grid(raw.cells);
}

fs::path in_dir(const std::string& arg, const char* leaf) {
  fs::path p(arg);
  if (fs::is_directory(p)) return p / leaf;
  return p;
}

// Fresh seed unless the user pinned one; echo the fresh value so the run can
// be reproduced.
uint64_t pick_seed(const CLI::App* cmd, uint64_t given) {
  if (cmd->count("--seed")) return given;
  std::random_device rd;
  uint64_t seed = (uint64_t(rd()) << 32) ^ rd();
  std::cerr << "seed: " << seed << "\n";
  return seed;
}

ChainState state_from_hex(const HashParams& hp, const std::string& hex) {
  auto bytes = from_hex(hex);
  if (int(bytes.size()) != hp.digest_bytes())
    fail(Errc::SchemaViolation, "state hex must be " +
                                    std::to_string(hp.digest_bytes() * 2) + " characters");
  uint64_t v = 0;
  for (uint8_t b : bytes) v = v << 8 | b;
  return ChainState{v};
}

Block block_from_hex(const std::string& hex) {
  auto bytes = from_hex(hex);
  if (bytes.size() != 8) fail(Errc::SchemaViolation, "block hex must be 16 characters");
  Block b;
  std::copy(bytes.begin(), bytes.end(), b.begin());
  return b;
}

std::vector<ChainState> random_distinct_states(const HashParams& hp, size_t count,
                                               std::mt19937_64& rng) {
  uint64_t space = 1ull << hp.digest_bits;
  if (count > space / 2)
    fail(Errc::SchemaViolation, "tree height too large for the digest width");
  std::set<uint64_t> seen;
  std::vector<ChainState> out;
  while (out.size() < count) {
    uint64_t v = uniform_below(rng, space);
    if (seen.insert(v).second) out.push_back(ChainState{v});
  }
  return out;
}

void print_payload(const std::vector<uint8_t>& payload, bool raw) {
  if (!raw) {
    try {
      if (payload.size() == 32) {
        std::cout << format_grid_text(unpack256(pack256_from_bytes(payload)));
        return;
      }
      if (payload.size() == 48) {
        std::cout << format_grid_text(unpack324(pack324_from_bytes(payload)));
        return;
      }
    } catch (const Error&) {
      // fall through to hex
    }
  }
  std::cout << "payload: " << to_hex(payload) << "\n";
}

struct LsGenArgs {
  int n = 10;
  uint64_t seed = 0;
  std::string out;
};
struct LsFileArgs {
  std::string file;
};
struct LsCountArgs {
  std::string file;
  int64_t limit = 1000000;
};
struct LsOrderArgs {
  int n = 0;
};
struct PackArgs {
  std::string file;
  int format = 256;
  std::string out;
};
struct UnpackArgs {
  std::string in;
  std::string hex;
  int format = 256;
};
struct VectorArgs {
  int digest_bits = 16;
  std::string message_hex;
  std::string state_hex;
  std::string block_hex;
};
struct DiamondDemoArgs {
  int digest_bits = 16;
  int k = 2;
  uint64_t seed = 0;
  std::string out;
};
struct CommitArgs {
  int digest_bits = 16;
  int k = 4;
  uint64_t seed = 0;
  std::string out;
};
struct RevealArgs {
  std::string store;
  std::string prefix_file;
  uint64_t seed = 0;
  int parallelism = 1;
  std::string out;
};
struct DealThresholdArgs {
  int n = 0;
  int t = 0;
  int digest_bits = 16;
  std::string payload_file;
  bool gen_square = false;
  std::vector<std::string> exclude;
  uint64_t seed = 0;
  std::string out;
};
struct DealCdsArgs {
  std::string square;
  std::vector<std::string> critical;
  int participants = 0;
  std::string out;
};
struct DealCgsArgs {
  std::string critical;
  int participants = 0;
  uint64_t seed = 0;
  std::string out;
};
struct RecoverArgs {
  std::string store;
  std::vector<std::string> shares;
  bool raw = false;
  std::string out;
};
struct CombineArgs {
  std::vector<std::string> shares;
  int order = 0;
};
struct VerifyArgs {
  std::string store;
  std::string share;
};

int parse_id(const std::string& text) {
  int v = 0;
  auto [p, e] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (e != std::errc() || p != text.data() + text.size() || v < 0)
    fail(Errc::SchemaViolation, "expected a participant id, got \"" + text + "\"");
  return v;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Latin-square secret sharing with an iterative-hash dealer"};
  app.require_subcommand(1);

  LsGenArgs ls_gen;
  LsFileArgs ls_check, ls_complete, ls_critical, ls_strong, ls_rect;
  LsCountArgs ls_count;
  LsOrderArgs ls_enumerate, ls_bound;
  PackArgs pack_args;
  UnpackArgs unpack_args;
  VectorArgs vector_args;
  DiamondDemoArgs demo_args;
  CommitArgs commit_args;
  RevealArgs reveal_args;
  DealThresholdArgs dt;
  DealCdsArgs dcds;
  DealCgsArgs dcgs;
  RecoverArgs rec;
  CombineArgs comb;
  VerifyArgs ver;

  auto* ls = app.add_subcommand("ls", "Latin square utilities");
  ls->require_subcommand(1);
  auto* gen = ls->add_subcommand("gen", "generate a random square");
  gen->add_option("--n", ls_gen.n, "order")->check(CLI::Range(1, kSolverMaxOrder));
  gen->add_option("--seed", ls_gen.seed, "RNG seed");
  gen->add_option("--out", ls_gen.out, "write the square here instead of stdout");
  auto* check = ls->add_subcommand("check", "validate a grid file");
  check->add_option("file", ls_check.file, "grid file")->required();
  auto* complete_cmd = ls->add_subcommand("complete", "complete a partial square");
  complete_cmd->add_option("file", ls_complete.file, "grid file")->required();
  auto* count_cmd = ls->add_subcommand("count", "count completions");
  count_cmd->add_option("file", ls_count.file, "grid file")->required();
  count_cmd->add_option("--limit", ls_count.limit, "stop counting at this many")
      ->check(CLI::PositiveNumber);
  auto* critical_cmd = ls->add_subcommand("critical", "test for a critical set");
  critical_cmd->add_option("file", ls_critical.file, "grid file")->required();
  auto* strong_cmd = ls->add_subcommand("strong", "trace forced placements");
  strong_cmd->add_option("file", ls_strong.file, "grid file")->required();
  auto* rect_cmd = ls->add_subcommand("rect", "extend a Latin rectangle");
  rect_cmd->add_option("file", ls_rect.file, "grid file")->required();
  auto* enum_cmd = ls->add_subcommand("enumerate", "count all squares of an order");
  enum_cmd->add_option("--n", ls_enumerate.n, "order")->required();
  auto* bound_cmd = ls->add_subcommand("bound", "factorial-product lower bound");
  bound_cmd->add_option("--n", ls_bound.n, "order")->required();

  auto* pack_cmd = app.add_subcommand("pack", "pack an order-10 square into bytes");
  pack_cmd->add_option("file", pack_args.file, "square file")->required();
  pack_cmd->add_option("--format", pack_args.format, "container bits")
      ->check(CLI::IsMember({256, 324}));
  pack_cmd->add_option("--out", pack_args.out, "write raw bytes here");

  auto* unpack_cmd = app.add_subcommand("unpack", "rebuild a square from packed bytes");
  unpack_cmd->add_option("--in", unpack_args.in, "raw byte file");
  unpack_cmd->add_option("--hex", unpack_args.hex, "hex string instead of a file");
  unpack_cmd->add_option("--format", unpack_args.format, "container bits")
      ->check(CLI::IsMember({256, 324}));

  auto* hash_cmd = app.add_subcommand("hash", "reduced-width hash tools");
  hash_cmd->require_subcommand(1);
  auto* vec = hash_cmd->add_subcommand("vector", "print IV / digest vectors");
  vec->add_option("--digest-bits", vector_args.digest_bits, "width")
      ->check(CLI::IsMember({8, 16, 24, 32, 40}));
  vec->add_option("--message-hex", vector_args.message_hex, "message bytes as hex");
  vec->add_option("--state-hex", vector_args.state_hex, "chaining value for one compress");
  vec->add_option("--block-hex", vector_args.block_hex, "block for one compress");
  auto* demo = hash_cmd->add_subcommand("diamond-demo", "build a collision tree");
  demo->add_option("--digest-bits", demo_args.digest_bits, "width")
      ->check(CLI::IsMember({8, 16, 24, 32, 40}));
  demo->add_option("--k", demo_args.k, "tree height")->check(CLI::Range(1, 16));
  demo->add_option("--seed", demo_args.seed, "RNG seed");
  demo->add_option("--out", demo_args.out, "save the tree as JSON here");
  auto* nost = hash_cmd->add_subcommand("nostradamus", "commit-then-herd demo");
  nost->require_subcommand(1);
  auto* commit = nost->add_subcommand("commit", "publish a root before the prefix is known");
  commit->add_option("--digest-bits", commit_args.digest_bits, "width")
      ->check(CLI::IsMember({8, 16, 24, 32}));
  commit->add_option("--k", commit_args.k, "tree height")->check(CLI::Range(1, 16));
  commit->add_option("--seed", commit_args.seed, "RNG seed");
  commit->add_option("--out", commit_args.out, "directory for diamond.json")->required();
  auto* reveal = nost->add_subcommand("reveal", "herd a known prefix into the root");
  reveal->add_option("--store", reveal_args.store, "directory or diamond.json")->required();
  reveal->add_option("--prefix-file", reveal_args.prefix_file, "prefix bytes")->required();
  reveal->add_option("--seed", reveal_args.seed, "RNG seed");
  reveal->add_option("--parallelism", reveal_args.parallelism, "search workers")
      ->check(CLI::Range(1, 256));
  reveal->add_option("--out", reveal_args.out, "message output file");

  auto* deal = app.add_subcommand("deal", "dealer workflows");
  deal->require_subcommand(1);
  auto* dthr = deal->add_subcommand("threshold", "herding threshold scheme");
  dthr->add_option("--n", dt.n, "participants")->required()->check(CLI::Range(1, 24));
  dthr->add_option("--t", dt.t, "tolerated participants (t+1 recover)")->required();
  dthr->add_option("--digest-bits", dt.digest_bits, "width")
      ->check(CLI::IsMember({8, 16, 24, 32, 40}));
  auto* pf = dthr->add_option("--payload-file", dt.payload_file, "secret payload bytes");
  dthr->add_flag("--gen-square", dt.gen_square,
                 "use a packed random order-10 square as the payload")
      ->excludes(pf);
  dthr->add_option("--exclude", dt.exclude, "subset to drop, e.g. 1,2");
  dthr->add_option("--seed", dt.seed, "RNG seed");
  dthr->add_option("--out", dt.out, "output directory")->required();
  auto* dcds_cmd = deal->add_subcommand("cds", "critical-set dealing");
  dcds_cmd->add_option("--square", dcds.square, "full square file")->required();
  dcds_cmd->add_option("--critical", dcds.critical, "critical set file (repeatable)")
      ->required();
  dcds_cmd->add_option("--participants", dcds.participants, "share count");
  dcds_cmd->add_option("--out", dcds.out, "output directory")->required();
  auto* dcgs_cmd = deal->add_subcommand("cgs", "additive modular dealing");
  dcgs_cmd->add_option("--critical", dcgs.critical, "critical set file")->required();
  dcgs_cmd->add_option("--participants", dcgs.participants, "share count")
      ->required()
      ->check(CLI::Range(2, 1000));
  dcgs_cmd->add_option("--seed", dcgs.seed, "RNG seed");
  dcgs_cmd->add_option("--out", dcgs.out, "output directory")->required();

  auto* recover_cmd = app.add_subcommand("recover", "recover a threshold payload");
  recover_cmd->add_option("--store", rec.store, "directory or store.json")->required();
  recover_cmd->add_option("--share", rec.shares, "share file (repeatable)")
      ->required();
  recover_cmd->add_flag("--raw", rec.raw, "always print hex, never a square");
  recover_cmd->add_option("--out", rec.out, "write raw payload bytes here");

  auto* combine_cmd = app.add_subcommand("combine", "combine additive shares");
  combine_cmd->require_subcommand(1);
  auto* ccgs = combine_cmd->add_subcommand("cgs", "sum triple shares mod n");
  ccgs->add_option("--share", comb.shares, "triple share file (repeatable)")
      ->required();
  ccgs->add_option("--order", comb.order, "override the declared order");

  auto* verify_cmd = app.add_subcommand("verify", "check a share against commitments");
  verify_cmd->add_option("--store", ver.store, "directory or store.json")->required();
  verify_cmd->add_option("--share", ver.share, "share file")->required();

  try {
    app.parse(argc, argv);

    if (gen->parsed()) {
      uint64_t seed = pick_seed(gen, ls_gen.seed);
      LatinSquare sq = random_square(ls_gen.n, seed);
      std::string text = format_grid_text(sq);
      if (ls_gen.out.empty())
        std::cout << text;
      else
        write_atomic(ls_gen.out, text);
      return 0;
    }
    if (check->parsed()) {
      RawGrid raw = parse_grid_text(read_file(ls_check.file));
      if (raw.full()) {
        bool ok = validate_square(raw.cells);
        std::cout << (ok ? "latin: yes\n" : "latin: no\n");
        return ok ? 0 : 1;
      }
      PartialLatinSquare p = PartialLatinSquare::from_grid(raw.cells);
      std::cout << "partial: valid (" << p.size() << " cells)\n";
      return 0;
    }
    if (complete_cmd->parsed()) {
      std::cout << format_grid_text(complete(partial_from_file(ls_complete.file)));
      return 0;
    }
    if (count_cmd->parsed()) {
      int64_t c = count_completions(partial_from_file(ls_count.file), ls_count.limit);
      if (c >= ls_count.limit)
        std::cout << "count: >= " << c << "\n";
      else
        std::cout << "count: " << c << "\n";
      return 0;
    }
    if (critical_cmd->parsed()) {
      PartialLatinSquare p = partial_from_file(ls_critical.file);
      bool crit = is_critical_set(p);
      bool strong = crit && is_strong_critical_set(p);
      std::cout << "critical: " << (crit ? "yes" : "no") << ", strong: "
                << (strong ? "yes" : "no") << "\n";
      return crit ? 0 : 1;
    }
    if (strong_cmd->parsed()) {
      ForceOutTrace trace = force_out(partial_from_file(ls_strong.file));
      std::cout << "steps: " << trace.steps.size() << "\n";
      for (const Triple& t : trace.steps)
        std::cout << t.row << " " << t.col << " " << t.sym << "\n";
      std::cout << "complete: " << (trace.final_state.full() ? "yes" : "no") << "\n";
      return 0;
    }
    if (rect_cmd->parsed()) {
      RawGrid raw = parse_grid_text(read_file(ls_rect.file));
      int m = 0;
      while (m < raw.order) {
        bool full_row = true;
        for (int c = 0; c < raw.order; ++c)
          if (raw.cells[m][c] < 0) full_row = false;
        if (!full_row) break;
        ++m;
      }
      if (m == 0) fail(Errc::InvalidRectangle, "first row is not fully filled");
      for (int r = m; r < raw.order; ++r)
        for (int c = 0; c < raw.order; ++c)
          if (raw.cells[r][c] >= 0)
            fail(Errc::InvalidRectangle, "rows after the rectangle must be empty");
      std::vector<std::vector<int>> rect_rows(raw.cells.begin(), raw.cells.begin() + m);
      std::cout << format_grid_text(extend_rectangle(rect_rows));
      return 0;
    }
    if (enum_cmd->parsed()) {
      std::cout << "count: " << enumerate_count(ls_enumerate.n) << "\n";
      return 0;
    }
    if (bound_cmd->parsed()) {
      std::cout << "bound: " << count_lower_bound(ls_bound.n).str() << "\n";
      return 0;
    }

    if (pack_cmd->parsed()) {
      LatinSquare sq = square_from_file(pack_args.file);
      std::vector<uint8_t> bytes;
      if (pack_args.format == 256) {
        auto packed = pack256(sq);
        bytes.assign(packed.bytes.begin(), packed.bytes.end());
      } else {
        auto packed = pack324(sq);
        bytes.assign(packed.bytes.begin(), packed.bytes.end());
      }
      if (pack_args.out.empty())
        std::cout << to_hex(bytes) << "\n";
      else
        write_bytes(pack_args.out, bytes);
      return 0;
    }
    if (unpack_cmd->parsed()) {
      std::vector<uint8_t> bytes;
      if (!unpack_args.hex.empty())
        bytes = from_hex(unpack_args.hex);
      else if (!unpack_args.in.empty())
        bytes = read_bytes(unpack_args.in);
      else
        fail(Errc::SchemaViolation, "one of --in and --hex is required");
      LatinSquare sq = (unpack_args.format == 256)
                           ? unpack256(pack256_from_bytes(bytes))
                           : unpack324(pack324_from_bytes(bytes));
      std::cout << format_grid_text(sq);
      return 0;
    }

    if (vec->parsed()) {
      HashParams hp(vector_args.digest_bits);
      if (!vector_args.state_hex.empty() || !vector_args.block_hex.empty()) {
        if (vector_args.state_hex.empty() || vector_args.block_hex.empty())
          fail(Errc::SchemaViolation, "--state-hex and --block-hex go together");
        ChainState s = state_from_hex(hp, vector_args.state_hex);
        Block b = block_from_hex(vector_args.block_hex);
        std::cout << "compress: " << state_hex(hp, compress(hp, s, b)) << "\n";
        return 0;
      }
      auto message = from_hex(vector_args.message_hex);
      std::cout << "iv: " << state_hex(hp, iv(hp)) << "\n";
      std::cout << "hash: " << state_hex(hp, hash_full(hp, message)) << "\n";
      return 0;
    }
    if (demo->parsed()) {
      HashParams hp(demo_args.digest_bits);
      uint64_t seed = pick_seed(demo, demo_args.seed);
      std::mt19937_64 rng(seed);
      auto leaves = random_distinct_states(hp, size_t(1) << demo_args.k, rng);
      Diamond dia = build_diamond(hp, leaves, rng());
      if (!demo_args.out.empty()) save_diamond(dia, demo_args.out);
      std::cout << "root: " << state_hex(hp, dia.root()) << "\n";
      std::cout << "probes: " << dia.build_probes << "\n";
      return 0;
    }
    if (commit->parsed()) {
      HashParams hp(commit_args.digest_bits);
      uint64_t seed = pick_seed(commit, commit_args.seed);
      std::mt19937_64 rng(seed);
      auto leaves = random_distinct_states(hp, size_t(1) << commit_args.k, rng);
      Diamond dia = build_diamond(hp, leaves, rng());
      fs::create_directories(commit_args.out);
      save_diamond(dia, fs::path(commit_args.out) / "diamond.json");
      std::cout << "root: " << state_hex(hp, dia.root()) << "\n";
      return 0;
    }
    if (reveal->parsed()) {
      Diamond dia = load_diamond(in_dir(reveal_args.store, "diamond.json"));
      const HashParams& hp = dia.params;
      uint64_t seed = pick_seed(reveal, reveal_args.seed);
      std::vector<uint8_t> prefix = read_bytes(reveal_args.prefix_file);
      while (prefix.size() % 8 != 0) prefix.push_back(0x00);
      HerdResult herd = herd_prefix(hp, dia, prefix, seed, reveal_args.parallelism);
      std::vector<uint8_t> message = prefix;
      message.insert(message.end(), herd.link_block.begin(), herd.link_block.end());
      auto suffix_bytes = blocks_to_bytes(herd.suffix);
      message.insert(message.end(), suffix_bytes.begin(), suffix_bytes.end());
      fs::path out = reveal_args.out.empty()
                         ? in_dir(reveal_args.store, "reveal.bin")
                         : fs::path(reveal_args.out);
      write_bytes(out, message);
      bool ok = iterate(hp, iv(hp), bytes_to_blocks(message)) == dia.root();
      std::cout << "root: " << state_hex(hp, dia.root()) << "\n";
      std::cout << "leaf: " << herd.leaf_index << "\n";
      std::cout << "probes: " << herd.probes << "\n";
      std::cout << "message-bytes: " << message.size() << "\n";
      std::cout << "verified: " << (ok ? "yes" : "no") << "\n";
      return ok ? 0 : 1;
    }

    if (dthr->parsed()) {
      HashParams hp(dt.digest_bits);
      uint64_t seed = pick_seed(dthr, dt.seed);
      AccessStructure acc = minimal_subsets(dt.n, dt.t);
      for (const std::string& ex : dt.exclude) {
        std::vector<int> subset;
        std::stringstream ss(ex);
        std::string item;
        while (std::getline(ss, item, ',')) subset.push_back(parse_id(item));
        acc = exclude_subset(acc, subset);
      }
      std::vector<uint8_t> payload;
      if (dt.gen_square) {
        auto packed = pack256(random_recoverable_square(seed));
        payload.assign(packed.bytes.begin(), packed.bytes.end());
      } else if (!dt.payload_file.empty()) {
        payload = read_bytes(dt.payload_file);
      } else {
        fail(Errc::SchemaViolation, "one of --payload-file and --gen-square is required");
      }
      ThresholdDeal deal_out = threshold_setup(hp, acc, payload, seed);
      fs::create_directories(dt.out);
      save_store(deal_out.store, fs::path(dt.out) / "store.json");
      for (const HashShare& sh : deal_out.shares)
        save_share(sh, fs::path(dt.out) / ("share_" + std::to_string(sh.owner) + ".json"));
      std::cout << "store: " << (fs::path(dt.out) / "store.json").string() << "\n";
      std::cout << "shares: " << deal_out.shares.size() << "\n";
      return 0;
    }
    if (dcds_cmd->parsed()) {
      LatinSquare sq = square_from_file(dcds.square);
      std::vector<PartialLatinSquare> css;
      for (const std::string& f : dcds.critical) css.push_back(partial_from_file(f));
      std::set<Triple> pool;
      for (const auto& cs : css)
        for (const Triple& t : cs.triples()) pool.insert(t);
      int participants = dcds.participants > 0 ? dcds.participants : int(pool.size());
      std::map<Triple, int> assignment;
      int i = 0;
      for (const Triple& t : pool) assignment[t] = i++ % participants;
      auto shares = cds_deal(sq, css, assignment);
      fs::create_directories(dcds.out);
      for (const TripleShare& sh : shares)
        save_triple_share(sh,
                          fs::path(dcds.out) / ("tshare_" + std::to_string(sh.owner) + ".json"));
      std::cout << "union: " << pool.size() << "\n";
      std::cout << "shares: " << shares.size() << "\n";
      return 0;
    }
    if (dcgs_cmd->parsed()) {
      PartialLatinSquare critical = partial_from_file(dcgs.critical);
      uint64_t seed = pick_seed(dcgs_cmd, dcgs.seed);
      auto shares = cgs_deal(critical, dcgs.participants, seed);
      fs::create_directories(dcgs.out);
      for (const TripleShare& sh : shares)
        save_triple_share(sh,
                          fs::path(dcgs.out) / ("tshare_" + std::to_string(sh.owner) + ".json"));
      std::cout << "shares: " << shares.size() << "\n";
      return 0;
    }

    if (recover_cmd->parsed()) {
      PublicStore store = load_store(in_dir(rec.store, "store.json"));
      std::vector<HashShare> shares;
      for (const std::string& f : rec.shares) shares.push_back(load_share(f));
      std::vector<uint8_t> payload = threshold_recover(store, shares);
      if (!rec.out.empty()) write_bytes(rec.out, payload);
      print_payload(payload, rec.raw);
      return 0;
    }
    if (ccgs->parsed()) {
      std::vector<TripleShare> shares;
      for (const std::string& f : comb.shares) shares.push_back(load_triple_share(f));
      int order = comb.order > 0 ? comb.order
                                 : (shares.empty() ? 0 : shares.front().order);
      auto combined = cgs_combine(shares, order);
      for (const Triple& t : combined)
        std::cout << t.row << " " << t.col << " " << t.sym << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      PublicStore store = load_store(in_dir(ver.store, "store.json"));
      HashShare share = load_share(ver.share);
      auto match = vss_verify(share, store);
      if (match) {
        std::cout << "match: " << *match << "\n";
        return 0;
      }
      std::cout << "match: none\n";
      return 1;
    }
    return 2;  // unreachable: require_subcommand guarantees a branch
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::SchemaViolation ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace lsss::cli
