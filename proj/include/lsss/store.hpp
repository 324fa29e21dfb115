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

#include <filesystem>
#include <string>
#include <string_view>

#include "lsss/hash.hpp"
#include "lsss/schemes.hpp"

namespace lsss {

// JSON persistence for dealer-published artifacts. All writers emit a
// canonical form (fixed key order, two-space indent, lowercase hex, trailing
// newline) so that saving the same value twice is byte-identical, and write
// atomically via a temp file + rename. Loaders validate strictly: unknown
// fields, wrong types, bad hex, or broken cross-field invariants raise
// SchemaViolation naming the offending field.

std::string read_file(const std::filesystem::path& path);              // IoError
void write_atomic(const std::filesystem::path& path, std::string_view data);

// "lsss-store-v1"
void save_store(const PublicStore& store, const std::filesystem::path& path);
PublicStore load_store(const std::filesystem::path& path);
std::string store_to_json(const PublicStore& store);
PublicStore store_from_json(std::string_view text);

// "lsss-share-v1"
void save_share(const HashShare& share, const std::filesystem::path& path);
HashShare load_share(const std::filesystem::path& path);
std::string share_to_json(const HashShare& share);
HashShare share_from_json(std::string_view text);

// "lsss-tshare-v1" (critical-set and additive triple shares)
void save_triple_share(const TripleShare& share, const std::filesystem::path& path);
TripleShare load_triple_share(const std::filesystem::path& path);
std::string triple_share_to_json(const TripleShare& share);
TripleShare triple_share_from_json(std::string_view text);

// "lsss-diamond-v1" (public commitment for the herding demo); loading
// re-verifies every collision edge.
void save_diamond(const Diamond& dia, const std::filesystem::path& path);
Diamond load_diamond(const std::filesystem::path& path);
std::string diamond_to_json(const Diamond& dia);
Diamond diamond_from_json(std::string_view text);

}  // namespace lsss
