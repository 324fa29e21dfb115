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

namespace lsss::cli {

// Entry point behind the lsss binary. Exit codes: 0 success, 1 domain error
// (NotAuthorized, NotUnique, NotRecoverable, ...), 2 usage or schema error.
int run(int argc, const char* const* argv);

}  // namespace lsss::cli
