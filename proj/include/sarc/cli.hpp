// Copyright 2026 The sarcpipe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end. Results go to `out`, diagnostics and log records
// to `err`; the return value is the process exit code (0 iff no error).

#pragma once

#include <ostream>

namespace sarc {

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sarc
