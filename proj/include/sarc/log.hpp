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

#pragma once

#include <spdlog/spdlog.h>

#include <memory>
#include <string>
#include <vector>

namespace sarc::log {

// Process-wide pipeline logger. Writes to stderr by default; further sinks
// (run logs, test capture) are attached with add_sink.
spdlog::logger& get();

void add_sink(const spdlog::sink_ptr& sink);
void remove_sink(const spdlog::sink_ptr& sink);
void set_level(spdlog::level::level_enum level);
void set_stderr_enabled(bool enabled);

struct Entry {
  spdlog::level::level_enum level;
  std::string message;
};

// While alive, records logged on the constructing thread are held back
// instead of written. Concurrent jobs capture their output and the caller
// replays it in a fixed order, so logs do not depend on scheduling.
class Capture {
 public:
  Capture();
  ~Capture();
  Capture(const Capture&) = delete;
  Capture& operator=(const Capture&) = delete;
  std::vector<Entry> take();

 private:
  std::vector<Entry> entries_;
  std::vector<Entry>* previous_;
};

void replay(const std::vector<Entry>& entries);

}  // namespace sarc::log
