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

#include "sarc/log.hpp"

#include <spdlog/sinks/dist_sink.h>
#include <spdlog/sinks/stdout_sinks.h>

#include <utility>

namespace sarc::log {

namespace {

thread_local std::vector<Entry>* tl_capture = nullptr;

// Front sink: diverts records to the calling thread's capture buffer, if
// any, and forwards everything else to the distribution sink.
class RouterSink final : public spdlog::sinks::sink {
 public:
  explicit RouterSink(std::shared_ptr<spdlog::sinks::dist_sink_mt> dist) : dist_(std::move(dist)) {}
  void log(const spdlog::details::log_msg& msg) override {
    if (tl_capture) {
      tl_capture->push_back({msg.level, std::string(msg.payload.data(), msg.payload.size())});
      return;
    }
    dist_->log(msg);
  }
  void flush() override { dist_->flush(); }
  void set_pattern(const std::string& pattern) override { dist_->set_pattern(pattern); }
  void set_formatter(std::unique_ptr<spdlog::formatter> f) override { dist_->set_formatter(std::move(f)); }

 private:
  std::shared_ptr<spdlog::sinks::dist_sink_mt> dist_;
};

struct State {
  std::shared_ptr<spdlog::sinks::dist_sink_mt> dist = std::make_shared<spdlog::sinks::dist_sink_mt>();
  spdlog::sink_ptr stderr_sink = std::make_shared<spdlog::sinks::stderr_sink_mt>();
  std::shared_ptr<spdlog::logger> logger;

  State() {
    stderr_sink->set_pattern("[%l] %v");
    dist->add_sink(stderr_sink);
    logger = std::make_shared<spdlog::logger>("sarc", std::make_shared<RouterSink>(dist));
    logger->set_level(spdlog::level::info);
    logger->flush_on(spdlog::level::info);
  }
};

State& state() {
  static State s;
  return s;
}

}  // namespace

spdlog::logger& get() { return *state().logger; }

void add_sink(const spdlog::sink_ptr& sink) { state().dist->add_sink(sink); }

void remove_sink(const spdlog::sink_ptr& sink) { state().dist->remove_sink(sink); }

void set_level(spdlog::level::level_enum level) { state().logger->set_level(level); }

void set_stderr_enabled(bool enabled) {
  auto& s = state();
  s.dist->remove_sink(s.stderr_sink);
  if (enabled) s.dist->add_sink(s.stderr_sink);
}

Capture::Capture() : previous_(tl_capture) { tl_capture = &entries_; }

Capture::~Capture() { tl_capture = previous_; }

std::vector<Entry> Capture::take() { return std::exchange(entries_, {}); }

void replay(const std::vector<Entry>& entries) {
  for (const auto& e : entries) get().log(e.level, "{}", e.message);
}

}  // namespace sarc::log
