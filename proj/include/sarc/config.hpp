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

// YAML experiment configuration. The accepted keys are listed in
// docs/config.md; unknown keys are rejected and every error names the full
// key path (e.g. "task_a.hparams.batch_size").

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "sarc/preprocess.hpp"
#include "sarc/tasks.hpp"

namespace sarc {

enum class TaskKind { kA, kB, kC };

std::string_view task_name(TaskKind t);

// Where evaluation inputs come from. Task A/B: one text per line, or a CSV
// column when `column` is set. Task C: CSV with two text columns.
struct EvalInput {
  std::filesystem::path path;
  std::optional<std::string> column;
  std::string column_0 = "text_0";
  std::string column_1 = "text_1";
  char delimiter = ',';
};

struct TaskCConfig {
  TaskAConfig train;
  std::optional<EvalInput> eval;
};

struct ExperimentConfig {
  TaskKind task = TaskKind::kA;
  std::uint64_t seed = 42;
  std::filesystem::path output_dir = "runs/default";
  std::string log_level = "info";
  std::optional<TaskAConfig> task_a;
  std::optional<TaskBConfig> task_b;
  std::optional<TaskCConfig> task_c;
  // Evaluation inputs of task A or B.
  std::optional<EvalInput> eval;
};

// Relative paths inside the document resolve against base_dir.
ExperimentConfig parse_experiment(std::string_view yaml, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment(const std::filesystem::path& path);

// Preprocessing settings alone, as used by the preprocess subcommand. Keys
// are those of a task's `preprocess` section.
PreprocessConfig parse_preprocess_config(std::string_view yaml, const std::filesystem::path& base_dir = {});

// Replaces every seed (hparams, split, augmentation) with `seed`.
void override_seed(ExperimentConfig& config, std::uint64_t seed);

// Throws ConfigError for names other than trace, debug, info, warn, error,
// off.
void check_log_level(std::string_view level);

}  // namespace sarc
