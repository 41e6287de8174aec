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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sarc {

// Root of every error thrown by the pipeline. The CLI maps any Error to a
// nonzero exit code and prints what() on stderr.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Corpus file could not be read or lacks a required column.
class LoadError : public Error {
 public:
  using Error::Error;
};

// A single record violates a TextInstance invariant.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t row, const std::string& what)
      : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class SpecError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class DatasetError : public Error {
 public:
  using Error::Error;
};

class RegistryError : public Error {
 public:
  using Error::Error;
};

// Something the environment must provide (a pretrained model, a file) is
// missing.
class EnvironmentError : public Error {
 public:
  using Error::Error;
};

class TrainingError : public Error {
 public:
  using Error::Error;
};

class CheckpointError : public Error {
 public:
  using Error::Error;
};

class MetricError : public Error {
 public:
  using Error::Error;
};

class MergeError : public Error {
 public:
  using Error::Error;
};

}  // namespace sarc
