// Copyright 2026 The qmorse Authors
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

#include <stdexcept>
#include <string>

namespace qmorse {

// Invalid argument or model parameters.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// A quantity left the representable range. Carries the name of the offending
// parameter and the threshold that was crossed.
class RangeError : public std::range_error {
public:
  RangeError(std::string parameter, double threshold, const std::string& what)
      : std::range_error(what), parameter_(std::move(parameter)), threshold_(threshold) {}

  const std::string& parameter() const noexcept { return parameter_; }
  double threshold() const noexcept { return threshold_; }

private:
  std::string parameter_;
  double threshold_;
};

// Quantum number above the highest bound level.
class LevelError : public std::out_of_range {
public:
  LevelError(int n, int n_max)
      : std::out_of_range("level n=" + std::to_string(n) + " exceeds n_max=" + std::to_string(n_max)),
        n_(n), n_max_(n_max) {}

  int n() const noexcept { return n_; }
  int n_max() const noexcept { return n_max_; }

private:
  int n_;
  int n_max_;
};

// Malformed configuration; `path` names the offending field ("model.De").
class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

private:
  std::string path_;
};

}  // namespace qmorse
