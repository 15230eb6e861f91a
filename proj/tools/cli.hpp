// Copyright 2026 The pauliprop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pauliprop/hamiltonian.hpp"
#include "pauliprop/pauli_sum.hpp"
#include "pauliprop/product_state.hpp"
#include "pauliprop/propagation.hpp"

namespace pauliprop::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kInvalidInput = 2, kEngineAbort = 3 };

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parsed `simulate` configuration.
///
/// Grammar: one `key = value` per line; `#` starts a comment; blank lines are
/// ignored; keys are case-sensitive and may appear once.
struct SimConfig {
  std::string model = "xxz";  // xxz | file
  std::string hamiltonian_file;
  std::size_t length = 0;
  double jx = 1.0, jy = 1.0, jz = 0.0;
  Boundary boundary = Boundary::Open;
  double t = 0.0;
  std::size_t steps = 0;  // either steps or tau must be set
  double tau = 0.0;
  TruncationPolicy policy = TruncationPolicy::unbounded();
  std::string observable = "staggered";
  MagnetizationMode mode = MagnetizationMode::PerSite;
  std::string state = "neel";
  std::size_t record_every = 1;
  std::uint64_t seed = 0;
  std::filesystem::path out_dir = "out";
  std::size_t snapshot_every = 0;
  bool ose = false;
  std::size_t threads = 0;

  RunConfig run_config() const;
  /// Canonical `key=value` echo covering every field.
  std::vector<std::string> echo() const;
};

SimConfig parse_config(const std::string& text);

/// Builds the Hamiltonian described by the configuration.
Hamiltonian build_hamiltonian(const SimConfig& config);

/// Single-observable parse: `Z25`, a full Pauli string, or a site-indexed letter.
PauliSum parse_observable(const std::string& spec, std::size_t n);

std::vector<std::string> version_header();

int cmd_simulate(const std::filesystem::path& config_path, std::ostream& out, std::ostream& err);

struct AnalyzeOptions {
  std::filesystem::path input;
  std::filesystem::path out_dir;  // defaults to <input dir>/analysis
  std::vector<double> alphas{0.5, 1.0};
  std::vector<std::size_t> budgets{4096};
  std::optional<double> epsilon;
};

int cmd_analyze(const AnalyzeOptions& options, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& suite, std::uint64_t seed, std::ostream& out, std::ostream& err);
int cmd_bound(double entropy, double epsilon, double alpha, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int run(int argc, char** argv);

}  // namespace pauliprop::cli
