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

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pauliprop/analytics.hpp"
#include "pauliprop/pauli_sum.hpp"
#include "pauliprop/propagation.hpp"

namespace pauliprop {

/// Operator dump: '#' comment lines (optionally "# key=value ..."), then one
/// "<coefficient> <pauli-string>" line per term.
struct OperatorDump {
  PauliSum op;
  std::map<std::string, std::string> header;
};

std::string format_operator(const PauliSum& sum, const std::vector<std::string>& header_lines = {});
OperatorDump parse_operator(std::string_view text);
OperatorDump read_operator_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);
std::string read_text_file(const std::filesystem::path& path);

/// step,time,value,terms,discarded_mass,norm_ratio[,ose_half,ose_shannon]
void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRecord>& records,
                          const std::vector<std::string>& header_lines, bool with_ose);

/// bucket_lo,bucket_hi,mass
void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins,
                         const std::vector<std::string>& header_lines);

}  // namespace pauliprop
