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

#include "pauliprop/operator_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pauliprop/hamiltonian.hpp"

namespace pauliprop {
namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_header(std::ostream& out, const std::vector<std::string>& lines) {
  for (const auto& line : lines) out << "# " << line << '\n';
}

}  // namespace

std::string format_operator(const PauliSum& sum, const std::vector<std::string>& header_lines) {
  std::ostringstream out;
  write_header(out, header_lines);
  for (const auto& [word, c] : sum.sorted_terms()) out << fmt17(c) << ' ' << word.to_string() << '\n';
  return out.str();
}

OperatorDump parse_operator(std::string_view text) {
  OperatorDump dump;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool sized = false;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream tokens(line.substr(first + 1));
      std::string token;
      while (tokens >> token) {
        const auto eq = token.find('=');
        if (eq != std::string::npos && eq > 0) dump.header[token.substr(0, eq)] = token.substr(eq + 1);
      }
      continue;
    }
    std::istringstream fields(line);
    double c = 0.0;
    std::string text_word, extra;
    if (!(fields >> c) || !(fields >> text_word) || (fields >> extra)) {
      throw ParseError(line_no, "expected '<coefficient> <pauli-string>'");
    }
    if (!sized) {
      dump.op = PauliSum(text_word.size());
      sized = true;
    } else if (text_word.size() != dump.op.num_qubits()) {
      throw ParseError(line_no, "Pauli string length mismatch");
    }
    try {
      dump.op.accumulate(PauliWord::from_string(text_word), c);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  return dump;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << contents;
}

OperatorDump read_operator_file(const std::filesystem::path& path) {
  return parse_operator(read_text_file(path));
}

void write_trajectory_csv(std::ostream& out, const std::vector<TrajectoryRecord>& records,
                          const std::vector<std::string>& header_lines, bool with_ose) {
  write_header(out, header_lines);
  out << "step,time,value,terms,discarded_mass,norm_ratio";
  if (with_ose) out << ",ose_half,ose_shannon";
  out << '\n';
  auto opt = [](const std::optional<double>& v) { return v ? fmt17(*v) : std::string("nan"); };
  for (const auto& r : records) {
    out << r.step << ',' << fmt17(r.time) << ',' << fmt17(r.value) << ',' << r.terms << ','
        << fmt17(r.discarded_mass) << ',' << fmt17(r.norm_ratio);
    if (with_ose) out << ',' << opt(r.ose_half) << ',' << opt(r.ose_shannon);
    out << '\n';
  }
}

void write_histogram_csv(std::ostream& out, const std::vector<HistogramBin>& bins,
                         const std::vector<std::string>& header_lines) {
  write_header(out, header_lines);
  out << "bucket_lo,bucket_hi,mass\n";
  for (const auto& b : bins) out << fmt17(b.lo) << ',' << fmt17(b.hi) << ',' << fmt17(b.mass) << '\n';
}

}  // namespace pauliprop
