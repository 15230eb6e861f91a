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

#include "pauliprop/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>
#include <limits>
#include <map>

#include "pauliprop/truncation.hpp"

namespace pauliprop {

OseResult ose(const PauliSum& sum, double alpha) {
  if (sum.empty()) throw std::domain_error("ose: operator is empty");
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("ose: alpha must lie in (0, 1]");

  // Everything in the log domain: ln c^2 = 2 ln|c| survives where c^2 underflows.
  std::vector<double> log_sq;
  log_sq.reserve(sum.size());
  for (double c : sum.coefficients()) {
    if (c != 0.0) log_sq.push_back(2.0 * std::log(std::abs(c)));
  }
  if (log_sq.empty()) throw std::domain_error("ose: operator has zero norm");
  auto log_sum_exp = [&](double scale) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : log_sq) peak = std::max(peak, scale * v);
    double acc = 0.0;
    for (double v : log_sq) acc += std::exp(scale * v - peak);
    return peak + std::log(acc);
  };

  OseResult result;
  result.alpha = alpha;
  const double log_total = log_sum_exp(1.0);
  result.normalized = std::abs(std::exp(log_total) - 1.0) <= 1e-6;

  if (alpha == 1.0) {
    double h = 0.0;
    for (double v : log_sq) {
      const double log_p = v - log_total;
      h -= std::exp(log_p) * log_p;
    }
    result.value = h;
    return result;
  }
  result.value = log_sum_exp(alpha) / (1.0 - alpha);
  return result;
}

namespace {
void require_open_alpha(double alpha, const char* what) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::domain_error(std::string(what) + ": alpha must lie in (0, 1)");
}
}  // namespace

double delta_bound(double entropy, double k, double alpha) {
  require_open_alpha(alpha, "delta_bound");
  if (!(k >= 1.0)) throw std::domain_error("delta_bound: K must be >= 1");
  return ((1.0 - alpha) / alpha) * (entropy - std::log(k)) + std::log(alpha / (1.0 - alpha));
}

BudgetOverflow::BudgetOverflow(double ln_value)
    : std::overflow_error("required budget exceeds representable range (ln K = " + std::to_string(ln_value) + ")"),
      ln_value_(ln_value) {}

double ln_k_prescription(double entropy, double epsilon, double alpha) {
  require_open_alpha(alpha, "k_prescription");
  if (!(epsilon > 0.0)) throw std::domain_error("k_prescription: epsilon must be > 0");
  const double ratio = alpha / (1.0 - alpha);
  return entropy + ratio * std::log(2.0 * alpha / ((1.0 - alpha) * epsilon * epsilon));
}

std::uint64_t k_prescription(double entropy, double epsilon, double alpha) {
  const double ln_k = ln_k_prescription(entropy, epsilon, alpha);
  if (!(ln_k < 63.0 * std::log(2.0))) throw BudgetOverflow(ln_k);
  const double k = std::ceil(std::exp(ln_k));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(k));
}

BoundReport bound_report(double entropy, double alpha, std::size_t k, std::optional<double> epsilon) {
  BoundReport report;
  report.k = k;
  report.alpha = alpha;
  report.entropy = entropy;
  report.ln_delta_bound = delta_bound(entropy, static_cast<double>(k), alpha);
  if (epsilon) {
    report.epsilon = epsilon;
    report.ln_k_required = ln_k_prescription(entropy, *epsilon, alpha);
    try {
      report.k_required = k_prescription(entropy, *epsilon, alpha);
    } catch (const BudgetOverflow&) {
      report.k_required.reset();
    }
  }
  return report;
}

TruncationErrorReport truncation_error(const PauliSum& sum, std::size_t k) {
  if (k < 1) throw std::invalid_argument("truncation_error: K must be >= 1");
  TruncationErrorReport report;
  if (k >= sum.size()) return report;
  const double total = sum.squared_norm();
  const double tail = squared_tail(sum, k);
  const double kept = std::max(0.0, total - tail);
  // ||O - O_hat||^2 = 2||O||^2 (1 - sqrt(kept/total)) = 2 tail / (1 + sqrt(kept/total)).
  report.exact = std::sqrt(2.0 * tail / (1.0 + std::sqrt(kept / total)));
  report.bound = std::sqrt(2.0 * tail);
  return report;
}

bool in_free_fermion_family(const PauliWord& word) {
  const std::size_t n = word.num_qubits();
  std::size_t first = n, last = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (word.at(j) != 'I') {
      first = std::min(first, j);
      last = j;
    }
  }
  if (first == n) return false;
  if (first == last) return word.at(first) == 'Z';
  auto end_ok = [](char c) { return c == 'X' || c == 'Y'; };
  if (!end_ok(word.at(first)) || !end_ok(word.at(last))) return false;
  for (std::size_t j = first + 1; j < last; ++j) {
    if (word.at(j) != 'Z') return false;
  }
  return true;
}

XyStructureReport xy_structure_check(const PauliSum& sum, std::size_t site, std::size_t steps) {
  XyStructureReport report;
  report.site = site;
  report.steps = steps;
  report.count = sum.size();
  const std::size_t lo = site >= steps ? site - steps : 0;
  const std::size_t hi = site + steps;

  // A family violation is the more informative witness, so it replaces a
  // light-cone witness found earlier.
  for (const auto& [word, coeff] : sum.sorted_terms()) {
    if (!in_free_fermion_family(word)) {
      if (report.family_ok) {
        report.witness = word;
        report.message = "term " + word.to_string() + " is outside the Z / XZ..ZY family";
      }
      report.family_ok = false;
    }
    for (std::size_t j = 0; j < word.num_qubits(); ++j) {
      if (word.at(j) != 'I' && (j < lo || j > hi)) {
        if (!report.witness) {
          report.witness = word;
          report.message = "term " + word.to_string() + " leaves the light cone [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]";
        }
        report.support_ok = false;
        break;
      }
    }
  }
  if (steps >= 1) {
    report.count_bound = 2 * steps + 4 * steps * (2 * steps - 1);
    report.count_ok = report.count <= report.count_bound;
    if (!report.count_ok && report.message.empty()) {
      report.message = "term count " + std::to_string(report.count) + " exceeds " + std::to_string(report.count_bound);
    }
  }
  return report;
}

double weight_truncation_bound(const PauliSum& sum, std::size_t max_weight) {
  if (max_weight < 1) throw std::invalid_argument("weight_truncation_bound: M must be >= 1");
  double heavy = 0.0;
  for (std::size_t p = 0; p < sum.size(); ++p) {
    if (bits::weight(sum.key(p).data(), sum.num_blocks()) >= max_weight) heavy += sum.coeff(p) * sum.coeff(p);
  }
  return std::pow(2.0 / 3.0, static_cast<double>(max_weight)) * sum.squared_norm() + heavy;
}

Distributions distributions(const PauliSum& sum) {
  std::map<int, HistogramBin> magnitude;
  std::map<std::size_t, HistogramBin> weight;
  for (std::size_t p = 0; p < sum.size(); ++p) {
    const double sq = sum.coeff(p) * sum.coeff(p);
    if (sq > 0.0) {
      int e = 0;
      std::frexp(sq, &e);  // sq in [2^{e-1}, 2^e)
      HistogramBin& bin = magnitude[e - 1];
      bin.lo = std::ldexp(1.0, e - 1);
      bin.hi = std::ldexp(1.0, e);
      bin.mass += sq;
      ++bin.count;
    }
    const std::size_t w = bits::weight(sum.key(p).data(), sum.num_blocks());
    HistogramBin& wb = weight[w];
    wb.lo = static_cast<double>(w);
    wb.hi = static_cast<double>(w + 1);
    wb.mass += sq;
    ++wb.count;
  }
  Distributions out;
  out.terms = sum.size();
  for (auto& [b, bin] : magnitude) out.magnitude.push_back(bin);
  for (auto& [w, bin] : weight) out.weight.push_back(bin);
  return out;
}

}  // namespace pauliprop
