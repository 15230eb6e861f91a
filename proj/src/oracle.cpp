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

#include "pauliprop/oracle.hpp"

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <string>

namespace pauliprop {
namespace {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

const Eigen::Matrix2cd& pauli_matrix(char c) {
  static const Eigen::Matrix2cd kI = (Eigen::Matrix2cd() << 1, 0, 0, 1).finished();
  static const Eigen::Matrix2cd kX = (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
  static const Eigen::Matrix2cd kY = (Eigen::Matrix2cd() << 0, cplx(0, -1), cplx(0, 1), 0).finished();
  static const Eigen::Matrix2cd kZ = (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
  switch (c) {
    case 'X': return kX;
    case 'Y': return kY;
    case 'Z': return kZ;
    default: return kI;
  }
}

void require_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw OracleCapExceeded(std::string(what) + ": " + std::to_string(n) + " qubits exceeds the dense cap of " +
                            std::to_string(cap));
  }
}

// Basis index bit j is the state of site j (0 = spin up).
void apply_site(const Eigen::Matrix2cd& m, std::size_t site, cplx* v, std::size_t dim) {
  const std::size_t bit = std::size_t{1} << site;
  for (std::size_t i = 0; i < dim; ++i) {
    if (i & bit) continue;
    const cplx a = v[i], b = v[i | bit];
    v[i] = m(0, 0) * a + m(0, 1) * b;
    v[i | bit] = m(1, 0) * a + m(1, 1) * b;
  }
}

void apply_word(const PauliWord& word, cplx* v, std::size_t dim) {
  for (std::size_t j = 0; j < word.num_qubits(); ++j) {
    const char c = word.at(j);
    if (c != 'I') apply_site(pauli_matrix(c), j, v, dim);
  }
}

// (cos a) I - i (sin a) P applied to every column of m.
void apply_gate_columns(const PauliWord& word, double angle, Mat& m) {
  const double c = std::cos(angle), s = std::sin(angle);
  const std::size_t dim = static_cast<std::size_t>(m.rows());
  Vec tmp(m.rows());
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    tmp = m.col(col);
    apply_word(word, tmp.data(), dim);
    m.col(col) = c * m.col(col) - cplx(0, s) * tmp;
  }
}

// Row r of P has one non-zero entry; returns (column, value).
std::pair<std::size_t, cplx> monomial_entry(const PauliWord& word, std::size_t row) {
  std::size_t col = row;
  cplx value = 1.0;
  for (std::size_t j = 0; j < word.num_qubits(); ++j) {
    const char c = word.at(j);
    if (c == 'I') continue;
    const Eigen::Matrix2cd& m = pauli_matrix(c);
    const int r = static_cast<int>((row >> j) & 1);
    const int k = (m(r, 0) != cplx(0.0)) ? 0 : 1;
    value *= m(r, k);
    col = (col & ~(std::size_t{1} << j)) | (static_cast<std::size_t>(k) << j);
  }
  return {col, value};
}

Vec pure_product_state(const ProductState& state) {
  const std::size_t n = state.num_qubits();
  std::vector<Eigen::Vector2cd> sites(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Bloch& b = state[j];
    const double up = std::sqrt(std::max(0.0, (1.0 + b.z) / 2.0));
    const double down = std::sqrt(std::max(0.0, (1.0 - b.z) / 2.0));
    const double rho = std::hypot(b.x, b.y);
    const cplx phase = rho > 0.0 ? cplx(b.x / rho, b.y / rho) : cplx(1.0);
    sites[j] = Eigen::Vector2cd(up, phase * down);
  }
  const std::size_t dim = std::size_t{1} << n;
  Vec psi(static_cast<Eigen::Index>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    cplx v = 1.0;
    for (std::size_t j = 0; j < n; ++j) v *= sites[j]((i >> j) & 1);
    psi(static_cast<Eigen::Index>(i)) = v;
  }
  return psi;
}

Mat mixed_product_state(const ProductState& state) {
  const std::size_t n = state.num_qubits();
  const std::size_t dim = std::size_t{1} << n;
  std::vector<Eigen::Matrix2cd> sites(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Bloch& b = state[j];
    sites[j] << (1.0 + b.z) / 2.0, cplx(b.x, -b.y) / 2.0, cplx(b.x, b.y) / 2.0, (1.0 - b.z) / 2.0;
  }
  Mat rho(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      cplx v = 1.0;
      for (std::size_t j = 0; j < n; ++j) v *= sites[j]((r >> j) & 1, (c >> j) & 1);
      rho(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = v;
    }
  }
  return rho;
}

double expectation_pure(const PauliSum& observable, const Vec& psi) {
  double total = 0.0;
  Vec tmp(psi.size());
  for (std::size_t p = 0; p < observable.size(); ++p) {
    tmp = psi;
    apply_word(observable.word(p), tmp.data(), static_cast<std::size_t>(tmp.size()));
    total += observable.coeff(p) * psi.dot(tmp).real();
  }
  return total;
}

double expectation_mixed(const PauliSum& observable, const Mat& rho) {
  const std::size_t dim = static_cast<std::size_t>(rho.rows());
  double total = 0.0;
  for (std::size_t p = 0; p < observable.size(); ++p) {
    const PauliWord w = observable.word(p);
    cplx tr = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      const auto [c, v] = monomial_entry(w, r);
      tr += v * rho(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
    }
    total += observable.coeff(p) * tr.real();
  }
  return total;
}

void check_inputs(const Hamiltonian& h, const PauliSum& observable, std::size_t steps) {
  if (observable.num_qubits() != h.num_qubits()) throw DimensionMismatch("oracle: observable/Hamiltonian size mismatch");
  if (steps < 1) throw std::invalid_argument("oracle: steps must be >= 1");
}

}  // namespace

std::vector<double> dense_trotter_trajectory(const Hamiltonian& hamiltonian, const ProductState& state,
                                             const PauliSum& observable, double tau, std::size_t steps) {
  const std::size_t n = hamiltonian.num_qubits();
  require_cap(n, kDenseStateCap, "dense_trotter_expectation");
  check_inputs(hamiltonian, observable, steps);
  if (state.num_qubits() != n) throw DimensionMismatch("oracle: state/Hamiltonian size mismatch");
  const auto& terms = hamiltonian.terms();

  std::vector<double> values;
  values.reserve(steps);
  if (state.is_pure()) {
    Mat psi = pure_product_state(state);
    for (std::size_t s = 0; s < steps; ++s) {
      // The state sees the last term first.
      for (std::size_t i = terms.size(); i-- > 0;) apply_gate_columns(terms[i].word, terms[i].weight * tau, psi);
      values.push_back(expectation_pure(observable, psi.col(0)));
    }
    return values;
  }

  Mat rho = mixed_product_state(state);
  for (std::size_t s = 0; s < steps; ++s) {
    for (std::size_t i = terms.size(); i-- > 0;) {
      // rho -> G rho G^dag, as G (G rho)^dag then adjoint.
      apply_gate_columns(terms[i].word, terms[i].weight * tau, rho);
      Mat adj = rho.adjoint();
      apply_gate_columns(terms[i].word, terms[i].weight * tau, adj);
      rho = adj.adjoint();
    }
    values.push_back(expectation_mixed(observable, rho));
  }
  return values;
}

double dense_trotter_expectation(const Hamiltonian& hamiltonian, const ProductState& state,
                                 const PauliSum& observable, double t, std::size_t steps) {
  return dense_trotter_trajectory(hamiltonian, state, observable, t / static_cast<double>(steps), steps).back();
}

PauliSum dense_heisenberg_coefficients(const Hamiltonian& hamiltonian, const PauliSum& observable, double t,
                                       std::size_t steps) {
  const std::size_t n = hamiltonian.num_qubits();
  require_cap(n, kDecompositionCap, "dense_heisenberg_coefficients");
  check_inputs(hamiltonian, observable, steps);
  const std::size_t dim = std::size_t{1} << n;
  const double tau = t / static_cast<double>(steps);
  const auto& terms = hamiltonian.terms();

  Mat step = Mat::Identity(dim, dim);
  for (std::size_t i = terms.size(); i-- > 0;) apply_gate_columns(terms[i].word, terms[i].weight * tau, step);
  Mat u = Mat::Identity(dim, dim);
  for (std::size_t s = 0; s < steps; ++s) u = step * u;

  Mat o = Mat::Zero(dim, dim);
  for (std::size_t p = 0; p < observable.size(); ++p) {
    const PauliWord w = observable.word(p);
    for (std::size_t r = 0; r < dim; ++r) {
      const auto [c, v] = monomial_entry(w, r);
      o(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) += observable.coeff(p) * v;
    }
  }
  const Mat evolved = u.adjoint() * o * u;

  static constexpr char kChars[4] = {'I', 'X', 'Y', 'Z'};
  PauliSum out(n, 0.0);
  PauliWord word(n);
  const std::size_t total = std::size_t{1} << (2 * n);
  for (std::size_t code = 1; code < total; ++code) {
    for (std::size_t j = 0; j < n; ++j) word.set(j, kChars[(code >> (2 * j)) & 3]);
    cplx tr = 0.0;
    for (std::size_t r = 0; r < dim; ++r) {
      const auto [c, v] = monomial_entry(word, r);
      tr += v * evolved(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(r));
    }
    tr /= static_cast<double>(dim);
    if (std::abs(tr.imag()) > 1e-9) throw std::logic_error("dense_heisenberg_coefficients: non-Hermitian result");
    if (std::abs(tr.real()) > 1e-12) out.accumulate(word, tr.real());
  }
  const cplx identity = evolved.trace() / static_cast<double>(dim);
  if (std::abs(identity.real()) > 1e-12) out.accumulate(PauliWord(n), identity.real());
  out.set_prune_eps(kDefaultPruneEps);
  return out;
}

MonteCarloEstimate local_scrambling_mc(const PauliSum& observable, const PauliSum& approximation,
                                       std::size_t samples, std::uint64_t seed) {
  if (samples < 2) throw std::invalid_argument("local_scrambling_mc: need at least 2 samples");
  const std::size_t n = observable.num_qubits();
  require_cap(n, kScramblingCap, "local_scrambling_mc");
  if (approximation.num_qubits() != n && !approximation.empty()) {
    throw DimensionMismatch("local_scrambling_mc: operator size mismatch");
  }

  // Difference operator O_hat - O as a term list.
  PauliSum diff(n, 0.0);
  for (std::size_t p = 0; p < approximation.size(); ++p) diff.add(approximation.key(p).data(), approximation.coeff(p));
  for (std::size_t p = 0; p < observable.size(); ++p) diff.add(observable.key(p).data(), -observable.coeff(p));
  std::vector<std::vector<char>> words(diff.size());
  for (std::size_t p = 0; p < diff.size(); ++p) {
    const PauliWord w = diff.word(p);
    words[p].resize(n);
    for (std::size_t j = 0; j < n; ++j) words[p][j] = w.at(j);
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<std::array<double, 4>> site_expect(n);  // <I>, <X>, <Y>, <Z> per site
  double mean = 0.0, m2 = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t j = 0; j < n; ++j) {
      // First column of a Haar unitary: a normalized complex Gaussian pair.
      Eigen::Vector2cd v(cplx(gauss(rng), gauss(rng)), cplx(gauss(rng), gauss(rng)));
      v.normalize();
      site_expect[j][0] = 1.0;
      site_expect[j][1] = v.dot(pauli_matrix('X') * v).real();
      site_expect[j][2] = v.dot(pauli_matrix('Y') * v).real();
      site_expect[j][3] = v.dot(pauli_matrix('Z') * v).real();
    }
    double delta = 0.0;
    for (std::size_t p = 0; p < diff.size(); ++p) {
      double term = diff.coeff(p);
      for (std::size_t j = 0; j < n; ++j) {
        switch (words[p][j]) {
          case 'X': term *= site_expect[j][1]; break;
          case 'Y': term *= site_expect[j][2]; break;
          case 'Z': term *= site_expect[j][3]; break;
          default: break;
        }
      }
      delta += term;
    }
    const double x = delta * delta;
    const double d = x - mean;
    mean += d / static_cast<double>(s + 1);
    m2 += d * (x - mean);
  }
  MonteCarloEstimate est;
  est.samples = samples;
  est.mean_sq_error = mean;
  est.std_error = std::sqrt(m2 / static_cast<double>(samples - 1) / static_cast<double>(samples));
  return est;
}

}  // namespace pauliprop
