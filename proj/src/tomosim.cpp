// Copyright 2026 The entmono authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "entmono/tomosim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace entmono {

namespace {

constexpr double kProbClamp = 1e-12;

std::vector<std::vector<Complex>> single_qubit_kets() {
  const double r = 1.0 / std::sqrt(2.0);
  return {
      {Complex(1.0, 0.0), Complex(0.0, 0.0)},  // Z+
      {Complex(0.0, 0.0), Complex(1.0, 0.0)},  // Z-
      {Complex(r, 0.0), Complex(r, 0.0)},      // X+
      {Complex(r, 0.0), Complex(-r, 0.0)},     // X-
      {Complex(r, 0.0), Complex(0.0, r)},      // Y+
      {Complex(r, 0.0), Complex(0.0, -r)},     // Y-
  };
}

void check_projector_probs(const std::vector<double> &probs, const ProjectorSet &ps) {
  if (probs.size() != static_cast<size_t>(ps.size())) {
    throw DimMismatch("probability vector does not match projector count");
  }
  for (double p : probs) {
    if (!std::isfinite(p) || p < -1e-9 || p > 1.0 + 1e-9) {
      throw DomainError("projector probability outside [0, 1]");
    }
  }
}

void check_config(const TomoConfig &config) {
  if (config.counts_per_setting < 1) {
    throw DomainError("counts_per_setting must be positive");
  }
  if (config.max_iterations < 1) throw DomainError("max_iterations must be positive");
  if (!(config.gradient_tolerance > 0.0)) {
    throw DomainError("gradient_tolerance must be positive");
  }
}

/// Reorder an arbitrary (index, count) sequence into a dense per-projector
/// vector, requiring full single coverage.
std::vector<double> dense_counts(const std::vector<CountsRecord> &counts,
                                    const ProjectorSet &ps) {
  if (counts.size() != static_cast<size_t>(ps.size())) {
    throw DimMismatch("counts must cover every projector exactly once");
  }
  std::vector<double> n(ps.size(), -1.0);
  for (const CountsRecord &rec : counts) {
    if (rec.projector_index < 0 || rec.projector_index >= ps.size()) {
      throw DimMismatch("projector index out of range");
    }
    if (n[rec.projector_index] >= 0) {
      throw DimMismatch("duplicate projector index in counts");
    }
    if (rec.count < 0) throw DomainError("negative count");
    n[rec.projector_index] = rec.count;
  }
  return n;
}

// ---- dense real linear algebra for the inversion normal equations ----

class RealCholesky {
 public:
  /// In-place lower Cholesky factor of a symmetric positive definite matrix
  /// stored row-major. Throws Singular when a pivot collapses.
  RealCholesky(std::vector<double> m, int n) : l_(std::move(m)), n_(n) {
    double max_diag = 0.0;
    for (int i = 0; i < n_; ++i) max_diag = std::max(max_diag, l_[i * n_ + i]);
    const double tol = 1e-12 * std::max(max_diag, 1e-300);
    for (int j = 0; j < n_; ++j) {
      double d = l_[j * n_ + j];
      for (int k = 0; k < j; ++k) d -= l_[j * n_ + k] * l_[j * n_ + k];
      if (d <= tol) throw Singular("projector frame is rank-deficient");
      const double root = std::sqrt(d);
      l_[j * n_ + j] = root;
      for (int i = j + 1; i < n_; ++i) {
        double s = l_[i * n_ + j];
        for (int k = 0; k < j; ++k) s -= l_[i * n_ + k] * l_[j * n_ + k];
        l_[i * n_ + j] = s / root;
      }
    }
  }

  std::vector<double> solve(std::vector<double> b) const {
    for (int i = 0; i < n_; ++i) {
      double s = b[i];
      for (int k = 0; k < i; ++k) s -= l_[i * n_ + k] * b[k];
      b[i] = s / l_[i * n_ + i];
    }
    for (int i = n_ - 1; i >= 0; --i) {
      double s = b[i];
      for (int k = i + 1; k < n_; ++k) s -= l_[k * n_ + i] * b[k];
      b[i] = s / l_[i * n_ + i];
    }
    return b;
  }

 private:
  std::vector<double> l_;
  int n_;
};

// ---- T-parameterization helpers for the MLE ----
// theta holds the real diagonal of the lower-triangular T first, then
// (Re, Im) of every strictly-lower entry in row-major order.

int param_count(int d) { return d * d; }

ComplexMatrix build_t(const std::vector<double> &theta, int d) {
  ComplexMatrix t(d, d);
  for (int i = 0; i < d; ++i) t.at(i, i) = theta[i];
  int k = d;
  for (int i = 1; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      t.at(i, j) = Complex(theta[k], theta[k + 1]);
      k += 2;
    }
  }
  return t;
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<double> &v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

/// Scaled Poisson objective and optionally its gradient in theta.
class MleObjective {
 public:
  MleObjective(const std::vector<double> &n, const ProjectorSet &ps,
               const TomoConfig &config)
      : n_(n), ps_(ps), scale_(static_cast<double>(config.counts_per_setting)) {}

  double value(const std::vector<double> &theta) const {
    return eval(theta, nullptr);
  }

  double value_and_gradient(const std::vector<double> &theta,
                            std::vector<double> &grad) const {
    return eval(theta, &grad);
  }

 private:
  double eval(const std::vector<double> &theta, std::vector<double> *grad) const {
    const int d = ps_.dim();
    const ComplexMatrix t = build_t(theta, d);
    double tau = 0.0;
    for (const Complex &z : t.entries()) tau += std::norm(z);
    if (tau < 1e-300) throw Singular("mle parameter vector collapsed to zero");

    // p_k = |T v_k|^2 / tau
    const int m = ps_.size();
    std::vector<double> probs(m);
    std::vector<Complex> w(d);
    double f = 0.0;
    std::vector<double> cprime(grad ? m : 0);
    for (int k = 0; k < m; ++k) {
      const std::vector<Complex> &v = ps_.ket(k);
      double norm2 = 0.0;
      for (int i = 0; i < d; ++i) {
        Complex s = 0.0;
        for (int j = 0; j <= i; ++j) s += t.at(i, j) * v[j];
        norm2 += std::norm(s);
      }
      const double p = norm2 / tau;
      probs[k] = p;
      const double frac = static_cast<double>(n_[k]) / scale_;
      if (p > kProbClamp) {
        f += p - frac * std::log(p);
        if (grad) cprime[k] = 1.0 - frac / p;
      } else {
        f += p - frac * std::log(kProbClamp);
        if (grad) cprime[k] = 1.0;
      }
    }
    if (!grad) return f;

    // G = sum_k c'_k |v_k><v_k|, gradient W = 2 T (G - tr(G rho) I) / tau
    ComplexMatrix g(d, d);
    for (int k = 0; k < m; ++k) {
      const std::vector<Complex> &v = ps_.ket(k);
      const double c = cprime[k];
      if (c == 0.0) continue;
      for (int r = 0; r < d; ++r) {
        for (int col = 0; col < d; ++col) {
          g.at(r, col) += c * v[r] * std::conj(v[col]);
        }
      }
    }
    // tr(G rho) = tr(G T^dagger T)/tau = sum_ij G_ij (T^dagger T)_ji / tau
    const ComplexMatrix tdt = t.adjoint() * t;
    Complex trg = 0.0;
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) trg += g.at(r, c) * tdt.at(c, r);
    }
    const double trg_rho = trg.real() / tau;
    ComplexMatrix mmat(d, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        mmat.at(r, c) = (g.at(r, c) - (r == c ? trg_rho : 0.0)) / tau;
      }
    }
    const ComplexMatrix w2 = t * mmat * Complex(2.0, 0.0);

    grad->assign(theta.size(), 0.0);
    for (int i = 0; i < d; ++i) (*grad)[i] = w2.at(i, i).real();
    int k2 = d;
    for (int i = 1; i < d; ++i) {
      for (int j = 0; j < i; ++j) {
        (*grad)[k2] = w2.at(i, j).real();
        (*grad)[k2 + 1] = w2.at(i, j).imag();
        k2 += 2;
      }
    }
    return f;
  }

  const std::vector<double> &n_;
  const ProjectorSet &ps_;
  double scale_;
};

/// Lower-triangular T with T^dagger T = rho, via the exchange trick: with J
/// the reversal permutation, J chol(J rho J)^dagger J is lower triangular.
ComplexMatrix factor_lower(const ComplexMatrix &rho) {
  const int d = rho.rows();
  ComplexMatrix sigma(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      sigma.at(i, j) = rho.at(d - 1 - i, d - 1 - j);
    }
  }
  // complex Cholesky sigma = L L^dagger
  ComplexMatrix l(d, d);
  for (int j = 0; j < d; ++j) {
    double dd = sigma.at(j, j).real();
    for (int k = 0; k < j; ++k) dd -= std::norm(l.at(j, k));
    if (dd <= 0.0) throw Singular("cholesky pivot collapsed");
    const double root = std::sqrt(dd);
    l.at(j, j) = root;
    for (int i = j + 1; i < d; ++i) {
      Complex s = sigma.at(i, j);
      for (int k = 0; k < j; ++k) s -= l.at(i, k) * std::conj(l.at(j, k));
      l.at(i, j) = s / root;
    }
  }
  ComplexMatrix t(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j <= i; ++j) {
      t.at(i, j) = std::conj(l.at(d - 1 - j, d - 1 - i));
    }
  }
  return t;
}

std::vector<double> theta_from_t(const ComplexMatrix &t) {
  const int d = t.rows();
  std::vector<double> theta(param_count(d), 0.0);
  for (int i = 0; i < d; ++i) theta[i] = t.at(i, i).real();
  int k = d;
  for (int i = 1; i < d; ++i) {
    for (int j = 0; j < i; ++j) {
      theta[k] = t.at(i, j).real();
      theta[k + 1] = t.at(i, j).imag();
      k += 2;
    }
  }
  return theta;
}

}  // namespace

ProjectorSet::ProjectorSet(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > 4) {
    throw DomainError("projector set supports 1 to 4 qubits");
  }
  const auto singles = single_qubit_kets();
  int total = 1;
  for (int q = 0; q < n_qubits; ++q) total *= 6;
  kets_.reserve(total);
  for (int idx = 0; idx < total; ++idx) {
    std::vector<int> digits(n_qubits);
    int rest = idx;
    for (int q = n_qubits - 1; q >= 0; --q) {
      digits[q] = rest % 6;
      rest /= 6;
    }
    std::vector<Complex> ket{Complex(1.0, 0.0)};
    for (int q = 0; q < n_qubits; ++q) {
      const std::vector<Complex> &s = singles[digits[q]];
      std::vector<Complex> next(ket.size() * 2);
      for (size_t i = 0; i < ket.size(); ++i) {
        next[2 * i] = ket[i] * s[0];
        next[2 * i + 1] = ket[i] * s[1];
      }
      ket = std::move(next);
    }
    kets_.push_back(std::move(ket));
  }
}

int ProjectorSet::basis_of(int index) const {
  if (index < 0 || index >= size()) throw DimMismatch("projector index out of range");
  int basis = 0;
  int rest = index;
  std::vector<int> digits(n_qubits_);
  for (int q = n_qubits_ - 1; q >= 0; --q) {
    digits[q] = rest % 6;
    rest /= 6;
  }
  for (int q = 0; q < n_qubits_; ++q) basis = basis * 3 + digits[q] / 2;
  return basis;
}

int ProjectorSet::n_bases() const {
  int b = 1;
  for (int q = 0; q < n_qubits_; ++q) b *= 3;
  return b;
}

ComplexMatrix ProjectorSet::projector_matrix(int index) const {
  if (index < 0 || index >= size()) throw DimMismatch("projector index out of range");
  const std::vector<Complex> &v = kets_[index];
  const int d = dim();
  ComplexMatrix p(d, d);
  for (int r = 0; r < d; ++r) {
    for (int c = 0; c < d; ++c) p.at(r, c) = v[r] * std::conj(v[c]);
  }
  return p;
}

std::vector<double> born_probs(const DensityMatrix &rho, const ProjectorSet &ps) {
  if (rho.dim() != ps.dim()) {
    throw DimMismatch("state dimension does not match projector set");
  }
  std::vector<double> probs(ps.size());
  for (int k = 0; k < ps.size(); ++k) {
    const std::vector<Complex> &v = ps.ket(k);
    const std::vector<Complex> rv = rho.matrix().apply(v);
    Complex p = 0.0;
    for (int i = 0; i < rho.dim(); ++i) p += std::conj(v[i]) * rv[i];
    probs[k] = std::max(0.0, p.real());
  }
  return probs;
}

DensityMatrix apply_noise(const PureState &psi, const NoiseSpec &noise) {
  if (psi.dim() != 8) throw DimMismatch("apply_noise expects three qubits");
  if (!std::isfinite(noise.visibility) || noise.visibility < 0.0 ||
      noise.visibility > 1.0) {
    throw DomainError("visibility must lie in [0, 1]");
  }
  if (!std::isfinite(noise.white_noise) || noise.white_noise < 0.0 ||
      noise.white_noise > 1.0) {
    throw DomainError("white_noise must lie in [0, 1]");
  }
  const SubsystemDims dims = SubsystemDims::qubits(3);
  ComplexMatrix rho = to_density(psi, dims).matrix();
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) {
      if (((i >> 1) & 1) != ((j >> 1) & 1)) {
        rho.at(i, j) *= noise.visibility;
      }
    }
  }
  const double w = noise.white_noise;
  if (w > 0.0) {
    rho = rho * Complex(1.0 - w, 0.0);
    for (int i = 0; i < 8; ++i) rho.at(i, i) += w / 8.0;
  }
  return DensityMatrix(std::move(rho), dims);
}

std::vector<CountsRecord> sample_counts(const std::vector<double> &probs,
                                        const ProjectorSet &ps,
                                        const TomoConfig &config) {
  check_projector_probs(probs, ps);
  check_config(config);
  std::vector<CountsRecord> counts(ps.size());
  for (int k = 0; k < ps.size(); ++k) {
    SplitMix64 stream(SplitMix64::derive(config.seed, static_cast<uint64_t>(k)));
    const double mean =
        static_cast<double>(config.counts_per_setting) * std::max(probs[k], 0.0);
    counts[k] = CountsRecord{k, static_cast<double>(stream.next_poisson(mean))};
  }
  return counts;
}

ComplexMatrix linear_inversion(const std::vector<CountsRecord> &counts,
                               const ProjectorSet &ps) {
  const std::vector<double> n = dense_counts(counts, ps);
  const int m = ps.size();
  const int d = ps.dim();
  const int np = d * d;

  std::vector<double> basis_total(ps.n_bases(), 0.0);
  for (int k = 0; k < m; ++k) {
    basis_total[ps.basis_of(k)] += static_cast<double>(n[k]);
  }
  std::vector<double> freq(m, 0.0);
  for (int k = 0; k < m; ++k) {
    const double total = basis_total[ps.basis_of(k)];
    if (total > 0.0) freq[k] = static_cast<double>(n[k]) / total;
  }

  // design row for projector k over the Hermitian operator basis
  // {E_ii} + {|i><j| + |j><i|} + {-i|i><j| + i|j><i|}, i < j
  std::vector<double> design(static_cast<size_t>(m) * np);
  for (int k = 0; k < m; ++k) {
    const std::vector<Complex> &v = ps.ket(k);
    double *row = &design[static_cast<size_t>(k) * np];
    for (int i = 0; i < d; ++i) row[i] = std::norm(v[i]);
    int col = d;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        const Complex cross = std::conj(v[i]) * v[j];
        row[col] = 2.0 * cross.real();
        row[col + 1] = 2.0 * cross.imag();
        col += 2;
      }
    }
  }

  std::vector<double> normal(static_cast<size_t>(np) * np, 0.0);
  std::vector<double> rhs(np, 0.0);
  for (int k = 0; k < m; ++k) {
    const double *row = &design[static_cast<size_t>(k) * np];
    for (int a = 0; a < np; ++a) {
      rhs[a] += row[a] * freq[k];
      for (int b = a; b < np; ++b) normal[static_cast<size_t>(a) * np + b] += row[a] * row[b];
    }
  }
  for (int a = 0; a < np; ++a) {
    for (int b = 0; b < a; ++b) {
      normal[static_cast<size_t>(a) * np + b] = normal[static_cast<size_t>(b) * np + a];
    }
  }

  const RealCholesky chol(std::move(normal), np);
  const std::vector<double> x = chol.solve(std::move(rhs));

  ComplexMatrix rho(d, d);
  for (int i = 0; i < d; ++i) rho.at(i, i) = x[i];
  int col = d;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      rho.at(i, j) = Complex(x[col], -x[col + 1]);
      rho.at(j, i) = Complex(x[col], x[col + 1]);
      col += 2;
    }
  }
  return rho;
}

std::string to_string(MleStop stop) {
  switch (stop) {
    case MleStop::kGradientTolerance: return "gradient_tolerance";
    case MleStop::kMaxIterations: return "max_iterations";
    case MleStop::kStalled: return "stalled";
  }
  throw DomainError("unknown stop reason");
}

double poisson_nll(const DensityMatrix &rho, const std::vector<CountsRecord> &counts,
                   const ProjectorSet &ps, const TomoConfig &config) {
  check_config(config);
  const std::vector<double> n = dense_counts(counts, ps);
  const std::vector<double> probs = born_probs(rho, ps);
  const double scale = static_cast<double>(config.counts_per_setting);
  double nll = 0.0;
  for (int k = 0; k < ps.size(); ++k) {
    const double mean = scale * std::max(probs[k], kProbClamp);
    nll += mean - static_cast<double>(n[k]) * std::log(mean);
  }
  return nll;
}

MleResult mle_reconstruct(const std::vector<CountsRecord> &counts,
                          const ProjectorSet &ps, const TomoConfig &config) {
  check_config(config);
  const std::vector<double> n = dense_counts(counts, ps);
  double total = 0.0;
  for (double x : n) total += x;
  if (total == 0) throw DegenerateCounts("all counts are zero");

  const int d = ps.dim();

  // Seed from the linear inversion, pushed back into the state space.
  ComplexMatrix seed = linear_inversion(counts, ps);
  {
    const EigResult e = eig_hermitian(seed);
    ComplexMatrix scaled(d, d);
    std::vector<double> lam(d);
    double tr = 0.0;
    for (int i = 0; i < d; ++i) {
      lam[i] = std::max(e.spectrum[i], 1e-9);
      tr += lam[i];
    }
    for (int c = 0; c < d; ++c) {
      for (int r = 0; r < d; ++r) {
        scaled.at(r, c) = e.vectors.at(r, c) * (lam[c] / tr);
      }
    }
    seed = scaled * e.vectors.adjoint();
  }

  std::vector<double> theta = theta_from_t(factor_lower(seed));
  const MleObjective objective(n, ps, config);

  std::vector<double> grad(theta.size());
  double f = objective.value_and_gradient(theta, grad);

  std::deque<std::pair<std::vector<double>, std::vector<double>>> memory;
  const int memory_cap = 8;
  int iterations = 0;
  MleStop stop = MleStop::kMaxIterations;

  while (true) {
    if (inf_norm(grad) <= config.gradient_tolerance) {
      stop = MleStop::kGradientTolerance;
      break;
    }
    if (iterations >= config.max_iterations) {
      stop = MleStop::kMaxIterations;
      break;
    }

    // two-loop L-BFGS direction
    std::vector<double> dir = grad;
    std::vector<double> alpha(memory.size());
    for (int i = static_cast<int>(memory.size()) - 1; i >= 0; --i) {
      const auto &[s, y] = memory[i];
      alpha[i] = dot(s, dir) / dot(y, s);
      for (size_t j = 0; j < dir.size(); ++j) dir[j] -= alpha[i] * y[j];
    }
    if (!memory.empty()) {
      const auto &[s, y] = memory.back();
      const double gamma = dot(y, s) / dot(y, y);
      for (double &x : dir) x *= gamma;
    }
    for (size_t i = 0; i < memory.size(); ++i) {
      const auto &[s, y] = memory[i];
      const double beta = dot(y, dir) / dot(y, memory[i].first);
      for (size_t j = 0; j < dir.size(); ++j) dir[j] += (alpha[i] - beta) * s[j];
    }
    for (double &x : dir) x = -x;

    double slope = dot(grad, dir);
    if (slope >= 0.0) {
      memory.clear();
      dir = grad;
      for (double &x : dir) x = -x;
      slope = dot(grad, dir);
    }

    double step = memory.empty() ? 1.0 / std::max(1.0, inf_norm(grad)) : 1.0;
    bool accepted = false;
    std::vector<double> trial(theta.size());
    double f_trial = 0.0;
    for (int bt = 0; bt < 30; ++bt) {
      for (size_t j = 0; j < theta.size(); ++j) trial[j] = theta[j] + step * dir[j];
      f_trial = objective.value(trial);
      // the strict decrease guards against zero-progress steps once the
      // Armijo margin rounds away near the float floor
      if (f_trial <= f + 1e-4 * step * slope && f_trial < f) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) {
      if (!memory.empty()) {
        memory.clear();
        continue;
      }
      stop = MleStop::kStalled;
      break;
    }

    std::vector<double> grad_new(theta.size());
    const double f_new = objective.value_and_gradient(trial, grad_new);
    std::vector<double> s(theta.size()), y(theta.size());
    for (size_t j = 0; j < theta.size(); ++j) {
      s[j] = trial[j] - theta[j];
      y[j] = grad_new[j] - grad[j];
    }
    const double ys = dot(y, s);
    if (ys > 1e-12 * std::sqrt(dot(s, s)) * std::sqrt(dot(y, y))) {
      memory.emplace_back(std::move(s), std::move(y));
      if (memory.size() > memory_cap) memory.pop_front();
    }
    theta = std::move(trial);
    f = f_new;
    grad = std::move(grad_new);
    ++iterations;
  }

  const ComplexMatrix t = build_t(theta, d);
  ComplexMatrix rho = t.adjoint() * t;
  const double tau = rho.trace().real();
  rho = rho * Complex(1.0 / tau, 0.0);
  // symmetrize away the last rounding bits
  for (int r = 0; r < d; ++r) {
    for (int c = r + 1; c < d; ++c) {
      const Complex avg = 0.5 * (rho.at(r, c) + std::conj(rho.at(c, r)));
      rho.at(r, c) = avg;
      rho.at(c, r) = std::conj(avg);
    }
    rho.at(r, r) = rho.at(r, r).real();
  }
  DensityMatrix state =
      DensityMatrix::unchecked(std::move(rho), SubsystemDims::qubits(ps.n_qubits()));
  const double nll = poisson_nll(state, counts, ps, config);
  return MleResult{std::move(state), iterations, stop, inf_norm(grad), nll};
}

}  // namespace entmono
