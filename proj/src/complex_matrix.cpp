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

#include "entmono/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace entmono {

namespace {

constexpr double kHermitianTol = 1e-9;
constexpr double kJacobiTol = 1e-12;
constexpr int kMaxSweeps = 100;

void check_finite(const std::vector<Complex> &entries) {
  for (const Complex &z : entries) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw DomainError("matrix entry is not finite");
    }
  }
}

}  // namespace

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) {
    throw DimMismatch("matrix dimensions must be nonnegative");
  }
  entries_.assign(static_cast<size_t>(rows) * cols, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int rows, int cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) {
    throw DimMismatch("matrix dimensions must be nonnegative");
  }
  if (entries_.size() != static_cast<size_t>(rows) * cols) {
    throw DimMismatch("entry count " + std::to_string(entries_.size()) +
                      " does not match " + std::to_string(rows) + "x" +
                      std::to_string(cols));
  }
  check_finite(entries_);
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = std::conj(at(r, c));
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(c, r) = at(r, c);
  }
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) out.at(r, c) = std::conj(at(r, c));
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DimMismatch("trace of a nonsquare matrix");
  Complex t = 0.0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const Complex &z : entries_) s += std::norm(z);
  return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const Complex &z : entries_) m = std::max(m, std::abs(z));
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r) {
    for (int c = r; c < cols_; ++c) {
      if (std::abs(at(r, c) - std::conj(at(c, r))) > tol) return false;
    }
  }
  return true;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimMismatch("matrix addition shape mismatch");
  }
  ComplexMatrix out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] + other.entries_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimMismatch("matrix subtraction shape mismatch");
  }
  ComplexMatrix out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) {
    out.entries_[i] = entries_[i] - other.entries_[i];
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
  if (cols_ != other.rows_) throw DimMismatch("matrix product shape mismatch");
  ComplexMatrix out(rows_, other.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Complex a = at(r, k);
      if (a == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < other.cols_; ++c) {
        out.at(r, c) += a * other.at(k, c);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
  ComplexMatrix out(rows_, cols_);
  for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] * scalar;
  return out;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m) { return m * scalar; }

std::vector<Complex> ComplexMatrix::apply(const std::vector<Complex> &v) const {
  if (v.size() != static_cast<size_t>(cols_)) {
    throw DimMismatch("matrix-vector shape mismatch");
  }
  std::vector<Complex> out(rows_, Complex(0.0, 0.0));
  for (int r = 0; r < rows_; ++r) {
    Complex s = 0.0;
    for (int c = 0; c < cols_; ++c) s += at(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar) {
    for (int ac = 0; ac < a.cols(); ++ac) {
      const Complex f = a.at(ar, ac);
      if (f == Complex(0.0, 0.0)) continue;
      for (int br = 0; br < b.rows(); ++br) {
        for (int bc = 0; bc < b.cols(); ++bc) {
          out.at(ar * b.rows() + br, ac * b.cols() + bc) = f * b.at(br, bc);
        }
      }
    }
  }
  return out;
}

SubsystemDims::SubsystemDims(std::vector<int> d) : dims(std::move(d)) {
  if (dims.empty()) throw DimMismatch("subsystem list is empty");
  for (int x : dims) {
    if (x < 1) throw DimMismatch("subsystem dimension must be positive");
  }
}

SubsystemDims SubsystemDims::qubits(int n) {
  if (n < 1) throw DimMismatch("qubit count must be positive");
  return SubsystemDims(std::vector<int>(n, 2));
}

int SubsystemDims::total() const {
  int t = 1;
  for (int x : dims) t *= x;
  return t;
}

HermitianSpectrum::HermitianSpectrum(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.empty()) throw SpectrumInvalid("spectrum is empty");
  for (double v : values_) {
    if (!std::isfinite(v)) throw SpectrumInvalid("spectrum entry is not finite");
  }
  for (size_t i = 0; i + 1 < values_.size(); ++i) {
    if (values_[i] < values_[i + 1]) {
      throw SpectrumInvalid("spectrum is not sorted nonascending");
    }
  }
}

EigResult eig_hermitian(const ComplexMatrix &m) {
  if (!m.is_square()) throw DimMismatch("eig_hermitian needs a square matrix");
  if (!m.is_hermitian(kHermitianTol)) {
    throw NotHermitian("eig_hermitian: matrix is not Hermitian within 1e-9");
  }
  const int n = m.rows();

  // Symmetrize once so rounding-level asymmetry in the input cannot leak into
  // the iteration.
  ComplexMatrix a(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      a.at(r, c) = 0.5 * (m.at(r, c) + std::conj(m.at(c, r)));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double tol = kJacobiTol * std::max(1.0, a.frobenius_norm());
  auto off_norm = [&]() {
    double s = 0.0;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) s += 2.0 * std::norm(a.at(p, q));
    }
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    if (off_norm() <= tol) {
      converged = true;
      break;
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;
        const Complex phase = apq / r;
        const double tau = (a.at(p, p).real() - a.at(q, q).real()) / (2.0 * r);
        const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::hypot(1.0, tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;

        for (int i = 0; i < n; ++i) {
          const Complex aip = a.at(i, p), aiq = a.at(i, q);
          a.at(i, p) = c * aip - s * std::conj(phase) * aiq;
          a.at(i, q) = s * phase * aip + c * aiq;
        }
        for (int j = 0; j < n; ++j) {
          const Complex apj = a.at(p, j), aqj = a.at(q, j);
          a.at(p, j) = c * apj - s * phase * aqj;
          a.at(q, j) = s * std::conj(phase) * apj + c * aqj;
        }
        for (int i = 0; i < n; ++i) {
          const Complex vip = v.at(i, p), viq = v.at(i, q);
          v.at(i, p) = c * vip - s * std::conj(phase) * viq;
          v.at(i, q) = s * phase * vip + c * viq;
        }
      }
    }
  }
  if (!converged && off_norm() > tol) {
    throw NoConvergence("eig_hermitian: Jacobi did not converge in 100 sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return a.at(i, i).real() > a.at(j, j).real();
  });

  std::vector<double> values(n);
  ComplexMatrix vectors(n, n);
  for (int k = 0; k < n; ++k) {
    values[k] = a.at(order[k], order[k]).real();
    for (int i = 0; i < n; ++i) vectors.at(i, k) = v.at(i, order[k]);
  }
  return EigResult{HermitianSpectrum(std::move(values)), std::move(vectors)};
}

namespace {

void check_subsystems(const ComplexMatrix &m, const SubsystemDims &dims) {
  if (!m.is_square()) throw DimMismatch("operator must be square");
  if (m.rows() != dims.total()) {
    throw DimMismatch("operator dimension " + std::to_string(m.rows()) +
                      " does not match subsystem product " +
                      std::to_string(dims.total()));
  }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix &m, const SubsystemDims &dims,
                            const std::vector<int> &keep) {
  check_subsystems(m, dims);
  if (keep.empty()) throw DimMismatch("keep list is empty");
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= dims.count()) {
      throw DimMismatch("keep index out of range");
    }
    if (i > 0 && keep[i] <= keep[i - 1]) {
      throw DimMismatch("keep list must be strictly increasing");
    }
  }

  const int nd = dims.count();
  std::vector<bool> kept(nd, false);
  for (int k : keep) kept[k] = true;

  int dkeep = 1, dtrace = 1;
  for (int i = 0; i < nd; ++i) (kept[i] ? dkeep : dtrace) *= dims.dims[i];

  // Build the full index from a kept index and a traced index, both running
  // most-significant-first over their own positions.
  auto compose = [&](int kept_idx, int traced_idx) {
    std::vector<int> digit(nd);
    for (int pos = nd - 1; pos >= 0; --pos) {
      if (kept[pos]) {
        digit[pos] = kept_idx % dims.dims[pos];
        kept_idx /= dims.dims[pos];
      } else {
        digit[pos] = traced_idx % dims.dims[pos];
        traced_idx /= dims.dims[pos];
      }
    }
    int idx = 0;
    for (int pos = 0; pos < nd; ++pos) idx = idx * dims.dims[pos] + digit[pos];
    return idx;
  };

  ComplexMatrix out(dkeep, dkeep);
  for (int i = 0; i < dkeep; ++i) {
    for (int j = 0; j < dkeep; ++j) {
      Complex s = 0.0;
      for (int k = 0; k < dtrace; ++k) s += m.at(compose(i, k), compose(j, k));
      out.at(i, j) = s;
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix &m, const SubsystemDims &dims,
                                int subsystem) {
  check_subsystems(m, dims);
  if (subsystem < 0 || subsystem >= dims.count()) {
    throw DimMismatch("subsystem index out of range");
  }
  int stride = 1;
  for (int i = subsystem + 1; i < dims.count(); ++i) stride *= dims.dims[i];
  const int d = dims.dims[subsystem];
  const int n = m.rows();

  ComplexMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    const int di = (i / stride) % d;
    for (int j = 0; j < n; ++j) {
      const int dj = (j / stride) % d;
      out.at(i + (dj - di) * stride, j + (di - dj) * stride) = m.at(i, j);
    }
  }
  return out;
}

double trace_norm(const ComplexMatrix &m) {
  // Hermitian path: sum of |eigenvalue|, exact down to rounding scale.
  if (m.is_square() && m.is_hermitian(1e-12)) {
    const EigResult e = eig_hermitian(m);
    double s = 0.0;
    for (double lambda : e.spectrum.values()) s += std::abs(lambda);
    return s;
  }
  // General path through m^dagger m. Squaring the matrix halves the usable
  // precision: singular values below ~1e-8 * sigma_max drown in rounding
  // noise, so they are cut off rather than sqrt-amplified.
  const EigResult e = eig_hermitian(m.adjoint() * m);
  const double cutoff = 1e-13 * std::max(e.spectrum[0], 0.0);
  double s = 0.0;
  for (double lambda : e.spectrum.values()) {
    if (lambda > cutoff && lambda > 0.0) s += std::sqrt(lambda);
  }
  return s;
}

ComplexMatrix sqrt_psd(const ComplexMatrix &m) {
  const EigResult e = eig_hermitian(m);
  const int n = m.rows();
  for (double lambda : e.spectrum.values()) {
    if (lambda < -1e-9) throw NotPsd("sqrt_psd: eigenvalue below -1e-9");
  }
  ComplexMatrix scaled(n, n);
  for (int c = 0; c < n; ++c) {
    const double root = std::sqrt(std::max(e.spectrum[c], 0.0));
    for (int r = 0; r < n; ++r) scaled.at(r, c) = e.vectors.at(r, c) * root;
  }
  ComplexMatrix out = scaled * e.vectors.adjoint();
  for (int r = 0; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      const Complex avg = 0.5 * (out.at(r, c) + std::conj(out.at(c, r)));
      out.at(r, c) = avg;
      out.at(c, r) = std::conj(avg);
    }
  }
  return out;
}

}  // namespace entmono
