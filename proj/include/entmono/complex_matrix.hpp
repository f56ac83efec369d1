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

#ifndef ENTMONO_COMPLEX_MATRIX_HPP
#define ENTMONO_COMPLEX_MATRIX_HPP

#include <complex>
#include <vector>

#include "entmono/errors.hpp"

namespace entmono {

using Complex = std::complex<double>;

/// Dense row-major complex matrix. Sized for density operators of a few
/// qubits, so everything is O(n^3)-naive and allocation-happy on purpose.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(int rows, int cols);
  ComplexMatrix(int rows, int cols, std::vector<Complex> entries);

  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex &at(int r, int c) { return entries_[static_cast<size_t>(r) * cols_ + c]; }
  const Complex &at(int r, int c) const {
    return entries_[static_cast<size_t>(r) * cols_ + c];
  }
  const std::vector<Complex> &entries() const { return entries_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;
  bool is_hermitian(double tol) const;

  ComplexMatrix operator+(const ComplexMatrix &other) const;
  ComplexMatrix operator-(const ComplexMatrix &other) const;
  ComplexMatrix operator*(const ComplexMatrix &other) const;
  ComplexMatrix operator*(Complex scalar) const;

  /// this * v for a column vector v of length cols().
  std::vector<Complex> apply(const std::vector<Complex> &v) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Complex> entries_;
};

ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m);

/// Tensor (Kronecker) product, left factor owns the most significant index.
ComplexMatrix tensor(const ComplexMatrix &a, const ComplexMatrix &b);

/// Dimensions of the tensor factors of a multipartite space, most significant
/// factor first. For three qubits the basis index of (a1, a2, b) is
/// 4*a1 + 2*a2 + b.
struct SubsystemDims {
  std::vector<int> dims;

  explicit SubsystemDims(std::vector<int> d);
  static SubsystemDims qubits(int n);

  int total() const;
  int count() const { return static_cast<int>(dims.size()); }
  bool operator==(const SubsystemDims &other) const { return dims == other.dims; }
};

/// Eigenvalues of a Hermitian operator, sorted nonascending.
class HermitianSpectrum {
 public:
  explicit HermitianSpectrum(std::vector<double> values);

  const std::vector<double> &values() const { return values_; }
  int size() const { return static_cast<int>(values_.size()); }
  double operator[](int i) const { return values_[i]; }

 private:
  std::vector<double> values_;
};

struct EigResult {
  HermitianSpectrum spectrum;
  /// Unitary whose k-th column is the eigenvector of spectrum[k].
  ComplexMatrix vectors;
};

/// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Deterministic: no pivot search, fixed sweep order, off-diagonal
/// tolerance 1e-12 relative to the Frobenius norm, at most 100 sweeps.
EigResult eig_hermitian(const ComplexMatrix &m);

/// Trace out every subsystem not listed in keep. keep must be strictly
/// increasing; the kept factors stay in their original order.
ComplexMatrix partial_trace(const ComplexMatrix &m, const SubsystemDims &dims,
                            const std::vector<int> &keep);

/// Transpose the bra/ket indices of one subsystem.
ComplexMatrix partial_transpose(const ComplexMatrix &m, const SubsystemDims &dims,
                                int subsystem);

/// Sum of singular values, computed from eig_hermitian(m^dagger m).
double trace_norm(const ComplexMatrix &m);

/// Principal square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues in [-1e-9, 0) are clamped to zero; below that throws NotPsd.
ComplexMatrix sqrt_psd(const ComplexMatrix &m);

}  // namespace entmono

#endif
