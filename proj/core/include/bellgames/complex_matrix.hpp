// Copyright 2026 The bellgames Authors
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

#include <complex>
#include <vector>

namespace bellgames {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix. Everything in this library is tiny
/// (dim <= 16), so no cleverness anywhere.
class ComplexMatrix {
 public:
  ComplexMatrix() : rows_(0), cols_(0) {}
  ComplexMatrix(int rows, int cols);
  static ComplexMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Complex& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Complex& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const std::vector<Complex>& entries() const { return entries_; }

  bool is_hermitian(double tol = 1e-10) const;
  bool is_unitary(double tol = 1e-10) const;
  bool all_finite() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scalar);

 private:
  int rows_, cols_;
  std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs);

/// v v^dagger as a matrix.
ComplexMatrix outer(const ComplexVector& v);

ComplexVector matvec(const ComplexMatrix& m, const ComplexVector& v);

/// <a|b> = sum conj(a_i) b_i.
Complex inner(const ComplexVector& a, const ComplexVector& b);
double norm(const ComplexVector& v);

struct HermitianEigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic Jacobi diagonalization for Hermitian matrices up to 16x16.
/// Deterministic sweep order; off-diagonal mass driven below 1e-12 of the
/// matrix scale (plus one cleanup sweep). Throws ValidationError for
/// non-Hermitian or oversized input, IntegrityError if sweeps run out.
HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m);

struct PrincipalEigenpair {
  double value;
  ComplexVector vector;  // unit norm
};

/// Largest eigenvalue and a unit eigenvector; residual ||Mv - lambda v||
/// stays below 1e-10.
PrincipalEigenpair hermitian_principal_eigenvector(const ComplexMatrix& m);

}  // namespace bellgames
