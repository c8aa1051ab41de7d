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

#include "bellgames/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bellgames/errors.hpp"

namespace bellgames {

ComplexMatrix::ComplexMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      entries_(static_cast<std::size_t>(rows) * cols, Complex(0.0, 0.0)) {
  if (rows < 1 || cols < 1) {
    throw ValidationError("matrix dimensions must be >= 1");
  }
}

ComplexMatrix ComplexMatrix::identity(int n) {
  ComplexMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i; j < cols_; ++j) {
      if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < cols_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      Complex dot(0.0, 0.0);
      for (int k = 0; k < rows_; ++k) dot += std::conj(at(k, i)) * at(k, j);
      const Complex expected = (i == j) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
      if (std::abs(dot - expected) > tol) return false;
    }
  }
  return true;
}

bool ComplexMatrix::all_finite() const {
  for (const Complex& e : entries_) {
    if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
  }
  return true;
}

double ComplexMatrix::frobenius_norm() const {
  double sum = 0.0;
  for (const Complex& e : entries_) sum += std::norm(e);
  return std::sqrt(sum);
}

namespace {

void check_same_shape(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("matrix shape mismatch");
  }
}

}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_shape(*this, other);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
  for (Complex& e : entries_) e *= scalar;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs += rhs;
  return lhs;
}

ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
  lhs -= rhs;
  return lhs;
}

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) throw ValidationError("matrix product shape mismatch");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (int i = 0; i < lhs.rows(); ++i) {
    for (int k = 0; k < lhs.cols(); ++k) {
      const Complex v = lhs.at(i, k);
      if (v == Complex(0.0, 0.0)) continue;
      for (int j = 0; j < rhs.cols(); ++j) out.at(i, j) += v * rhs.at(k, j);
    }
  }
  return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
  m *= scalar;
  return m;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out.at(j, i) = std::conj(m.at(i, j));
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  ComplexMatrix out(lhs.rows() * rhs.rows(), lhs.cols() * rhs.cols());
  for (int i = 0; i < lhs.rows(); ++i) {
    for (int j = 0; j < lhs.cols(); ++j) {
      const Complex v = lhs.at(i, j);
      if (v == Complex(0.0, 0.0)) continue;
      for (int k = 0; k < rhs.rows(); ++k) {
        for (int l = 0; l < rhs.cols(); ++l) {
          out.at(i * rhs.rows() + k, j * rhs.cols() + l) = v * rhs.at(k, l);
        }
      }
    }
  }
  return out;
}

ComplexMatrix outer(const ComplexVector& v) {
  if (v.empty()) throw ValidationError("outer product of empty vector");
  ComplexMatrix out(static_cast<int>(v.size()), static_cast<int>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      out.at(static_cast<int>(i), static_cast<int>(j)) = v[i] * std::conj(v[j]);
    }
  }
  return out;
}

ComplexVector matvec(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.cols() != static_cast<int>(v.size())) {
    throw ValidationError("matvec shape mismatch");
  }
  ComplexVector out(static_cast<std::size_t>(m.rows()), Complex(0.0, 0.0));
  for (int i = 0; i < m.rows(); ++i) {
    Complex sum(0.0, 0.0);
    for (int j = 0; j < m.cols(); ++j) sum += m.at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = sum;
  }
  return out;
}

Complex inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) throw ValidationError("inner product size mismatch");
  Complex sum(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

double norm(const ComplexVector& v) {
  double sum = 0.0;
  for (const Complex& e : v) sum += std::norm(e);
  return std::sqrt(sum);
}

namespace {

constexpr int kMaxJacobiDim = 16;
constexpr int kMaxJacobiSweeps = 60;

double offdiag_mass(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (i != j) sum += std::norm(a.at(i, j));
    }
  }
  return std::sqrt(sum);
}

// Annihilates a(p,q) with a complex plane rotation J (a <- J^dag a J,
// v <- v J). The phase of a(p,q) is folded into J so the core rotation
// reduces to the real symmetric Jacobi formula.
void rotate(ComplexMatrix& a, ComplexMatrix& v, int p, int q) {
  const Complex apq = a.at(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const double alpha = a.at(p, p).real();
  const double beta = a.at(q, q).real();

  // Annihilation requires t^2 - 2*tau*t - 1 = 0 under this sign placement;
  // the stable root has the opposite sign of tau.
  const double tau = (beta - alpha) / (2.0 * r);
  const double t = (tau >= 0.0 ? -1.0 : 1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    const Complex akp = a.at(k, p);
    const Complex akq = a.at(k, q);
    a.at(k, p) = c * akp + s * std::conj(phase) * akq;
    a.at(k, q) = -s * phase * akp + c * akq;
  }
  for (int k = 0; k < n; ++k) {
    const Complex apk = a.at(p, k);
    const Complex aqk = a.at(q, k);
    a.at(p, k) = c * apk + s * phase * aqk;
    a.at(q, k) = -s * std::conj(phase) * apk + c * aqk;
  }
  for (int k = 0; k < n; ++k) {
    const Complex vkp = v.at(k, p);
    const Complex vkq = v.at(k, q);
    v.at(k, p) = c * vkp + s * std::conj(phase) * vkq;
    v.at(k, q) = -s * phase * vkp + c * vkq;
  }
  // The (p,q) element is zero by construction; stamp out rounding residue.
  a.at(p, q) = Complex(0.0, 0.0);
  a.at(q, p) = Complex(0.0, 0.0);
  a.at(p, p) = Complex(a.at(p, p).real(), 0.0);
  a.at(q, q) = Complex(a.at(q, q).real(), 0.0);
}

}  // namespace

HermitianEigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw ValidationError("eigensolver requires a square matrix");
  }
  if (m.rows() > kMaxJacobiDim) {
    throw ValidationError("eigensolver limited to dimension " +
                          std::to_string(kMaxJacobiDim));
  }
  if (!m.all_finite()) throw ValidationError("eigensolver input has non-finite entries");
  if (!m.is_hermitian(1e-10)) throw ValidationError("eigensolver input is not Hermitian");

  const int n = m.rows();
  // Symmetrize so the iteration works on an exactly Hermitian matrix.
  ComplexMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double scale = std::max(1.0, a.frobenius_norm());
  const double target = 1e-12 * scale;
  bool cleanup_done = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (offdiag_mass(a) <= target) {
      if (cleanup_done) break;
      cleanup_done = true;  // one extra sweep sharpens the principal pair
    }
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    if (sweep == kMaxJacobiSweeps - 1 && offdiag_mass(a) > target) {
      throw IntegrityError("Jacobi eigensolver failed to converge");
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int i, int j) { return a.at(i, i).real() < a.at(j, j).real(); });

  HermitianEigensystem out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = ComplexMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    out.values[static_cast<std::size_t>(k)] = a.at(order[static_cast<std::size_t>(k)],
                                                   order[static_cast<std::size_t>(k)])
                                                  .real();
    for (int i = 0; i < n; ++i) {
      out.vectors.at(i, k) = v.at(i, order[static_cast<std::size_t>(k)]);
    }
  }
  return out;
}

PrincipalEigenpair hermitian_principal_eigenvector(const ComplexMatrix& m) {
  const HermitianEigensystem eigen = hermitian_eigensystem(m);
  const int n = m.rows();
  PrincipalEigenpair out;
  out.value = eigen.values.back();
  out.vector.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out.vector[static_cast<std::size_t>(i)] = eigen.vectors.at(i, n - 1);
  }
  const double vnorm = norm(out.vector);
  if (vnorm <= 0.0) throw IntegrityError("eigenvector collapsed to zero");
  for (Complex& e : out.vector) e /= vnorm;

  ComplexVector image = matvec(m, out.vector);
  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    residual += std::norm(image[static_cast<std::size_t>(i)] -
                          out.value * out.vector[static_cast<std::size_t>(i)]);
  }
  if (std::sqrt(residual) > 1e-10) {
    throw IntegrityError("principal eigenpair residual exceeds tolerance");
  }
  return out;
}

}  // namespace bellgames
