// Copyright 2026 The tricorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tricorr/linops.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "tricorr/errors.hpp"
#include "tricorr/tolerances.hpp"

namespace tricorr {

namespace {

void require_dim(int dim) {
  if (dim < 2 || dim > 4) {
    std::ostringstream os;
    os << "matrix dimension must be 2, 3 or 4, got " << dim;
    throw std::invalid_argument(os.str());
  }
}

void require_same_dim(const Mat& a, const Mat& b, const char* op) {
  if (a.dim() != b.dim()) {
    std::ostringstream os;
    os << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim()
       << ")";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

Mat::Mat(int dim) : dim_(dim) { require_dim(dim); }

Mat Mat::identity(int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_dim(*this, o, "operator+=");
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_dim(*this, o, "operator-=");
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(cplx s) {
  for (int i = 0; i < dim_ * dim_; ++i) a_[i] *= s;
  return *this;
}

Mat operator+(Mat a, const Mat& b) { return a += b; }
Mat operator-(Mat a, const Mat& b) { return a -= b; }

Mat operator-(const Mat& a) {
  Mat r = a;
  return r *= cplx(-1.0);
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "operator*");
  const int n = a.dim();
  Mat r(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

Mat operator*(cplx s, Mat a) { return a *= s; }
Mat operator*(double s, Mat a) { return a *= cplx(s); }

Mat adjoint(const Mat& m) {
  Mat r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = std::conj(m(j, i));
  return r;
}

Mat conjugate(const Mat& m) {
  Mat r(m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = std::conj(m(i, j));
  return r;
}

cplx trace(const Mat& m) {
  cplx t = 0.0;
  for (int i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

double frobenius_norm(const Mat& m) {
  double s = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) s += std::norm(m(i, j));
  return std::sqrt(s);
}

double max_abs(const Mat& m) {
  double v = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) v = std::max(v, std::abs(m(i, j)));
  return v;
}

double max_abs_diff(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "max_abs_diff");
  double v = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      v = std::max(v, std::abs(a(i, j) - b(i, j)));
  return v;
}

double hermiticity_defect(const Mat& m) {
  double v = 0.0;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = i; j < m.dim(); ++j)
      v = std::max(v, std::abs(m(i, j) - std::conj(m(j, i))));
  return v;
}

Mat kron(const Mat& a, const Mat& b) {
  const int n = a.dim() * b.dim();
  if (n > tol::kKronMaxDim) {
    std::ostringstream os;
    os << "kron: output dimension " << n << " exceeds " << tol::kKronMaxDim;
    throw std::invalid_argument(os.str());
  }
  Mat r(n);
  const int db = b.dim();
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      for (int k = 0; k < db; ++k)
        for (int l = 0; l < db; ++l)
          r(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return r;
}

Mat partial_trace(const Mat& m, Subsystem keep) {
  if (m.dim() != 4)
    throw std::invalid_argument("partial_trace: input must be 4x4");
  Mat r(2);
  if (keep == Subsystem::A) {
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  } else {
    for (int k = 0; k < 2; ++k)
      for (int l = 0; l < 2; ++l) r(k, l) = m(k, l) + m(2 + k, 2 + l);
  }
  return r;
}

namespace {

double off_diagonal_norm(const Mat& a) {
  double s = 0.0;
  for (int p = 0; p < a.dim(); ++p)
    for (int q = p + 1; q < a.dim(); ++q) s += std::norm(a(p, q));
  return std::sqrt(2.0 * s);
}

// One two-sided rotation A <- U^dagger A U that annihilates A(p,q). U acts
// on columns p and q only:
//
//   U(p,p) = c            U(p,q) = s
//   U(q,p) = -s conj(w)   U(q,q) = c conj(w)
//
// where w = A(p,q)/|A(p,q)| absorbs the phase and (c, s) is the classical
// real Jacobi pair for the magnitudes. V, when present, accumulates the
// rotations so its columns converge to the eigenvectors.
void jacobi_rotate(Mat& a, Mat* v, int p, int q) {
  const cplx apq = a(p, q);
  const double b = std::abs(apq);
  if (b < 1e-300) {
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    return;
  }
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const cplx w = apq / b;
  const cplx wc = std::conj(w);
  const double tau = (aqq - app) / (2.0 * b);
  const double t =
      (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const int n = a.dim();
  for (int i = 0; i < n; ++i) {
    if (i == p || i == q) continue;
    const cplx aip = a(i, p);
    const cplx aiq = a(i, q);
    a(i, p) = c * aip - s * wc * aiq;
    a(i, q) = s * aip + c * wc * aiq;
    a(p, i) = std::conj(a(i, p));
    a(q, i) = std::conj(a(i, q));
  }
  a(p, p) = app - t * b;
  a(q, q) = aqq + t * b;
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  if (v != nullptr) {
    for (int i = 0; i < n; ++i) {
      const cplx vip = (*v)(i, p);
      const cplx viq = (*v)(i, q);
      (*v)(i, p) = c * vip - s * wc * viq;
      (*v)(i, q) = s * vip + c * wc * viq;
    }
  }
}

// Diagonalizes the Hermitian part of m in place. Returns the working copy
// with eigenvalues on the (real) diagonal; fills *v with the accumulated
// unitary when v is non-null.
Mat jacobi_run(const Mat& m, Mat* v) {
  const double defect = hermiticity_defect(m);
  if (defect > tol::kHermitianDefect) {
    std::ostringstream os;
    os << "hermitian_eig: input is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(os.str());
  }

  const int n = m.dim();
  Mat a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  if (v != nullptr) *v = Mat::identity(n);

  const double target =
      tol::kJacobiOffDiagonal * std::max(1.0, frobenius_norm(a));
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) return a;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) jacobi_rotate(a, v, p, q);
  }
  if (off_diagonal_norm(a) <= target) return a;
  throw NumericalError("hermitian_eig: Jacobi iteration failed to converge");
}

std::array<int, 4> descending_order(const Mat& a) {
  std::array<int, 4> idx{0, 1, 2, 3};
  std::stable_sort(idx.begin(), idx.begin() + a.dim(), [&](int i, int j) {
    return a(i, i).real() > a(j, j).real();
  });
  return idx;
}

}  // namespace

EigenSystem hermitian_eig(const Mat& m) {
  Mat v;
  const Mat a = jacobi_run(m, &v);
  const auto idx = descending_order(a);

  EigenSystem out;
  out.dim = m.dim();
  out.vectors = Mat(m.dim());
  for (int col = 0; col < m.dim(); ++col) {
    const int src = idx[col];
    out.values[col] = a(src, src).real();
    int anchor = -1;
    for (int i = 0; i < m.dim(); ++i) {
      if (std::abs(v(i, src)) > tol::kEigenPhaseAnchor) {
        anchor = i;
        break;
      }
    }
    // Unit columns always have a component of magnitude >= 1/sqrt(dim).
    const cplx va = v(anchor, src);
    const cplx phase = std::conj(va) / std::abs(va);
    for (int i = 0; i < m.dim(); ++i) out.vectors(i, col) = phase * v(i, src);
  }
  return out;
}

std::array<double, 4> hermitian_eigenvalues(const Mat& m) {
  const Mat a = jacobi_run(m, nullptr);
  const auto idx = descending_order(a);
  std::array<double, 4> values{};
  for (int i = 0; i < m.dim(); ++i) values[i] = a(idx[i], idx[i]).real();
  return values;
}

}  // namespace tricorr
