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

#ifndef TRICORR_LINOPS_HPP
#define TRICORR_LINOPS_HPP

#include <array>
#include <cassert>
#include <complex>

namespace tricorr {

using cplx = std::complex<double>;

// Dense complex square matrix of dimension 2, 3 or 4 with value semantics
// and fixed storage. Everything the simulator touches fits in this shape, so
// there is no heap traffic anywhere in the numerical core.
class Mat {
 public:
  // Empty matrix (dimension 0). Only assignment brings it to life; useful
  // for containers and deferred initialization.
  Mat() = default;

  // Zero matrix of the given dimension. Dimensions outside {2, 3, 4} throw.
  explicit Mat(int dim);

  static Mat identity(int dim);

  int dim() const { return dim_; }

  cplx& operator()(int r, int c) {
    assert(r >= 0 && r < dim_ && c >= 0 && c < dim_);
    return a_[r * dim_ + c];
  }
  const cplx& operator()(int r, int c) const {
    assert(r >= 0 && r < dim_ && c >= 0 && c < dim_);
    return a_[r * dim_ + c];
  }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(cplx s);

 private:
  int dim_ = 0;
  std::array<cplx, 16> a_{};
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(cplx s, Mat a);
Mat operator*(double s, Mat a);

Mat adjoint(const Mat& m);
Mat conjugate(const Mat& m);
cplx trace(const Mat& m);

double frobenius_norm(const Mat& m);

// Largest element-wise magnitude of m, respectively of a - b.
double max_abs(const Mat& m);
double max_abs_diff(const Mat& a, const Mat& b);

// Largest element-wise magnitude of m - m^dagger.
double hermiticity_defect(const Mat& m);

// Kronecker product. The output dimension is capped at 4, so in practice
// both factors must be qubit-sized; larger requests throw.
Mat kron(const Mat& a, const Mat& b);

enum class Subsystem { A, B };

// Reduction of a 4x4 two-qubit operator to the kept subsystem, with the
// first tensor factor as subsystem A.
Mat partial_trace(const Mat& m, Subsystem keep);

// Eigensystem of a Hermitian matrix. values[0..dim) are sorted descending
// (the remainder stays zero); column i of `vectors` is the unit eigenvector
// of values[i], with its first component of magnitude above
// tol::kEigenPhaseAnchor rotated to the positive real axis. Ties keep the
// order in which the Jacobi iteration produced them, so the decomposition is
// a deterministic function of the input bytes.
struct EigenSystem {
  int dim = 0;
  std::array<double, 4> values{};
  Mat vectors;
};

// Cyclic complex Jacobi diagonalization. Inputs whose hermiticity defect
// exceeds tol::kHermitianDefect are rejected; the iteration runs on the
// Hermitian part (m + m^dagger)/2 until the off-diagonal Frobenius norm
// drops below tol::kJacobiOffDiagonal * max(1, ||m||_F).
EigenSystem hermitian_eig(const Mat& m);

// Eigenvalues only, same contract and ordering as hermitian_eig. Skips the
// eigenvector accumulation; this is the hot path of the entropy evaluations.
std::array<double, 4> hermitian_eigenvalues(const Mat& m);

}  // namespace tricorr

#endif  // TRICORR_LINOPS_HPP
