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

#include <doctest.h>

#include <random>

#include "support/random_states.hpp"
#include "tricorr/linops.hpp"

using namespace tricorr;

namespace {

Mat pauli_y() {
  Mat m(2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

Mat random_square(std::mt19937_64& rng, int dim) {
  Mat m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = testing::gaussian(rng);
  return m;
}

Mat random_hermitian(std::mt19937_64& rng, int dim) {
  const Mat g = random_square(rng, dim);
  return 0.5 * (g + adjoint(g));
}

}  // namespace

TEST_CASE("matrix constructors and element access") {
  for (int dim : {2, 3, 4}) {
    Mat z(dim);
    CHECK(z.dim() == dim);
    CHECK(max_abs(z) == 0.0);
    CHECK(trace(Mat::identity(dim)) == cplx(dim));
  }
  CHECK(Mat().dim() == 0);
  CHECK_THROWS_AS(Mat(1), std::invalid_argument);
  CHECK_THROWS_AS(Mat(5), std::invalid_argument);
}

TEST_CASE("arithmetic matches hand-computed 2x2 results") {
  Mat a(2), b(2);
  a(0, 0) = 1.0;
  a(0, 1) = cplx(0.0, 2.0);
  a(1, 0) = 3.0;
  a(1, 1) = -1.0;
  b(0, 0) = 2.0;
  b(0, 1) = 1.0;
  b(1, 0) = cplx(0.0, -1.0);
  b(1, 1) = 4.0;

  const Mat p = a * b;
  CHECK(p(0, 0) == cplx(1.0 * 2.0) + cplx(0.0, 2.0) * cplx(0.0, -1.0));
  CHECK(p(0, 1) == cplx(1.0) + cplx(0.0, 2.0) * 4.0);
  CHECK(p(1, 0) == cplx(6.0) + cplx(-1.0) * cplx(0.0, -1.0));
  CHECK(p(1, 1) == cplx(3.0) + cplx(-4.0));

  CHECK(max_abs_diff((a + b) - b, a) == 0.0);
  CHECK(max_abs_diff(2.0 * a, a + a) == 0.0);
  CHECK(max_abs_diff(-a, cplx(-1.0) * a) == 0.0);
  CHECK(trace(a) == cplx(0.0));
}

TEST_CASE("adjoint, conjugate and hermiticity defect") {
  std::mt19937_64 rng(11);
  const Mat g = random_square(rng, 3);
  CHECK(max_abs_diff(adjoint(adjoint(g)), g) == 0.0);
  CHECK(max_abs_diff(conjugate(conjugate(g)), g) == 0.0);

  const Mat h = 0.5 * (g + adjoint(g));
  CHECK(hermiticity_defect(h) == 0.0);

  Mat skew(2);
  skew(0, 1) = 1.0;  // defect |m01 - conj(m10)| = 1
  CHECK(hermiticity_defect(skew) == doctest::Approx(1.0));
}

TEST_CASE("kron reproduces the two-qubit spin-flip pattern") {
  const Mat sy2 = kron(pauli_y(), pauli_y());
  // sigma_y x sigma_y is real with anti-diagonal (-1, 1, 1, -1).
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const cplx expected =
          (i + j == 3) ? cplx((i == 1 || i == 2) ? 1.0 : -1.0) : cplx(0.0);
      CHECK(sy2(i, j) == expected);
    }
}

TEST_CASE("kron identities and size cap") {
  std::mt19937_64 rng(12);
  const Mat a = random_square(rng, 2), b = random_square(rng, 2);
  const Mat c = random_square(rng, 2), d = random_square(rng, 2);

  CHECK(max_abs_diff(kron(Mat::identity(2), Mat::identity(2)),
                     Mat::identity(4)) == 0.0);
  // mixed-product rule (A x B)(C x D) = AC x BD
  CHECK(max_abs_diff(kron(a, b) * kron(c, d), kron(a * c, b * d)) < 1e-13);
  CHECK(std::abs(trace(kron(a, b)) - trace(a) * trace(b)) < 1e-13);
  CHECK_THROWS_AS(kron(random_square(rng, 3), b), std::invalid_argument);
}

TEST_CASE("partial trace of a diagonal state") {
  Mat rho(4);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.25;
  rho(2, 2) = 0.25;

  const Mat ra = partial_trace(rho, Subsystem::A);
  CHECK(ra.dim() == 2);
  CHECK(ra(0, 0) == cplx(0.75));
  CHECK(ra(1, 1) == cplx(0.25));
  CHECK(ra(0, 1) == cplx(0.0));

  const Mat rb = partial_trace(rho, Subsystem::B);
  CHECK(rb(0, 0) == cplx(0.75));
  CHECK(rb(1, 1) == cplx(0.25));
}

TEST_CASE("partial trace inverts kron on product operators") {
  std::mt19937_64 rng(13);
  const Mat a = random_square(rng, 2), b = random_square(rng, 2);
  const Mat prod = kron(a, b);
  // tr_B(A x B) = tr(B) A and tr_A(A x B) = tr(A) B
  CHECK(max_abs_diff(partial_trace(prod, Subsystem::A), trace(b) * a) < 1e-13);
  CHECK(max_abs_diff(partial_trace(prod, Subsystem::B), trace(a) * b) < 1e-13);
  CHECK_THROWS_AS(partial_trace(a, Subsystem::A), std::invalid_argument);
}

TEST_CASE("eigensystem of known 2x2 matrices") {
  Mat sx(2);
  sx(0, 1) = 1.0;
  sx(1, 0) = 1.0;
  const EigenSystem es = hermitian_eig(sx);
  CHECK(es.values[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(es.values[1] == doctest::Approx(-1.0).epsilon(1e-12));
  // phase anchor: leading component of each eigenvector is real positive
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(es.vectors(0, 0) - inv_sqrt2) < 1e-12);
  CHECK(std::abs(es.vectors(1, 0) - inv_sqrt2) < 1e-12);
  CHECK(std::abs(es.vectors(0, 1) - inv_sqrt2) < 1e-12);
  CHECK(std::abs(es.vectors(1, 1) + inv_sqrt2) < 1e-12);

  Mat diag(3);
  diag(0, 0) = -2.0;
  diag(1, 1) = 5.0;
  diag(2, 2) = 1.0;
  const auto vals = hermitian_eigenvalues(diag);
  CHECK(vals[0] == doctest::Approx(5.0));
  CHECK(vals[1] == doctest::Approx(1.0));
  CHECK(vals[2] == doctest::Approx(-2.0));
}

TEST_CASE("eigensystem properties on random Hermitian matrices") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 25; ++trial) {
    const int dim = 2 + trial % 3;
    const Mat h = random_hermitian(rng, dim);
    const EigenSystem es = hermitian_eig(h);

    double value_sum = 0.0;
    for (int i = 0; i < dim; ++i) {
      value_sum += es.values[i];
      if (i + 1 < dim) CHECK(es.values[i] >= es.values[i + 1]);
    }
    CHECK(value_sum == doctest::Approx(trace(h).real()).epsilon(1e-12));

    // columns reconstruct the input and form an orthonormal frame
    Mat rebuilt(dim);
    for (int k = 0; k < dim; ++k)
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          rebuilt(i, j) +=
              es.values[k] * es.vectors(i, k) * std::conj(es.vectors(j, k));
    CHECK(max_abs_diff(rebuilt, h) < 1e-10);
    CHECK(max_abs_diff(adjoint(es.vectors) * es.vectors,
                       Mat::identity(dim)) < 1e-10);

    // column k is an eigenvector: H v = lambda v
    for (int k = 0; k < dim; ++k) {
      const Mat hv = h * es.vectors;
      for (int i = 0; i < dim; ++i)
        CHECK(std::abs(hv(i, k) - es.values[k] * es.vectors(i, k)) < 1e-9);
    }

    const auto vals_only = hermitian_eigenvalues(h);
    for (int i = 0; i < dim; ++i)
      CHECK(vals_only[i] == doctest::Approx(es.values[i]).epsilon(1e-12));
  }
}

TEST_CASE("eigensolver determinism and rejection of non-Hermitian input") {
  std::mt19937_64 rng(15);
  const Mat h = random_hermitian(rng, 4);
  const EigenSystem a = hermitian_eig(h);
  const EigenSystem b = hermitian_eig(h);
  CHECK(max_abs_diff(a.vectors, b.vectors) == 0.0);
  for (int i = 0; i < 4; ++i) CHECK(a.values[i] == b.values[i]);

  const Mat g = random_square(rng, 3);
  CHECK_THROWS_AS(hermitian_eig(g), std::invalid_argument);
  CHECK_THROWS_AS(hermitian_eigenvalues(g), std::invalid_argument);
}
