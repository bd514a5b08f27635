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

#include "tricorr/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "tricorr/errors.hpp"
#include "tricorr/tolerances.hpp"

namespace tricorr {

namespace {

constexpr double kPi = std::numbers::pi;

void validate_state(const Mat& rho, const char* where, int expected_dim) {
  if (rho.dim() != expected_dim) {
    std::ostringstream os;
    os << where << ": expected a " << expected_dim << "x" << expected_dim
       << " state, got dimension " << rho.dim();
    throw std::invalid_argument(os.str());
  }
  const double defect = hermiticity_defect(rho);
  if (defect > tol::kHermitianDefect) {
    std::ostringstream os;
    os << where << ": state is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(os.str());
  }
  const double tr = trace(rho).real();
  if (std::abs(tr - 1.0) > tol::kUnitTrace) {
    std::ostringstream os;
    os << where << ": state trace " << tr << " is not 1";
    throw std::invalid_argument(os.str());
  }
  const auto eigs = hermitian_eigenvalues(rho);
  if (eigs[rho.dim() - 1] < tol::kStateEigenFloor) {
    std::ostringstream os;
    os << where << ": state has eigenvalue " << eigs[rho.dim() - 1];
    throw std::invalid_argument(os.str());
  }
}

// -sum lambda log2 lambda over the first `count` entries, ignoring
// eigenvalues at or below the clamp. No admissibility checks; callers that
// need them use entropy().
double entropy_from_spectrum(const std::array<double, 4>& eigs, int count) {
  double s = 0.0;
  for (int i = 0; i < count; ++i) {
    if (eigs[i] > tol::kEntropyClamp) s -= eigs[i] * std::log2(eigs[i]);
  }
  return s;
}

// Small negative measure values are roundoff; anything past the clamp means
// the inputs or the optimization went numerically bad.
double clamp_measure(double value, const char* name) {
  if (value >= 0.0) return value;
  if (value >= -tol::kMeasureClamp) return 0.0;
  std::ostringstream os;
  os << name << ": value " << value << " is negative beyond roundoff";
  throw NumericalError(os.str());
}

std::array<cplx, 2> basis_vector_1(const MeasurementBasis& b) {
  return {std::cos(0.5 * b.theta),
          std::polar(std::sin(0.5 * b.theta), b.phi)};
}

std::array<cplx, 2> basis_vector_2(const MeasurementBasis& b) {
  return {std::polar(std::sin(0.5 * b.theta), -b.phi),
          cplx(-std::cos(0.5 * b.theta))};
}

Mat projector_from(const std::array<cplx, 2>& v) {
  Mat p(2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) p(i, j) = v[i] * std::conj(v[j]);
  return p;
}

// (I x <v|) rho (I x |v>): the unnormalized conditional operator on
// subsystem A after projecting B onto |v>. Same nonzero spectrum as the
// full 4x4 sandwich, at a quarter of the size.
Mat collapse_b(const Mat& rho, const std::array<cplx, 2>& v) {
  Mat m(2);
  for (int a = 0; a < 2; ++a) {
    for (int ap = 0; ap < 2; ++ap) {
      cplx acc = 0.0;
      for (int b = 0; b < 2; ++b)
        for (int bp = 0; bp < 2; ++bp)
          acc += std::conj(v[b]) * rho(2 * a + b, 2 * ap + bp) * v[bp];
      m(a, ap) = acc;
    }
  }
  return m;
}

const Mat& spin_flip_pair() {
  // sigma_y x sigma_y: real anti-diagonal (-1, 1, 1, -1).
  static const Mat sy2 = [] {
    Mat m(4);
    m(0, 3) = -1.0;
    m(1, 2) = 1.0;
    m(2, 1) = 1.0;
    m(3, 0) = -1.0;
    return m;
  }();
  return sy2;
}

}  // namespace

std::pair<Mat, Mat> projectors(const MeasurementBasis& basis) {
  return {projector_from(basis_vector_1(basis)),
          projector_from(basis_vector_2(basis))};
}

double entropy(const Mat& rho) {
  if (rho.dim() < 2)
    throw std::invalid_argument("entropy: empty matrix");
  const double defect = hermiticity_defect(rho);
  if (defect > tol::kHermitianDefect) {
    std::ostringstream os;
    os << "entropy: state is not Hermitian (defect " << defect << ")";
    throw std::invalid_argument(os.str());
  }
  const double tr = trace(rho).real();
  if (std::abs(tr - 1.0) > tol::kUnitTrace) {
    std::ostringstream os;
    os << "entropy: state trace " << tr << " is not 1";
    throw std::invalid_argument(os.str());
  }
  const auto eigs = hermitian_eigenvalues(rho);
  if (eigs[rho.dim() - 1] < tol::kStateEigenFloor) {
    std::ostringstream os;
    os << "entropy: state has eigenvalue " << eigs[rho.dim() - 1];
    throw std::invalid_argument(os.str());
  }
  return entropy_from_spectrum(eigs, rho.dim());
}

double mutual_information(const Mat& rho_ab) {
  validate_state(rho_ab, "mutual_information", 4);
  return entropy(partial_trace(rho_ab, Subsystem::A)) +
         entropy(partial_trace(rho_ab, Subsystem::B)) - entropy(rho_ab);
}

double measured_conditional_entropy(const Mat& rho_ab,
                                    const MeasurementBasis& basis) {
  if (rho_ab.dim() != 4)
    throw std::invalid_argument(
        "measured_conditional_entropy: state must be 4x4");
  double total = 0.0;
  for (const auto& v : {basis_vector_1(basis), basis_vector_2(basis)}) {
    const Mat m = collapse_b(rho_ab, v);
    const double p = trace(m).real();
    if (p <= tol::kBranchProbabilityFloor) continue;
    // Branch spectrum normalized by hand: dividing a near-zero branch by p
    // would amplify eigenvalue roundoff past the admissibility gates that
    // entropy() enforces, while the entropy contribution stays well-behaved.
    auto eigs = hermitian_eigenvalues(m);
    for (double& e : eigs) e /= p;
    total += p * entropy_from_spectrum(eigs, 2);
  }
  return total;
}

OptimizationResult minimize_over_bases(
    const std::function<double(const MeasurementBasis&)>& objective) {
  double best_ever = std::numeric_limits<double>::infinity();
  MeasurementBasis best_point;
  auto eval = [&](const MeasurementBasis& b) {
    const double f = objective(b);
    if (f < best_ever) {
      best_ever = f;
      best_point = b;
    }
    return f;
  };

  double grid_value = std::numeric_limits<double>::infinity();
  MeasurementBasis grid_point;
  for (int i = 0; i < tol::kGridThetaPoints; ++i) {
    const double theta = i * kPi / (tol::kGridThetaPoints - 1);
    for (int j = 0; j < tol::kGridPhiPoints; ++j) {
      const double phi = j * 2.0 * kPi / tol::kGridPhiPoints;
      const MeasurementBasis b{theta, phi};
      const double f = eval(b);
      if (f < grid_value) {
        grid_value = f;
        grid_point = b;
      }
    }
  }

  // Nelder-Mead refinement from the best grid cell. Plain reflect / expand
  // / contract / shrink on the (theta, phi) plane; the objective is smooth
  // and 2 pi periodic, so walking out of the principal domain is harmless.
  struct Vertex {
    MeasurementBasis p;
    double f;
  };
  const double h = tol::kSimplexStep;
  std::array<Vertex, 3> v{
      Vertex{grid_point, grid_value},
      Vertex{{grid_point.theta + h, grid_point.phi}, 0.0},
      Vertex{{grid_point.theta, grid_point.phi + h}, 0.0}};
  v[1].f = eval(v[1].p);
  v[2].f = eval(v[2].p);

  auto order = [&] {
    std::stable_sort(v.begin(), v.end(),
                     [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
  };
  auto combine = [](const MeasurementBasis& a, double wa,
                    const MeasurementBasis& b, double wb) {
    return MeasurementBasis{wa * a.theta + wb * b.theta,
                            wa * a.phi + wb * b.phi};
  };

  for (int it = 0; it < tol::kSimplexMaxIter; ++it) {
    order();
    if (v[2].f - v[0].f < tol::kSimplexSpreadStop) break;
    const MeasurementBasis centroid = combine(v[0].p, 0.5, v[1].p, 0.5);
    const MeasurementBasis xr = combine(centroid, 2.0, v[2].p, -1.0);
    const double fr = eval(xr);
    if (fr < v[0].f) {
      const MeasurementBasis xe = combine(centroid, 3.0, v[2].p, -2.0);
      const double fe = eval(xe);
      if (fe < fr)
        v[2] = {xe, fe};
      else
        v[2] = {xr, fr};
    } else if (fr < v[1].f) {
      v[2] = {xr, fr};
    } else {
      const MeasurementBasis xc = combine(centroid, 0.5, v[2].p, 0.5);
      const double fc = eval(xc);
      if (fc < v[2].f) {
        v[2] = {xc, fc};
      } else {
        v[1].p = combine(v[0].p, 0.5, v[1].p, 0.5);
        v[1].f = eval(v[1].p);
        v[2].p = combine(v[0].p, 0.5, v[2].p, 0.5);
        v[2].f = eval(v[2].p);
      }
    }
  }
  order();

  OptimizationResult out;
  out.grid_value = grid_value;
  out.converged = (v[2].f - v[0].f) <= tol::kConvergedSpread;
  if (out.converged) {
    out.value = best_ever;  // global best of every evaluation, <= grid_value
    out.argmin = best_point;
  } else {
    out.value = grid_value;
    out.argmin = grid_point;
  }
  return out;
}

MeasureResult quantum_discord(const Mat& rho_ab) {
  validate_state(rho_ab, "quantum_discord", 4);
  const double info = mutual_information(rho_ab);
  const double s_a = entropy(partial_trace(rho_ab, Subsystem::A));
  const auto opt = minimize_over_bases([&](const MeasurementBasis& b) {
    return measured_conditional_entropy(rho_ab, b);
  });
  const double classical = s_a - opt.value;
  return {clamp_measure(info - classical, "quantum_discord"), opt.converged};
}

MeasureResult work_deficit(const Mat& rho_ab) {
  validate_state(rho_ab, "work_deficit", 4);
  const double s_rho = entropy(rho_ab);
  const Mat eye2 = Mat::identity(2);
  const auto opt = minimize_over_bases([&](const MeasurementBasis& b) {
    const auto [p1, p2] = projectors(b);
    const Mat m1 = kron(eye2, p1);
    const Mat m2 = kron(eye2, p2);
    return entropy(m1 * rho_ab * m1 + m2 * rho_ab * m2);
  });
  return {clamp_measure(opt.value - s_rho, "work_deficit"), opt.converged};
}

namespace {

// Spectral projectors of a 2x2 marginal, or the computational pair when the
// spectrum is degenerate within the gap tolerance (the eigenbasis is then
// arbitrary, and any stable choice is as disturbing as another).
std::pair<std::array<Mat, 2>, bool> marginal_projectors(const Mat& marginal) {
  const auto es = hermitian_eig(marginal);
  if (es.values[0] - es.values[1] < tol::kDegenerateMarginalGap) {
    Mat p0(2), p1(2);
    p0(0, 0) = 1.0;
    p1(1, 1) = 1.0;
    return {{p0, p1}, true};
  }
  std::array<Mat, 2> ps{Mat(2), Mat(2)};
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        ps[k](i, j) = es.vectors(i, k) * std::conj(es.vectors(j, k));
  return {ps, false};
}

}  // namespace

MidResult mid(const Mat& rho_ab) {
  validate_state(rho_ab, "mid", 4);
  const auto [pa, deg_a] = marginal_projectors(partial_trace(rho_ab, Subsystem::A));
  const auto [pb, deg_b] = marginal_projectors(partial_trace(rho_ab, Subsystem::B));

  Mat dephased(4);
  for (const Mat& p : pa) {
    for (const Mat& q : pb) {
      const Mat m = kron(p, q);
      dephased += m * rho_ab * m;
    }
  }
  const double value =
      mutual_information(rho_ab) - mutual_information(dephased);
  return {clamp_measure(value, "mid"), deg_a || deg_b};
}

double concurrence(const Mat& rho_ab) {
  validate_state(rho_ab, "concurrence", 4);

  const auto es = hermitian_eig(rho_ab);
  Mat sqrt_rho(4);
  for (int k = 0; k < 4; ++k) {
    const double root = std::sqrt(std::max(es.values[k], 0.0));
    if (root == 0.0) continue;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        sqrt_rho(i, j) +=
            root * es.vectors(i, k) * std::conj(es.vectors(j, k));
  }

  const Mat& sy2 = spin_flip_pair();
  const Mat flipped = sy2 * conjugate(rho_ab) * sy2;
  // sqrt(rho) flipped sqrt(rho) shares its nonzero spectrum with
  // rho * flipped but is Hermitian, which keeps the eigensolve exact.
  Mat t = sqrt_rho * flipped * sqrt_rho;
  t = 0.5 * (t + adjoint(t));

  auto mu = hermitian_eigenvalues(t);
  for (double& m : mu) {
    if (m < tol::kConcurrenceEigenReject) {
      std::ostringstream os;
      os << "concurrence: spin-flip spectrum has eigenvalue " << m;
      throw std::invalid_argument(os.str());
    }
    m = std::max(m, 0.0);
  }
  const double c = std::sqrt(mu[0]) - std::sqrt(mu[1]) - std::sqrt(mu[2]) -
                   std::sqrt(mu[3]);
  return std::max(0.0, c);
}

CorrelationSet evaluate_all(const Mat& rho_ab) {
  CorrelationSet out;
  const auto d = quantum_discord(rho_ab);
  const auto w = work_deficit(rho_ab);
  const auto m = mid(rho_ab);
  out.discord = d.value;
  out.work_deficit = w.value;
  out.mid = m.value;
  out.concurrence = concurrence(rho_ab);
  out.degenerate_marginal = m.degenerate_fallback;
  out.optimizer_converged = d.converged && w.converged;
  return out;
}

}  // namespace tricorr
