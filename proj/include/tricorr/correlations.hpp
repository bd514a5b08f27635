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

#ifndef TRICORR_CORRELATIONS_HPP
#define TRICORR_CORRELATIONS_HPP

#include <functional>
#include <utility>

#include "tricorr/linops.hpp"

namespace tricorr {

// Projective measurement direction on one qubit, parametrized on the Bloch
// sphere. The measured orthonormal pair is
//   |i1> = cos(theta/2)|0> + e^{+i phi} sin(theta/2)|1>
//   |i2> = e^{-i phi} sin(theta/2)|0> - cos(theta/2)|1>
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;
};

// Rank-1 projectors |i1><i1|, |i2><i2| of the basis above. They always sum
// to the identity and are orthogonal for any (theta, phi).
std::pair<Mat, Mat> projectors(const MeasurementBasis& basis);

// Von Neumann entropy -tr(rho log2 rho). Accepts Hermitian unit-trace
// matrices with eigenvalues >= tol::kStateEigenFloor; eigenvalues below
// tol::kEntropyClamp contribute zero.
double entropy(const Mat& rho);

// S(rho_a) + S(rho_b) - S(rho_ab) of a two-qubit state.
double mutual_information(const Mat& rho_ab);

// Average post-measurement entropy sum_i p_i S(rho_i) for a projective
// measurement of subsystem B in the given basis. Outcomes with branch
// probability below tol::kBranchProbabilityFloor contribute zero.
double measured_conditional_entropy(const Mat& rho_ab,
                                    const MeasurementBasis& basis);

struct OptimizationResult {
  double value = 0.0;          // certified minimum (see minimize_over_bases)
  MeasurementBasis argmin;     // where the minimum was found
  double grid_value = 0.0;     // best value on the coarse grid alone
  bool converged = false;      // refinement reached its spread target
};

// Global minimization of a smooth periodic objective over measurement
// bases: a tol::kGridThetaPoints x tol::kGridPhiPoints coarse scan of
// [0, pi] x [0, 2 pi) followed by Nelder-Mead refinement around the best
// grid point. When the refinement fails to converge the coarse grid value
// is returned and `converged` is false; in every case
// value <= grid_value + tol::kRefineSlack.
OptimizationResult minimize_over_bases(
    const std::function<double(const MeasurementBasis&)>& objective);

// A measure value plus the convergence status of the optimization that
// produced it. `converged` is true for closed-form (optimization-free)
// paths.
struct MeasureResult {
  double value = 0.0;
  bool converged = true;
};

// Measurement-induced disturbance result. `degenerate_fallback` records
// that at least one marginal was spectrally degenerate within
// tol::kDegenerateMarginalGap and the computational basis was used for it.
struct MidResult {
  double value = 0.0;
  bool degenerate_fallback = false;
};

// Quantum discord with measurement on subsystem B:
//   D = I(rho) - [S(rho_a) - min_basis sum_i p_i S(rho_i)].
MeasureResult quantum_discord(const Mat& rho_ab);

// One-way quantum work deficit, dephasing subsystem B:
//   W = min_basis S(sum_i (I x B_i) rho (I x B_i)) - S(rho).
MeasureResult work_deficit(const Mat& rho_ab);

// Measurement-induced disturbance: mutual information lost when both
// subsystems are dephased in their marginal eigenbases,
//   M = I(rho) - I(Pi(rho)).
MidResult mid(const Mat& rho_ab);

// Wootters concurrence max(0, l1 - l2 - l3 - l4) where l_i are the square
// roots of the eigenvalues of rho * (sy x sy) rho^* (sy x sy), descending.
double concurrence(const Mat& rho_ab);

// All four measures of one state, sharing a single validation pass.
struct CorrelationSet {
  double mid = 0.0;
  double discord = 0.0;
  double work_deficit = 0.0;
  double concurrence = 0.0;
  bool degenerate_marginal = false;
  bool optimizer_converged = true;
};

CorrelationSet evaluate_all(const Mat& rho_ab);

}  // namespace tricorr

#endif  // TRICORR_CORRELATIONS_HPP
