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

#ifndef TRICORR_TOLERANCES_HPP
#define TRICORR_TOLERANCES_HPP

// Every numerical threshold used by the library lives here. Nothing below is
// tunable at runtime; changing a value changes the contract of the functions
// that consume it.

namespace tricorr::tol {

// --- dense linear algebra -------------------------------------------------

// Maximum element-wise defect |M - M^dagger| accepted by the Hermitian
// eigensolver and by density-matrix validation.
inline constexpr double kHermitianDefect = 1e-9;

// The Jacobi sweep stops once the off-diagonal Frobenius norm drops below
// this factor times max(1, ||M||_F).
inline constexpr double kJacobiOffDiagonal = 1e-14;
inline constexpr int kJacobiMaxSweeps = 64;

// Eigenvector phase is anchored on the first component whose magnitude
// exceeds this bound (such a component always exists for unit vectors).
inline constexpr double kEigenPhaseAnchor = 1e-8;

// Kronecker products beyond this output dimension are rejected.
inline constexpr int kKronMaxDim = 4;

// --- density-matrix admissibility ------------------------------------------

// |trace - 1| accepted for normalized states.
inline constexpr double kUnitTrace = 1e-9;

// Eigenvalues of admissible states may dip this far below zero (roundoff).
inline constexpr double kStateEigenFloor = -1e-9;

// Eigenvalues below this magnitude contribute zero to entropies.
inline constexpr double kEntropyClamp = 1e-12;

// --- time evolution ---------------------------------------------------------

inline constexpr double kDefaultDt = 1e-3;
inline constexpr double kMaxDt = 1e-2;
inline constexpr double kDefaultStride = 1e-2;

// A sampled state with an eigenvalue below this aborts the integration.
inline constexpr double kStateEigenAbort = -1e-6;

// The trace must not grow by more than this between consecutive samples.
inline constexpr double kTraceRise = 1e-9;

// --- photon mapping ----------------------------------------------------------

// Smallest raw trace (survival probability) that can be renormalized.
inline constexpr double kSurvivalFloor = 1e-12;

// --- correlation measures ----------------------------------------------------

// Measurement outcomes with branch probability below this contribute zero.
inline constexpr double kBranchProbabilityFloor = 1e-12;

// Marginal eigenvalue gaps below this trigger the computational-basis
// fallback of the measurement-induced disturbance.
inline constexpr double kDegenerateMarginalGap = 1e-9;

// Measures are clamped to zero when roundoff drives them negative by at
// most this amount; anything lower is a hard numerical error.
inline constexpr double kMeasureClamp = 1e-9;

// Spin-flip spectrum handling inside the concurrence: small negatives are
// clamped, large negatives reject the input state.
inline constexpr double kConcurrenceEigenClamp = -1e-10;
inline constexpr double kConcurrenceEigenReject = -1e-8;

// --- measurement-basis optimizer ----------------------------------------------

inline constexpr int kGridThetaPoints = 48;
inline constexpr int kGridPhiPoints = 48;

// Initial simplex edge length around the best grid point.
inline constexpr double kSimplexStep = 0.05;

// The refinement stops when the simplex value spread falls below this, or
// after kSimplexMaxIter iterations.
inline constexpr double kSimplexSpreadStop = 1e-8;
inline constexpr int kSimplexMaxIter = 200;

// A run counts as converged when the exit spread is at most this.
inline constexpr double kConvergedSpread = 1e-6;

// The refined minimum may exceed the coarse grid minimum by at most this.
inline constexpr double kRefineSlack = 1e-12;

}  // namespace tricorr::tol

#endif  // TRICORR_TOLERANCES_HPP
