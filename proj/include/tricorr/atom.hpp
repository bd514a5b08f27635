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

#ifndef TRICORR_ATOM_HPP
#define TRICORR_ATOM_HPP

#include <optional>
#include <vector>

#include "tricorr/linops.hpp"
#include "tricorr/tolerances.hpp"

namespace tricorr {

// Ladder (Xi), Lambda and Vee arrangements of a three-level atom driven by
// two classical fields. Level |1> is the lowest-energy state in every
// arrangement and the only stable one; |2> and |3> decay at rates gamma1
// and gamma2 with the emitted photons leaving the problem for good.
enum class ConfigKind { Xi, Lambda, V };

struct AtomConfig {
  ConfigKind kind;
  // Field one couples |n> -> |m>, field two couples |k> -> |l>.
  // Levels are labeled 1..3.
  int m, n, l, k;
  double gamma1;  // decay rate of |2>
  double gamma2;  // decay rate of |3>
};

// Canonical decay rates for each arrangement; both can be overridden as
// long as they stay strictly positive.
AtomConfig make_config(ConfigKind kind,
                       std::optional<double> gamma1_override = std::nullopt,
                       std::optional<double> gamma2_override = std::nullopt);

// Rotating-frame drive. omega1/omega2 are Rabi magnitudes (non-negative),
// phi1/phi2 the field phases, delta1/delta2 the detunings from the two
// driven transitions.
struct DriveParams {
  double omega1 = 0.0;
  double omega2 = 0.0;
  double phi1 = 0.0;
  double phi2 = 0.0;
  double delta1 = 0.0;
  double delta2 = 0.0;
};

// Secular-perturbation condition under which the emitted photon pair keeps
// a well-defined mode structure. A violation degrades the model, it does
// not invalidate the mathematics, so callers treat `false` as a warning.
bool spa_satisfied(const AtomConfig& config, const DriveParams& drive);

// Rotating-wave Hamiltonian, 3x3 Hermitian:
//   <m|H|n> = -(omega1/2) e^{-i phi1},  <l|H|k> = -(omega2/2) e^{-i phi2},
// diagonal fixed by the detunings of the arrangement (see build notes in
// the implementation).
Mat build_hamiltonian(const AtomConfig& config, const DriveParams& drive);

// Diagonal relaxation operator diag(0, gamma1, gamma2).
Mat relaxation_matrix(const AtomConfig& config);

// d(rho)/dt = -i [H, rho] - 1/2 {Gamma, rho}. Purely trace-decreasing:
// decayed population leaves the three-level manifold instead of being
// repumped, which is what lets the state double as an emission record.
Mat liouville_rhs(const Mat& rho, const Mat& hamiltonian,
                  const Mat& relaxation);

struct EvolveOptions {
  double dt = tol::kDefaultDt;
  double output_stride = tol::kDefaultStride;
};

struct Trajectory {
  std::vector<double> times;
  std::vector<Mat> states;
  bool spa_valid = true;
};

// Fixed-step fourth-order Runge-Kutta integration of liouville_rhs from
// rho(0) = |1><1| to t_end. The state is re-Hermitized after every step.
// Samples land every `output_stride` (plus the final instant); each sample
// is admissibility-checked: an eigenvalue below tol::kStateEigenAbort or a
// trace rise beyond tol::kTraceRise aborts with a NumericalError carrying
// the offending time.
Trajectory evolve(const AtomConfig& config, const DriveParams& drive,
                  double t_end, const EvolveOptions& options = {});

}  // namespace tricorr

#endif  // TRICORR_ATOM_HPP
