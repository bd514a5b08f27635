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

#ifndef TRICORR_PHOTON_HPP
#define TRICORR_PHOTON_HPP

#include <array>

#include "tricorr/linops.hpp"

namespace tricorr {

// Two-photon state heralded by the atom. `rho` is the normalized 4x4
// density matrix in the |00>, |01>, |10>, |11> product basis; `survival`
// is the raw weight (the atomic trace) that was divided out, i.e. the
// probability that no decay happened yet.
//
// The |10> mode combination never appears: the atomic levels map to |00>,
// |01> and |11>, so row and column index 2 stay identically zero and the
// state has rank at most 3.
struct TwoPhotonState {
  Mat rho;
  double survival = 0.0;
};

// Embeds a 3x3 atomic state into the two-photon space:
//   |1> -> |00>,  |2> -> |01>,  |3> -> |11>
// and renormalizes by the surviving trace. Inputs must be admissible atomic
// states (Hermitian, eigenvalues >= tol::kStateEigenFloor, trace in
// (tol::kSurvivalFloor, 1 + tol::kUnitTrace]); anything else throws.
TwoPhotonState atomic_to_photon(const Mat& rho_atom);

// Diagonal of rho in the product basis, ordered (p00, p01, p10, p11).
std::array<double, 4> populations(const TwoPhotonState& state);

// tr(rho^2) of the normalized state.
double purity(const TwoPhotonState& state);

}  // namespace tricorr

#endif  // TRICORR_PHOTON_HPP
