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

#include "tricorr/photon.hpp"

#include <sstream>
#include <stdexcept>

#include "tricorr/tolerances.hpp"

namespace tricorr {

namespace {

// Atomic level index (0-based) -> product-basis index. |10> (index 2) is
// deliberately absent.
constexpr int kEmbed[3] = {0, 1, 3};

}  // namespace

TwoPhotonState atomic_to_photon(const Mat& rho_atom) {
  if (rho_atom.dim() != 3)
    throw std::invalid_argument("atomic_to_photon: input must be 3x3");
  const double defect = hermiticity_defect(rho_atom);
  if (defect > tol::kHermitianDefect) {
    std::ostringstream os;
    os << "atomic_to_photon: input is not Hermitian (defect " << defect
       << ")";
    throw std::invalid_argument(os.str());
  }
  const auto eigs = hermitian_eigenvalues(rho_atom);
  if (eigs[2] < tol::kStateEigenFloor) {
    std::ostringstream os;
    os << "atomic_to_photon: input has eigenvalue " << eigs[2];
    throw std::invalid_argument(os.str());
  }
  const double raw_trace = trace(rho_atom).real();
  if (raw_trace > 1.0 + tol::kUnitTrace) {
    std::ostringstream os;
    os << "atomic_to_photon: trace " << raw_trace << " exceeds 1";
    throw std::invalid_argument(os.str());
  }
  if (raw_trace <= tol::kSurvivalFloor) {
    std::ostringstream os;
    os << "atomic_to_photon: trace " << raw_trace
       << " is too small to renormalize";
    throw std::invalid_argument(os.str());
  }

  TwoPhotonState out;
  out.survival = raw_trace;
  out.rho = Mat(4);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      out.rho(kEmbed[i], kEmbed[j]) = rho_atom(i, j) / raw_trace;
  return out;
}

std::array<double, 4> populations(const TwoPhotonState& state) {
  std::array<double, 4> p{};
  for (int i = 0; i < 4; ++i) p[i] = state.rho(i, i).real();
  return p;
}

double purity(const TwoPhotonState& state) {
  return trace(state.rho * state.rho).real();
}

}  // namespace tricorr
