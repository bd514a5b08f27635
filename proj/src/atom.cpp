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

#include "tricorr/atom.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "tricorr/errors.hpp"

namespace tricorr {

namespace {

void require_positive_rate(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream os;
    os << name << " must be strictly positive and finite, got " << value;
    throw std::invalid_argument(os.str());
  }
}

void validate_drive(const DriveParams& d) {
  if (!(d.omega1 >= 0.0) || !(d.omega2 >= 0.0)) {
    throw std::invalid_argument(
        "drive: Rabi magnitudes omega1/omega2 must be non-negative");
  }
  for (double v : {d.omega1, d.omega2, d.phi1, d.phi2, d.delta1, d.delta2}) {
    if (!std::isfinite(v))
      throw std::invalid_argument("drive: parameters must be finite");
  }
}

}  // namespace

AtomConfig make_config(ConfigKind kind, std::optional<double> gamma1_override,
                       std::optional<double> gamma2_override) {
  AtomConfig c{};
  c.kind = kind;
  switch (kind) {
    case ConfigKind::Xi:
      // Ladder 1 -> 2 -> 3: field one on 1-2, field two on 2-3. The top
      // level relaxes slowly (metastable), the middle one fast.
      c.m = 2;
      c.n = 1;
      c.l = 3;
      c.k = 2;
      c.gamma1 = 6.0;
      c.gamma2 = 1.0;
      break;
    case ConfigKind::Lambda:
      // Both fields share the excited level |3>; |2> is the metastable
      // shelf reached by the second field.
      c.m = 3;
      c.n = 1;
      c.l = 3;
      c.k = 2;
      c.gamma1 = 1.0;
      c.gamma2 = 6.0;
      break;
    case ConfigKind::V:
      // Two excited levels |2>, |3> driven independently from |1>.
      c.m = 3;
      c.n = 1;
      c.l = 2;
      c.k = 1;
      c.gamma1 = 6.0;
      c.gamma2 = 6.0;
      break;
  }
  if (gamma1_override) c.gamma1 = *gamma1_override;
  if (gamma2_override) c.gamma2 = *gamma2_override;
  require_positive_rate(c.gamma1, "gamma1");
  require_positive_rate(c.gamma2, "gamma2");
  return c;
}

bool spa_satisfied(const AtomConfig& config, const DriveParams& drive) {
  validate_drive(drive);
  switch (config.kind) {
    case ConfigKind::Xi:
      return drive.omega1 < config.gamma1;
    case ConfigKind::Lambda:
      return drive.omega1 < config.gamma2;
    case ConfigKind::V:
      return drive.omega1 < config.gamma1 && drive.omega2 < config.gamma2;
  }
  return false;
}

Mat build_hamiltonian(const AtomConfig& config, const DriveParams& drive) {
  validate_drive(drive);
  Mat h(3);

  const cplx half1 =
      -0.5 * drive.omega1 * std::polar(1.0, -drive.phi1);
  const cplx half2 =
      -0.5 * drive.omega2 * std::polar(1.0, -drive.phi2);
  h(config.m - 1, config.n - 1) = half1;
  h(config.n - 1, config.m - 1) = std::conj(half1);
  h(config.l - 1, config.k - 1) += half2;
  h(config.k - 1, config.l - 1) += std::conj(half2);

  // Rotating-frame level shifts. The frame co-rotates with the fields, so
  // only detunings survive on the diagonal; which level carries which
  // combination follows from the transition layout of the arrangement.
  switch (config.kind) {
    case ConfigKind::Xi:
      h(1, 1) += -drive.delta1;
      h(2, 2) += -drive.delta1 - drive.delta2;
      break;
    case ConfigKind::Lambda:
      h(1, 1) += -drive.delta1 + drive.delta2;
      h(2, 2) += -drive.delta1;
      break;
    case ConfigKind::V:
      h(1, 1) += -drive.delta2;
      h(2, 2) += -drive.delta1;
      break;
  }
  return h;
}

Mat relaxation_matrix(const AtomConfig& config) {
  Mat g(3);
  g(1, 1) = config.gamma1;
  g(2, 2) = config.gamma2;
  return g;
}

Mat liouville_rhs(const Mat& rho, const Mat& hamiltonian,
                  const Mat& relaxation) {
  const Mat comm = hamiltonian * rho - rho * hamiltonian;
  const Mat anti = relaxation * rho + rho * relaxation;
  return cplx(0.0, -1.0) * comm - 0.5 * anti;
}

Trajectory evolve(const AtomConfig& config, const DriveParams& drive,
                  double t_end, const EvolveOptions& options) {
  validate_drive(drive);
  if (!(t_end > 0.0) || !std::isfinite(t_end))
    throw std::invalid_argument("evolve: t_end must be positive and finite");
  if (!(options.dt > 0.0) || options.dt > tol::kMaxDt) {
    std::ostringstream os;
    os << "evolve: dt must lie in (0, " << tol::kMaxDt << "], got "
       << options.dt;
    throw std::invalid_argument(os.str());
  }
  if (!(options.output_stride > 0.0))
    throw std::invalid_argument("evolve: output_stride must be positive");

  const double dt = options.dt;
  long long total = std::llround(t_end / dt);
  if (total < 1) total = 1;
  long long every = std::llround(options.output_stride / dt);
  if (every < 1) every = 1;
  if (every > total) every = total;

  const Mat h = build_hamiltonian(config, drive);
  const Mat g = relaxation_matrix(config);

  Mat rho(3);
  rho(0, 0) = 1.0;

  Trajectory traj;
  traj.spa_valid = spa_satisfied(config, drive);
  traj.times.reserve(static_cast<size_t>(total / every) + 2);
  traj.states.reserve(static_cast<size_t>(total / every) + 2);
  traj.times.push_back(0.0);
  traj.states.push_back(rho);

  double prev_trace = 1.0;
  for (long long step = 1; step <= total; ++step) {
    const Mat k1 = liouville_rhs(rho, h, g);
    const Mat k2 = liouville_rhs(rho + (0.5 * dt) * k1, h, g);
    const Mat k3 = liouville_rhs(rho + (0.5 * dt) * k2, h, g);
    const Mat k4 = liouville_rhs(rho + dt * k3, h, g);
    rho += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    rho = 0.5 * (rho + adjoint(rho));

    if (step % every == 0 || step == total) {
      const double t = static_cast<double>(step) * dt;
      const auto eigs = hermitian_eigenvalues(rho);
      if (eigs[2] < tol::kStateEigenAbort) {
        std::ostringstream os;
        os << "evolve: state left the physical set at t = " << t
           << " (eigenvalue " << eigs[2] << ")";
        throw NumericalError(os.str());
      }
      const double tr = trace(rho).real();
      if (tr > prev_trace + tol::kTraceRise) {
        std::ostringstream os;
        os << "evolve: trace grew from " << prev_trace << " to " << tr
           << " at t = " << t;
        throw NumericalError(os.str());
      }
      prev_trace = tr;
      traj.times.push_back(t);
      traj.states.push_back(rho);
    }
  }
  return traj;
}

}  // namespace tricorr
