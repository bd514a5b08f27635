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

#include <cmath>
#include <numbers>

#include "tricorr/atom.hpp"
#include "tricorr/errors.hpp"

using namespace tricorr;

namespace {

constexpr double kPi = std::numbers::pi;

Mat swap_23(const Mat& rho) {
  Mat out(3);
  const int perm[3] = {0, 2, 1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(perm[i], perm[j]) = rho(i, j);
  return out;
}

}  // namespace

TEST_CASE("canonical configurations and overrides") {
  const AtomConfig xi = make_config(ConfigKind::Xi);
  CHECK(xi.m == 2);
  CHECK(xi.n == 1);
  CHECK(xi.l == 3);
  CHECK(xi.k == 2);
  CHECK(xi.gamma1 == 6.0);
  CHECK(xi.gamma2 == 1.0);

  const AtomConfig lambda = make_config(ConfigKind::Lambda);
  CHECK(lambda.m == 3);
  CHECK(lambda.n == 1);
  CHECK(lambda.l == 3);
  CHECK(lambda.k == 2);
  CHECK(lambda.gamma1 == 1.0);
  CHECK(lambda.gamma2 == 6.0);

  const AtomConfig v = make_config(ConfigKind::V);
  CHECK(v.m == 3);
  CHECK(v.n == 1);
  CHECK(v.l == 2);
  CHECK(v.k == 1);
  CHECK(v.gamma1 == 6.0);
  CHECK(v.gamma2 == 6.0);

  const AtomConfig custom = make_config(ConfigKind::Xi, 2.5, 0.75);
  CHECK(custom.gamma1 == 2.5);
  CHECK(custom.gamma2 == 0.75);
  CHECK_THROWS_AS(make_config(ConfigKind::Xi, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_config(ConfigKind::Xi, std::nullopt, -1.0),
                  std::invalid_argument);
}

TEST_CASE("single-photon regime predicate") {
  DriveParams d;
  d.omega1 = 2.0;
  d.omega2 = 100.0;  // irrelevant for the ladder and folded arrangements
  CHECK(spa_satisfied(make_config(ConfigKind::Xi), d));
  d.omega1 = 6.5;
  CHECK_FALSE(spa_satisfied(make_config(ConfigKind::Xi), d));

  d.omega1 = 4.0;
  CHECK(spa_satisfied(make_config(ConfigKind::Lambda), d));
  d.omega1 = 6.0;
  CHECK_FALSE(spa_satisfied(make_config(ConfigKind::Lambda), d));

  d.omega1 = 2.0;
  d.omega2 = 4.0;
  CHECK(spa_satisfied(make_config(ConfigKind::V), d));
  d.omega2 = 7.0;
  CHECK_FALSE(spa_satisfied(make_config(ConfigKind::V), d));

  d.omega1 = -1.0;
  CHECK_THROWS_AS(spa_satisfied(make_config(ConfigKind::V), d),
                  std::invalid_argument);
}

TEST_CASE("ladder Hamiltonian entries") {
  DriveParams d;
  d.omega1 = 2.0;
  d.omega2 = 4.0;
  d.delta1 = 0.3;
  d.delta2 = 0.5;
  const Mat h = build_hamiltonian(make_config(ConfigKind::Xi), d);

  CHECK(h(1, 0) == cplx(-1.0));  // -(omega1/2) at zero phase
  CHECK(h(0, 1) == cplx(-1.0));
  CHECK(h(2, 1) == cplx(-2.0));  // -(omega2/2)
  CHECK(h(1, 2) == cplx(-2.0));
  CHECK(h(2, 0) == cplx(0.0));
  CHECK(h(0, 0) == cplx(0.0));
  CHECK(h(1, 1) == cplx(-0.3));
  CHECK(h(2, 2) == cplx(-0.8));
  CHECK(hermiticity_defect(h) == 0.0);
}

TEST_CASE("drive phases rotate the couplings") {
  DriveParams d;
  d.omega1 = 2.0;
  d.phi1 = kPi / 2.0;
  const Mat h = build_hamiltonian(make_config(ConfigKind::Xi), d);
  // -(omega1/2) e^{-i pi/2} = +i for omega1 = 2
  CHECK(std::abs(h(1, 0) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(h(0, 1) - cplx(0.0, -1.0)) < 1e-15);
}

TEST_CASE("folded and vee diagonal shifts") {
  DriveParams d;
  d.delta1 = 0.3;
  d.delta2 = 0.5;
  const Mat hl = build_hamiltonian(make_config(ConfigKind::Lambda), d);
  CHECK(hl(1, 1) == cplx(0.2));  // -delta1 + delta2
  CHECK(hl(2, 2) == cplx(-0.3));

  const Mat hv = build_hamiltonian(make_config(ConfigKind::V), d);
  CHECK(hv(1, 1) == cplx(-0.5));  // -delta2 on the field-two level
  CHECK(hv(2, 2) == cplx(-0.3));
}

TEST_CASE("vee couplings drive both transitions from the ground level") {
  DriveParams d;
  d.omega1 = 3.0;
  d.omega2 = 5.0;
  const Mat h = build_hamiltonian(make_config(ConfigKind::V), d);
  CHECK(h(2, 0) == cplx(-1.5));
  CHECK(h(1, 0) == cplx(-2.5));
  CHECK(h(2, 1) == cplx(0.0));
}

TEST_CASE("equation of motion on the initial state") {
  DriveParams d;
  d.omega1 = 2.0;
  const AtomConfig cfg = make_config(ConfigKind::Xi);
  Mat rho(3);
  rho(0, 0) = 1.0;

  const Mat rhs =
      liouville_rhs(rho, build_hamiltonian(cfg, d), relaxation_matrix(cfg));
  // -i [H, |1><1|] feeds coherence into the driven transition
  CHECK(std::abs(rhs(1, 0) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(std::abs(rhs(0, 1) - cplx(0.0, -1.0)) < 1e-15);
  CHECK(std::abs(rhs(0, 0)) < 1e-15);
  // population loss is -gamma1 rho22 - gamma2 rho33 = 0 here
  CHECK(std::abs(trace(rhs)) < 1e-15);
}

TEST_CASE("trace drain equals the decayed population") {
  const AtomConfig cfg = make_config(ConfigKind::Lambda);
  DriveParams d;
  d.omega1 = 1.0;
  Mat rho(3);
  rho(0, 0) = 0.5;
  rho(1, 1) = 0.3;
  rho(2, 2) = 0.2;
  rho(0, 2) = cplx(0.1, 0.05);
  rho(2, 0) = std::conj(rho(0, 2));

  const Mat rhs =
      liouville_rhs(rho, build_hamiltonian(cfg, d), relaxation_matrix(cfg));
  const double expected = -(cfg.gamma1 * 0.3 + cfg.gamma2 * 0.2);
  CHECK(trace(rhs).real() == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("decay-free ladder reproduces the two-level Rabi law") {
  // gamma cannot be zero, so suppress it far below every other scale.
  const AtomConfig cfg = make_config(ConfigKind::Xi, 1e-12, 1e-12);
  DriveParams d;
  d.omega1 = 2.0;

  const Trajectory traj = evolve(cfg, d, kPi, {1e-3, 1e-2});
  double worst = 0.0;
  for (size_t i = 0; i < traj.times.size(); ++i) {
    const double expected = std::pow(std::sin(0.5 * d.omega1 * traj.times[i]), 2);
    worst = std::max(worst,
                     std::abs(traj.states[i](1, 1).real() - expected));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("undriven atom in the ground level is stationary") {
  for (ConfigKind kind : {ConfigKind::Xi, ConfigKind::Lambda, ConfigKind::V}) {
    const Trajectory traj = evolve(make_config(kind), DriveParams{}, 1.0);
    Mat initial(3);
    initial(0, 0) = 1.0;
    for (const Mat& state : traj.states)
      CHECK(max_abs_diff(state, initial) < 1e-12);
  }
}

TEST_CASE("driven evolution loses trace monotonically") {
  DriveParams d;
  d.omega1 = 2.0;
  d.omega2 = 1.0;
  const Trajectory traj = evolve(make_config(ConfigKind::Xi), d, 3.0);

  double prev = 1.0;
  for (size_t i = 1; i < traj.states.size(); ++i) {
    const double tr = trace(traj.states[i]).real();
    CHECK(tr < prev + 1e-12);
    CHECK(tr > 0.0);
    prev = tr;
  }
  CHECK(prev < 0.3);  // most of the population has decayed away by t = 3
}

TEST_CASE("suppressed decay preserves trace and purity") {
  const AtomConfig cfg = make_config(ConfigKind::Xi, 1e-12, 1e-12);
  DriveParams d;
  d.omega1 = 2.0;
  d.omega2 = 3.0;
  d.delta1 = 0.4;

  const Trajectory traj = evolve(cfg, d, 2.0);
  for (const Mat& state : traj.states) {
    CHECK(std::abs(trace(state).real() - 1.0) < 1e-9);
    CHECK(std::abs(trace(state * state).real() - 1.0) < 1e-9);
  }
}

TEST_CASE("vee arrangement is symmetric under swapping the two fields") {
  DriveParams d;
  d.omega1 = 2.0;
  d.omega2 = 4.0;
  d.delta1 = 0.2;
  d.delta2 = -0.1;
  DriveParams swapped;
  swapped.omega1 = d.omega2;
  swapped.omega2 = d.omega1;
  swapped.delta1 = d.delta2;
  swapped.delta2 = d.delta1;

  // Both decay rates are equal, so exchanging the fields only relabels the
  // excited levels 2 <-> 3.
  const AtomConfig cfg = make_config(ConfigKind::V);
  const Trajectory a = evolve(cfg, d, 1.5);
  const Trajectory b = evolve(cfg, swapped, 1.5);
  REQUIRE(a.states.size() == b.states.size());
  for (size_t i = 0; i < a.states.size(); ++i)
    CHECK(max_abs_diff(a.states[i], swap_23(b.states[i])) < 1e-12);
}

TEST_CASE("evolution option validation") {
  const AtomConfig cfg = make_config(ConfigKind::Xi);
  DriveParams d;
  d.omega1 = 1.0;
  CHECK_THROWS_AS(evolve(cfg, d, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(evolve(cfg, d, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(evolve(cfg, d, 1.0, {0.0, 1e-2}), std::invalid_argument);
  CHECK_THROWS_AS(evolve(cfg, d, 1.0, {2e-2, 1e-2}), std::invalid_argument);
  CHECK_THROWS_AS(evolve(cfg, d, 1.0, {1e-3, 0.0}), std::invalid_argument);
}

TEST_CASE("an unstable step size aborts with a numerical error") {
  DriveParams d;
  d.omega1 = 300.0;  // omega * dt = 3 is far outside the stability region
  CHECK_THROWS_AS(evolve(make_config(ConfigKind::Xi), d, 1.0, {1e-2, 1e-2}),
                  NumericalError);
}

TEST_CASE("sampling grid covers start, stride multiples and the endpoint") {
  DriveParams d;
  d.omega1 = 1.0;
  const Trajectory traj =
      evolve(make_config(ConfigKind::Xi), d, 0.25, {1e-3, 0.1});
  REQUIRE(traj.times.size() == 4);
  CHECK(traj.times[0] == 0.0);
  CHECK(traj.times[1] == doctest::Approx(0.1));
  CHECK(traj.times[2] == doctest::Approx(0.2));
  CHECK(traj.times[3] == doctest::Approx(0.25));
  CHECK(traj.spa_valid);
}
