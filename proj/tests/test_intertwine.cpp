// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/intertwine.hpp"

#include <catch_amalgamated.hpp>

using namespace pbfock;
using Catch::Matchers::WithinRel;

namespace {

struct Fixture {
  FockSpace space{96};
  DeformationFamily family{FamilyKind::GaussLowering, 0.3};
  PseudoBosonPair pair = build_pair(family, space);
  BiorthogonalSystem system = build_system(family, space, 24);
  FrameOperator s_phi = frame_operator(system, FrameSide::Phi, 24);
  FrameOperator s_psi = frame_operator(system, FrameSide::Psi, 24);
};

const Fixture& fixture() {
  static const Fixture f;
  return f;
}

} // namespace

TEST_CASE("frame operators are Hermitian and positive") {
  const Fixture& f = fixture();
  CHECK(f.s_phi.hermiticity_defect() <= 1e-12);
  CHECK(f.s_psi.hermiticity_defect() <= 1e-12);
  CHECK(f.s_phi.min_eigenvalue() >= -1e-10);
  CHECK(f.s_psi.min_eigenvalue() >= -1e-10);
}

TEST_CASE("frames map one family onto the other") {
  const Fixture& f = fixture();
  for (Index n = 0; n <= 12; ++n) {
    const FrameActionResidual r = frame_action_check(f.s_phi, f.s_psi, f.system, n);
    CHECK(r.phi_from_psi <= 1e-9);
    CHECK(r.psi_from_phi <= 1e-9);
    CHECK(r.round_trip <= 1e-9 * norm(f.system.psis[static_cast<std::size_t>(n)]) * f.s_phi.max_eigenvalue());
  }
  CHECK_THROWS_AS(frame_action_check(f.s_phi, f.s_psi, f.system, 25), std::out_of_range);
  CHECK_THROWS_AS(frame_action_check(f.s_psi, f.s_phi, f.system, 0), std::invalid_argument);
}

TEST_CASE("frames intertwine N and its adjoint") {
  const Fixture& f = fixture();
  for (Index n = 0; n <= 12; ++n) {
    const IntertwiningResidual r = intertwining_check(f.s_phi, f.s_psi, f.system, f.pair, n);
    CHECK(r.psi_frame <= 1e-9);
    CHECK(r.phi_frame <= 1e-9);
  }
  CHECK_THROWS_AS(intertwining_check(f.s_phi, f.s_psi, f.system, f.pair, 24), std::out_of_range);
}

TEST_CASE("number operators have the expected eigenvectors") {
  const Fixture& f = fixture();
  for (Index n = 0; n <= 16; ++n) {
    CHECK(number_eigen_residual(f.pair, f.system, n) <= 1e-10);
    CHECK(dual_number_eigen_residual(f.pair, f.system, n) <= 1e-8);
  }
}

TEST_CASE("resolution of the identity on finite-support probes") {
  const Fixture& f = fixture();
  for (Index s = 0; s <= 8; ++s) {
    const ResolutionResidual r = resolution_check(f.system, basis_state(f.space, s), 24);
    CHECK(r.phi_side <= 1e-9);
  }
}

TEST_CASE("largest frame eigenvalue grows with the order") {
  // frozen oracle values of lambda_max(S_phi^(N)) at alpha = 0.3, D = 96
  const Fixture& f = fixture();
  const std::vector<Index> orders{4, 8, 12, 16, 20, 24};
  const std::vector<double> expected{2.97214, 14.70005, 80.8205, 465.696, 2756.53, 16604.49};
  const std::vector<double> got = frame_growth(f.system, FrameSide::Phi, orders);
  REQUIRE(got.size() == expected.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK_THAT(got[i], WithinRel(expected[i], 1e-5));
  CHECK(got.back() / got.front() >= 10.0);
}

TEST_CASE("undeformed frames are the truncated identity") {
  const FockSpace s(20);
  const BiorthogonalSystem sys = build_system({FamilyKind::GaussRaising, 0.0}, s, 8);
  const FrameOperator s_phi = frame_operator(sys, FrameSide::Phi, 8);
  const Eigen::VectorXd ev = s_phi.eigenvalues();
  CHECK(ev(ev.size() - 1) == Catch::Approx(1.0).margin(1e-14));
  CHECK(ev(ev.size() - 9) == Catch::Approx(1.0).margin(1e-14));
  CHECK(ev(ev.size() - 10) == Catch::Approx(0.0).margin(1e-14));
  CHECK_THROWS_AS(frame_operator(sys, FrameSide::Psi, 9), std::out_of_range);
}

TEST_CASE("factor spectrum agrees with the dense eigensolve") {
  const Fixture& f = fixture();
  for (const FrameOperator* s : {&f.s_phi, &f.s_psi}) {
    const Eigen::VectorXd a = s->eigenvalues(), b = s->dense_eigenvalues();
    const double scale = a(a.size() - 1);
    CHECK((a - b).cwiseAbs().maxCoeff() <= 1e-13 * scale);
    CHECK(a.minCoeff() >= 0.0);
  }
}
