// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/pairs.hpp"
#include "pbfock/series.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

using namespace pbfock;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const DeformationFamily lowering(double a) { return {FamilyKind::GaussLowering, a}; }
const DeformationFamily raising(double b) { return {FamilyKind::GaussRaising, b}; }

// sum_{k<=K} C(2k,k)/4^k = (2K+1) C(2K,K)/4^K, evaluated by plain recursion of the ratio
double central_binomial_partial_sum(int K) {
  double term = 1.0;  // C(2k,k)/4^k
  for (int k = 0; k < K; ++k) term *= (2.0 * k + 1.0) / (2.0 * k + 2.0);
  return (2.0 * K + 1.0) * term;
}

} // namespace

TEST_CASE("both families satisfy the canonical commutator") {
  const FockSpace s(64);
  for (double p : {0.0, 0.15, 0.3, 0.45}) {
    for (const auto& fam : {lowering(p), raising(p)}) {
      const PseudoBosonPair pair = build_pair(fam, s);
      CHECK(interior_defect(commutator(pair.A, pair.B), FockOperator::identity(s), 2) <= 1e-12);
    }
  }
}

TEST_CASE("adjointness fails exactly when the parameter is nonzero") {
  const FockSpace s(16);
  CHECK(max_entry_diff(adjoint(build_pair(lowering(0.0), s).A), build_pair(lowering(0.0), s).B) == 0.0);
  const PseudoBosonPair p = build_pair(lowering(0.3), s);
  // B - A^dagger = 2 alpha a, largest entry sqrt(D-1)
  CHECK_THAT(max_entry_diff(adjoint(p.A), p.B), WithinRel(0.6 * std::sqrt(15.0), 1e-14));
}

TEST_CASE("dual vacuum of GaussLowering(0.3) matches the independent oracle") {
  // frozen from an mpmath evaluation of sum_k (-alpha)^k/k! sqrt((2k)!) Phi_{2k}
  const FockSpace s(96);
  const FockVector psi0 = psi_series(lowering(0.3), 0, s);
  CHECK_THAT(psi0[0].real(), WithinAbs(1.0, 1e-15));
  CHECK_THAT(psi0[2].real(), WithinRel(-0.42426406871192851, 1e-14));
  CHECK_THAT(psi0[4].real(), WithinRel(0.22045407685048602, 1e-14));
  CHECK(psi0[1] == Complex(0.0));
  // ||Psi_0||^2 = (1 - 4 alpha^2)^{-1/2} = 1.25
  const double n2 = norm(psi0) * norm(psi0);
  CHECK(std::abs(n2 - 1.25) <= psi0.tail_bound() * psi0.tail_bound() + 1e-14);
}

TEST_CASE("ladder agrees with the closed form") {
  const FockSpace s(40);
  for (const auto& fam : {lowering(0.3), raising(0.2), lowering(-0.1), DeformationFamily{FamilyKind::GaussRaising, {0.1, 0.25}}}) {
    const auto ladder = phi_ladder(build_pair(fam, s), 12);
    for (Index n = 0; n <= 12; ++n) {
      const FockVector closed = phi_closed_form(fam, n, s);
      CHECK((ladder[static_cast<std::size_t>(n)].coeffs() - closed.coeffs()).cwiseAbs().maxCoeff() <= 1e-10 * norm(closed));
    }
  }
  CHECK_THROWS_AS(phi_ladder(build_pair(lowering(0.3), s), 39), std::out_of_range);
}

TEST_CASE("biorthonormality of both one-mode families") {
  const FockSpace s(96);
  CHECK(build_system(lowering(0.3), s, 16).max_pairing_defect() <= 1e-10);
  CHECK(build_system(raising(0.2), s, 16).max_pairing_defect() <= 1e-10);
  CHECK(build_system(DeformationFamily{FamilyKind::GaussLowering, {0.0, 0.35}}, s, 16).max_pairing_defect() <= 1e-10);
}

TEST_CASE("pairing rejects mixed families") {
  const FockSpace s(20);
  std::vector<FockVector> phis{phi_closed_form(lowering(0.3), 0, s)};
  std::vector<FockVector> psis{psi_series(lowering(0.2), 0, s)};
  CHECK_THROWS_AS(pairing_matrix(lowering(0.3), phis, lowering(0.2), psis), std::invalid_argument);
}

TEST_CASE("series outside the disk is refused with ratio evidence") {
  const FockSpace s(64);
  try {
    psi_series(lowering(0.6), 0, s);
    FAIL("expected SeriesDivergence");
  } catch (const SeriesDivergence& e) {
    CHECK_THAT(e.limit_ratio(), WithinRel(1.44, 1e-14));
    CHECK(std::string(e.what()).find("1/2") != std::string::npos);
  }
  CHECK_THROWS_AS(phi_closed_form(raising(0.5), 0, s), SeriesDivergence);
  CHECK_NOTHROW(phi_closed_form(lowering(0.6), 3, s));
  CHECK_THROWS_AS(build_pair(lowering(std::nan("")), s), std::invalid_argument);
}

TEST_CASE("tail certificates") {
  // n = 24 at D = 96 keeps k <= 35; the ratio at k = 36 is 0.09*97*98/37^2 < 1
  const FockSpace s(96);
  const double t = series_tail_bound(lowering(0.3), 24, s);
  const double n2 = std::pow(norm(psi_series(lowering(0.3), 24, s)), 2);
  CHECK(t > 0.0);
  CHECK(t < 1e-2 * n2);
  // for n >= 1 the ratio starts above 1 near the disk edge, so a short truncation is not certified
  CHECK_THROWS_AS(series_tail_bound(lowering(0.49), 5, FockSpace(8)), std::domain_error);
  CHECK_NOTHROW(series_tail_bound(lowering(0.49), 0, FockSpace(8)));
}

TEST_CASE("property: tail bound dominates the observed truncation error") {
  // Compare D = 40 truncations with a D = 200 reference at several parameters.
  const FockSpace small(40), large(200);
  for (double p : {0.1, 0.25, 0.35, 0.4}) {
    for (Index n : {0, 1, 5}) {
      const FockVector a = psi_series(lowering(p), n, small);
      const FockVector b = psi_series(lowering(p), n, large);
      const double na = norm(a), nb = norm(b);
      CHECK(std::abs(nb * nb - na * na) <= a.tail_bound() * a.tail_bound() * (1.0 + 1e-9) + 1e-13 * nb * nb);
    }
  }
}

TEST_CASE("log-domain series helpers") {
  CHECK_THAT(series::log_factorial(170), WithinRel(std::lgamma(171.0), 1e-15));
  CHECK(series::power_times(0.0, 0, 0.0) == Complex(1.0));
  CHECK(series::power_times(0.0, 3, 0.0) == Complex(0.0));
  // At |p| = 1/2, n = 0 the terms are C(2k,k)/4^k and the partial sums grow like 2 sqrt(k/pi).
  double log_sum = -INFINITY;
  for (int k = 0; k <= 100; ++k) log_sum = series::log_add(log_sum, series::log_gaussian_term(0.5, 0, k));
  CHECK_THAT(std::exp(log_sum), WithinRel(central_binomial_partial_sum(100), 1e-12));
  CHECK_THAT(std::exp(log_sum), WithinRel(11.33, 2e-3));
}

TEST_CASE("radius scan separates the disk") {
  const auto out = radius_scan(lowering(0.0), 0, {0.3, 0.5, 0.6, Complex(0.0, 1.0)});
  REQUIRE(out.size() == 4);
  CHECK(out[0].convergent);
  CHECK_FALSE(out[0].blow_up_index);
  // boundary: divergent, but the partial sums only grow like sqrt(k)
  CHECK_FALSE(out[1].convergent);
  CHECK_FALSE(out[1].blow_up_index);
  CHECK_FALSE(out[2].convergent);
  REQUIRE(out[2].blow_up_index);
  CHECK_FALSE(out[3].convergent);
  REQUIRE(out[3].blow_up_index);
  CHECK(*out[3].blow_up_index < *out[2].blow_up_index);
}

TEST_CASE("assumption report at alpha = 0.3") {
  const FockSpace s(96);
  const AssumptionReport r = assumption_report(lowering(0.3), s, 24);
  CHECK(r.vacuum_residual <= 1e-14);
  CHECK(r.dual_vacuum_residual <= 1e-12);
  CHECK(r.ladder_finite);
  CHECK(r.dual_ladder_finite);
  CHECK(r.reconstruction_residual <= 1e-9);
  CHECK(r.omega_nondecreasing);
  CHECK(r.riesz_failure_evidence);
  // frozen oracle: omega_0 = sqrt(1.25), omega_24 / omega_0 ~ 2.227464e6
  CHECK_THAT(r.omega.front(), WithinRel(1.11803398875, 1e-10));
  // The oracle value is untruncated; the D = 96 value sits below it by at most the certified tail.
  const double omega_true = 2227464.000141879 * r.omega.front();
  const double phi24 = norm(phi_closed_form(lowering(0.3), 24, s));
  const double gap = omega_true * omega_true - r.omega.back() * r.omega.back();
  CHECK(gap >= -1e-12 * omega_true * omega_true);
  CHECK(gap <= phi24 * phi24 * series_tail_bound(lowering(0.3), 24, s) * (1.0 + 1e-5));

  const AssumptionReport q = assumption_report(raising(0.2), s, 16);
  CHECK(q.reconstruction_residual <= 1e-9);
  CHECK(q.omega_nondecreasing);

  const AssumptionReport z = assumption_report(lowering(0.0), s, 16);
  CHECK_THAT(z.omega_growth, WithinAbs(1.0, 1e-14));
  CHECK_FALSE(z.riesz_failure_evidence);
}

TEST_CASE("expansion of finite-support vectors") {
  const FockSpace s(64);
  const BiorthogonalSystem low = build_system(lowering(0.3), s, 10);
  const BiorthogonalSystem high = build_system(raising(0.2), s, 10);
  for (Index k = 0; k <= 10; ++k) {
    const FockVector e = basis_state(s, k);
    CHECK(norm(e - expand_in_family(low, e, 10, ExpansionSide::Phi)) <= 1e-10);
    CHECK(norm(e - expand_in_family(high, e, 10, ExpansionSide::Psi)) <= 1e-10);
  }
  CHECK_THROWS_AS(expand_in_family(low, basis_state(s, 0), 11, ExpansionSide::Phi), std::out_of_range);
}

TEST_CASE("property: the deformation reduces to the oscillator at zero parameter") {
  const FockSpace s(30);
  for (const auto& fam : {lowering(0.0), raising(0.0)}) {
    const BiorthogonalSystem sys = build_system(fam, s, 10);
    for (Index n = 0; n <= 10; ++n) {
      CHECK(norm(sys.phis[static_cast<std::size_t>(n)] - basis_state(s, n)) <= 1e-13);
      CHECK(norm(sys.psis[static_cast<std::size_t>(n)] - basis_state(s, n)) <= 1e-13);
    }
  }
}
