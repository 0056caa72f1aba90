// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// The two Gaussian deformation families of pseudo-bosonic ladder pairs and
// their biorthonormal eigenfamilies.
//
//   GaussLowering(alpha):  A = a,               B = a^dagger + 2 alpha a,   U = exp(alpha a^2)
//   GaussRaising(beta):    A = a - 2 beta a^dagger,  B = a^dagger,          U = exp(beta a^dagger^2)
//
// In both cases phi_n = U Phi_n and Psi_n = (U^dagger)^{-1} Phi_n. One side is
// a finite sum in the number basis, the other an infinite series that only
// converges for |parameter| < 1/2:
//
//   family          finite side            series side
//   GaussLowering   phi_n (support <= n)   Psi_n (support n, n+2, ...)
//   GaussRaising    Psi_n (support <= n)   phi_n (support n, n+2, ...)
//
// Series vectors are truncated at D and carry a certified tail bound.

#pragma once

#include "pbfock/fock.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace pbfock {

enum class FamilyKind { GaussLowering, GaussRaising };

std::string to_string(FamilyKind kind);

struct DeformationFamily {
  FamilyKind kind = FamilyKind::GaussLowering;
  Complex parameter{0.0, 0.0};

  bool operator==(const DeformationFamily&) const = default;
};

// Thrown when a series-side construction is requested outside |p| < 1/2.
// Carries the ratio-test evidence: the term ratio of the norm series tends to 4|p|^2.
class SeriesDivergence : public std::domain_error {
public:
  SeriesDivergence(const std::string& what, double abs_parameter)
      : std::domain_error(what), abs_parameter_(abs_parameter) {}
  double abs_parameter() const { return abs_parameter_; }
  double limit_ratio() const { return 4.0 * abs_parameter_ * abs_parameter_; }

private:
  double abs_parameter_;
};

struct PseudoBosonPair {
  DeformationFamily family;
  FockOperator A;
  FockOperator B;

  const FockSpace& space() const { return A.space(); }
  // N = B A and its adjoint
  FockOperator number() const { return compose(B, A); }
  FockOperator dual_number() const { return adjoint(number()); }
};

PseudoBosonPair build_pair(const DeformationFamily& family, const FockSpace& space);

// phi_n = B^n phi_0 / sqrt(n!), n = 0..n_max, by repeated application of B.
std::vector<FockVector> phi_ladder(const PseudoBosonPair& pair, Index n_max);

// phi_n = U Phi_n summed directly.
FockVector phi_closed_form(const DeformationFamily& family, Index n, const FockSpace& space);

// Psi_n = (U^dagger)^{-1} Phi_n summed directly.
FockVector psi_series(const DeformationFamily& family, Index n, const FockSpace& space);

// Bound on the squared norm of the discarded tail of the family's series-side
// vector with index n. Throws when the truncation has not reached the
// geometric regime of the norm series.
double series_tail_bound(const DeformationFamily& family, Index n, const FockSpace& space);

struct BiorthogonalSystem {
  std::vector<FockVector> phis;
  std::vector<FockVector> psis;
  Matrix pairing;              // pairing(n, m) = <Psi_n, phi_m>
  std::vector<double> omega;   // ||phi_n|| * ||Psi_n||

  Index size() const { return static_cast<Index>(phis.size()); }
  double max_pairing_defect() const;
};

BiorthogonalSystem pairing_matrix(std::vector<FockVector> phis, std::vector<FockVector> psis);
BiorthogonalSystem pairing_matrix(const DeformationFamily& phi_family, std::vector<FockVector> phis,
                                  const DeformationFamily& psi_family, std::vector<FockVector> psis);

// phi_0..phi_{n_max} from the ladder and Psi_0..Psi_{n_max} from their series.
BiorthogonalSystem build_system(const DeformationFamily& family, const FockSpace& space, Index n_max);

// Phi:  sum_{n <= order} <Psi_n, v> phi_n
// Psi:  sum_{n <= order} <phi_n, v> Psi_n
// For a finite-support v one of the two is a finite expansion and reproduces v
// once order reaches the support (Phi for GaussLowering, Psi for GaussRaising).
enum class ExpansionSide { Phi, Psi };

FockVector expand_in_family(const BiorthogonalSystem& system, const FockVector& v, Index order, ExpansionSide side);

struct AssumptionReport {
  // vacuum of A: ||A phi_0|| on rows below the boundary, and ||B^n phi_0|| for n <= n_max
  double vacuum_residual = 0.0;
  std::vector<double> ladder_norms;
  bool ladder_finite = true;
  // vacuum of B^dagger: ||B^dagger Psi_0|| on rows below the boundary, ||(A^dagger)^n Psi_0||
  double dual_vacuum_residual = 0.0;
  std::vector<double> dual_ladder_norms;
  bool dual_ladder_finite = true;
  // completeness evidence on finite-support probes, using the finite expansion side
  double reconstruction_residual = 0.0;
  // Riesz diagnostic: a Riesz pair keeps omega_n bounded
  std::vector<double> omega;
  bool omega_nondecreasing = true;   // omega_{n+2} >= omega_n up to rounding
  double omega_growth = 1.0;         // omega_{n_max} / omega_0
  bool riesz_failure_evidence = false;
};

AssumptionReport assumption_report(const DeformationFamily& family, const FockSpace& space, Index n_max);

struct RadiusClassification {
  Complex parameter;
  bool convergent = false;
  double limit_ratio = 0.0;           // 4|p|^2
  std::optional<Index> blow_up_index; // first k whose partial sum passes the threshold
};

struct RadiusScanOptions {
  double blow_up_threshold = 1e12;
  Index max_terms = 200000;
};

std::vector<RadiusClassification> radius_scan(const DeformationFamily& family, Index n, const std::vector<Complex>& parameters,
                                              const RadiusScanOptions& options = {});

} // namespace pbfock
