// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// Truncated frame operators S_phi = sum |phi_n><phi_n|, S_Psi = sum |Psi_n><Psi_n|
// and the identities they satisfy on the span of the family:
//   S_phi Psi_n = phi_n,  S_Psi phi_n = Psi_n,  S_Psi S_phi = 1 on span{Psi_n}
//   S_Psi N = N^dagger S_Psi,  N S_phi = S_phi N^dagger
//
// The partial sums only converge weakly on the whole space, so every check
// acts on family members or finite-support probes where it is exact.

#pragma once

#include "pbfock/pairs.hpp"

#include <vector>

namespace pbfock {

enum class FrameSide { Phi, Psi };

struct FrameOperator {
  FockOperator op;
  Index order = 0;
  FrameSide side = FrameSide::Phi;
  Matrix factor;   // columns are the family vectors, op = factor * factor^H

  double hermiticity_defect() const;
  // Ascending spectrum: squared singular values of the factor, padded with zeros.
  // A dense eigensolve of op has absolute error ~ eps * ||op||, which swamps the
  // zero eigenvalues once the family norms grow.
  Eigen::VectorXd eigenvalues() const;
  Eigen::VectorXd dense_eigenvalues() const;
  double min_eigenvalue() const { return eigenvalues()(0); }
  double max_eigenvalue() const;
};

FrameOperator frame_operator(const BiorthogonalSystem& system, FrameSide side, Index order);

struct FrameActionResidual {
  double phi_from_psi = 0.0;   // ||S_phi Psi_n - phi_n||
  double psi_from_phi = 0.0;   // ||S_Psi phi_n - Psi_n||
  double round_trip = 0.0;     // ||S_Psi S_phi Psi_n - Psi_n||
};

FrameActionResidual frame_action_check(const FrameOperator& s_phi, const FrameOperator& s_psi, const BiorthogonalSystem& system,
                                       Index n);

struct ResolutionResidual {
  double phi_side = 0.0;  // ||v - sum <Psi_n, v> phi_n||
  double psi_side = 0.0;  // ||v - sum <phi_n, v> Psi_n||
};

ResolutionResidual resolution_check(const BiorthogonalSystem& system, const FockVector& probe, Index order);

struct IntertwiningResidual {
  double psi_frame = 0.0;  // ||S_Psi N phi_n - N^dagger S_Psi phi_n||
  double phi_frame = 0.0;  // ||N S_phi Psi_n - S_phi N^dagger Psi_n||
};

// Requires n <= order - 1 so that N phi_n stays inside the truncated family.
IntertwiningResidual intertwining_check(const FrameOperator& s_phi, const FrameOperator& s_psi, const BiorthogonalSystem& system,
                                        const PseudoBosonPair& pair, Index n);

// ||N phi_n - n phi_n|| / ||phi_n||
double number_eigen_residual(const PseudoBosonPair& pair, const BiorthogonalSystem& system, Index n);
// ||N^dagger Psi_n - n Psi_n|| / ||Psi_n||
double dual_number_eigen_residual(const PseudoBosonPair& pair, const BiorthogonalSystem& system, Index n);

// Largest eigenvalue of the truncated S at each requested order.
std::vector<double> frame_growth(const BiorthogonalSystem& system, FrameSide side, const std::vector<Index>& orders);

} // namespace pbfock
