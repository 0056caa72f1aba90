// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// Landau levels in the symmetric gauge (hbar = m = eB/c = 1) on the two-mode
// space H_1 (x) H_2, and the deformed non-self-adjoint Hamiltonians built
// from the two Gaussian families:
//
//   Q1 = p_x + y/2,  P1 = p_y - x/2,  Q2 = p_y + x/2,  P2 = p_x - y/2
//   A_k = (Q_k + i P_k)/sqrt(2),  H_k = A_k^dagger A_k + 1/2
//   h_1(alpha) = B_1(alpha) A_1(alpha) + 1/2   (GaussLowering on factor 1)
//   h_2(beta)  = B_2(beta)  A_2(beta)  + 1/2   (GaussRaising on factor 2)
//
// One-mode operators are lifted by tensoring with the identity on the other
// factor. Composite operators are dense (D^2 x D^2), so they are only built
// on demand.

#pragma once

#include "pbfock/pairs.hpp"

#include <vector>

namespace pbfock {

struct QuadratureFrame {
  FockOperator Q1, P1, Q2, P2;

  FockOperator x() const { return Q2 - P1; }
  FockOperator y() const { return Q1 - P2; }
  FockOperator px() const { return 0.5 * (Q1 + P2); }
  FockOperator py() const { return 0.5 * (Q2 + P1); }
};

QuadratureFrame build_quadratures(const FockSpace& space);

// H_k on the two-mode space, k in {1, 2}.
FockOperator hamiltonian(const FockSpace& space, int k);

// Lift a one-mode operator onto factor k of the two-mode space.
FockOperator lift(const FockOperator& mode_op, int k);

// Permute the tensor factors: (X (x) Y) -> (Y (x) X).
FockOperator swap_factors(const FockOperator& op);

class LandauModel {
public:
  LandauModel(Index per_factor_dim, Complex alpha, Complex beta);

  Index per_factor_dim() const { return mode_space_.dim(); }
  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  const FockSpace& mode_space() const { return mode_space_; }
  const FockSpace& space() const { return space_; }

  // k = 1: GaussLowering(alpha); k = 2: GaussRaising(beta). Both on the one-mode space.
  const PseudoBosonPair& pair(int k) const;
  FockOperator lifted_A(int k) const { return lift(pair(k).A, k); }
  FockOperator lifted_B(int k) const { return lift(pair(k).B, k); }

private:
  FockSpace mode_space_;
  FockSpace space_;
  Complex alpha_;
  Complex beta_;
  PseudoBosonPair pair1_;
  PseudoBosonPair pair2_;
};

// B A + 1/2 on one mode.
FockOperator deformed_hamiltonian(const PseudoBosonPair& pair);
// h_which lifted onto the two-mode space.
FockOperator deformed_hamiltonian(const LandauModel& model, int which);

// Interior defect between B A + 1/2 and its quadratic form in (Q_k, P_k).
// The squared quadratures carry trust margin 2, so margin must be >= 2.
double coordinate_form_defect(const LandauModel& model, int which, Index margin);

// ||h v - lambda v|| / ||v||
double eigen_residual(const FockOperator& h, const FockVector& v, double eigenvalue);

// X = (A_1 + A_2)/sqrt(2), Y = (B_1 + B_2)/sqrt(2) on the two-mode space.
struct SingleIndexPair {
  FockOperator X;
  FockOperator Y;
};

SingleIndexPair single_index_pair(const LandauModel& model);

struct CounterexampleResult {
  double max_overlap = 0.0;        // max_n |<f, eta_n>|
  double f_norm = 0.0;
  std::vector<double> overlaps;    // |<f, eta_n>|, n = 0..n_max
};

// eta_n = Y^n phi_{0,0}/sqrt(n!) against
// f = Psi_1 (x) Psi_0 - Psi_0 (x) Psi_1 (one-mode families of each factor).
CounterexampleResult single_index_counterexample(const LandauModel& model, Index n_max);

struct TwoIndexSystem {
  Index n_max = 0;
  Index m_max = 0;
  BiorthogonalSystem system;   // flattened with index n*(m_max+1) + m

  Index flat(Index n, Index m) const { return n * (m_max + 1) + m; }
  const FockVector& phi(Index n, Index m) const { return system.phis[static_cast<std::size_t>(flat(n, m))]; }
  const FockVector& psi(Index n, Index m) const { return system.psis[static_cast<std::size_t>(flat(n, m))]; }
};

// phi_{n,m} = B_1^n B_2^m phi_{0,0}/sqrt(n! m!), Psi_{n,m} = A_1^dagger^n A_2^dagger^m Psi_{0,0}/sqrt(n! m!),
// built with the lifted two-mode operators.
TwoIndexSystem two_index_family(const LandauModel& model, Index n_max, Index m_max);

// max entrywise |phi_{n,m} - phi_n (x) phi_m| (and the Psi analogue) against one-mode closed forms.
double factorization_defect(const LandauModel& model, const TwoIndexSystem& family);

} // namespace pbfock
