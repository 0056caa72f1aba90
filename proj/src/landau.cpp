// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/landau.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pbfock {

namespace {

const Complex kI{0.0, 1.0};

void require_two_mode(const FockSpace& space, const char* what) {
  if (space.factors() != 2) throw std::invalid_argument(std::string(what) + ": needs the two-mode space");
}

void require_mode_index(int k, const char* what) {
  if (k != 1 && k != 2) throw std::invalid_argument(std::string(what) + ": mode index must be 1 or 2, got " + std::to_string(k));
}

FockVector tensor_in_order(const FockVector& first, const FockVector& second) { return tensor_vec(first, second); }

} // namespace

FockOperator lift(const FockOperator& mode_op, int k) {
  require_mode_index(k, "lift");
  const FockOperator id = FockOperator::identity(mode_op.space());
  return k == 1 ? tensor(mode_op, id) : tensor(id, mode_op);
}

FockOperator swap_factors(const FockOperator& op) {
  require_two_mode(op.space(), "swap_factors");
  const Index d = op.space().dim();
  const Index total = op.space().total_dim();
  Eigen::PermutationMatrix<Eigen::Dynamic, Eigen::Dynamic, Index> perm(total);
  for (Index n = 0; n < d; ++n)
    for (Index m = 0; m < d; ++m) perm.indices()(n * d + m) = m * d + n;
  return FockOperator(op.space(), perm * op.matrix() * perm.transpose(), op.trust_margin());
}

QuadratureFrame build_quadratures(const FockSpace& space) {
  require_two_mode(space, "build_quadratures");
  const FockSpace mode(space.dim());
  const FockOperator a = annihilator(mode);
  const FockOperator ad = creator(mode);
  const double s = 1.0 / std::sqrt(2.0);
  // Q = (A + A^dagger)/sqrt(2), P = (A - A^dagger)/(i sqrt(2))
  const FockOperator q = s * (a + ad);
  const FockOperator p = (-kI * s) * (a - ad);
  return QuadratureFrame{lift(q, 1), lift(p, 1), lift(q, 2), lift(p, 2)};
}

FockOperator hamiltonian(const FockSpace& space, int k) {
  require_two_mode(space, "hamiltonian");
  require_mode_index(k, "hamiltonian");
  const FockSpace mode(space.dim());
  const FockOperator a = annihilator(mode);
  return lift(compose(adjoint(a), a) + 0.5 * FockOperator::identity(mode), k);
}

LandauModel::LandauModel(Index per_factor_dim, Complex alpha, Complex beta)
    : mode_space_(per_factor_dim),
      space_(per_factor_dim, 2),
      alpha_(alpha),
      beta_(beta),
      pair1_(build_pair({FamilyKind::GaussLowering, alpha}, mode_space_)),
      pair2_(build_pair({FamilyKind::GaussRaising, beta}, mode_space_)) {}

const PseudoBosonPair& LandauModel::pair(int k) const {
  require_mode_index(k, "LandauModel::pair");
  return k == 1 ? pair1_ : pair2_;
}

FockOperator deformed_hamiltonian(const PseudoBosonPair& pair) {
  return compose(pair.B, pair.A) + 0.5 * FockOperator::identity(pair.space());
}

FockOperator deformed_hamiltonian(const LandauModel& model, int which) {
  require_mode_index(which, "deformed_hamiltonian");
  return lift(deformed_hamiltonian(model.pair(which)), which);
}

double coordinate_form_defect(const LandauModel& model, int which, Index margin) {
  require_mode_index(which, "coordinate_form_defect");
  if (margin < 2)
    throw std::invalid_argument("coordinate_form_defect: margin " + std::to_string(margin) +
                                " too small for squared quadratures (need >= 2)");
  const QuadratureFrame f = build_quadratures(model.space());
  const FockOperator id = FockOperator::identity(model.space());
  // h_1 = (1/2+a) Q1^2 + (1/2-a) P1^2 + 2ia Q1 P1 + a
  // h_2 = (1/2-b) Q2^2 + (1/2+b) P2^2 + 2ib Q2 P2 + b
  const Complex p = which == 1 ? model.alpha() : model.beta();
  const double sign = which == 1 ? 1.0 : -1.0;
  const FockOperator& q = which == 1 ? f.Q1 : f.Q2;
  const FockOperator& pp = which == 1 ? f.P1 : f.P2;
  const FockOperator form = (0.5 + sign * p) * compose(q, q) + (0.5 - sign * p) * compose(pp, pp) +
                            (2.0 * kI * p) * compose(q, pp) + p * id;
  return interior_defect(deformed_hamiltonian(model, which), form, margin);
}

double eigen_residual(const FockOperator& h, const FockVector& v, double eigenvalue) {
  const double r = norm(apply(h, v) - eigenvalue * v);
  const double s = norm(v);
  return s > 0.0 ? r / s : r;
}

SingleIndexPair single_index_pair(const LandauModel& model) {
  const double s = 1.0 / std::sqrt(2.0);
  return SingleIndexPair{s * (model.lifted_A(1) + model.lifted_A(2)), s * (model.lifted_B(1) + model.lifted_B(2))};
}

CounterexampleResult single_index_counterexample(const LandauModel& model, Index n_max) {
  if (n_max < 0 || n_max > model.per_factor_dim() - 2)
    throw std::out_of_range("single_index_counterexample: n_max outside the trust band");
  const FockSpace& mode = model.mode_space();
  const DeformationFamily f1{FamilyKind::GaussLowering, model.alpha()};
  const DeformationFamily f2{FamilyKind::GaussRaising, model.beta()};

  const FockVector f = tensor_in_order(psi_series(f1, 1, mode), psi_series(f2, 0, mode)) -
                       tensor_in_order(psi_series(f1, 0, mode), psi_series(f2, 1, mode));

  const SingleIndexPair xy = single_index_pair(model);
  FockVector eta = tensor_in_order(phi_closed_form(f1, 0, mode), phi_closed_form(f2, 0, mode));
  CounterexampleResult out;
  out.f_norm = norm(f);
  for (Index n = 0; n <= n_max; ++n) {
    if (n > 0) eta = scale(1.0 / std::sqrt(static_cast<double>(n)), apply(xy.Y, eta));
    out.overlaps.push_back(std::abs(inner(f, eta)));
    out.max_overlap = std::max(out.max_overlap, out.overlaps.back());
  }
  return out;
}

TwoIndexSystem two_index_family(const LandauModel& model, Index n_max, Index m_max) {
  const Index d = model.per_factor_dim();
  if (n_max < 0 || m_max < 0 || n_max > d - 2 || m_max > d - 2)
    throw std::out_of_range("two_index_family: indices outside the trust band");
  const FockSpace& mode = model.mode_space();
  const DeformationFamily f1{FamilyKind::GaussLowering, model.alpha()};
  const DeformationFamily f2{FamilyKind::GaussRaising, model.beta()};

  const FockOperator b1 = model.lifted_B(1), b2 = model.lifted_B(2);
  const FockOperator a1d = adjoint(model.lifted_A(1)), a2d = adjoint(model.lifted_A(2));
  const FockVector phi00 = tensor_in_order(phi_closed_form(f1, 0, mode), phi_closed_form(f2, 0, mode));
  const FockVector psi00 = tensor_in_order(psi_series(f1, 0, mode), psi_series(f2, 0, mode));

  TwoIndexSystem out;
  out.n_max = n_max;
  out.m_max = m_max;
  const auto count = static_cast<std::size_t>((n_max + 1) * (m_max + 1));
  std::vector<FockVector> phis(count, FockVector::zero(model.space()));
  std::vector<FockVector> psis(count, FockVector::zero(model.space()));
  auto slot = [&](Index n, Index m) { return static_cast<std::size_t>(out.flat(n, m)); };

  for (Index m = 0; m <= m_max; ++m) {
    const double sm = 1.0 / std::sqrt(static_cast<double>(std::max<Index>(m, 1)));
    phis[slot(0, m)] = m == 0 ? phi00 : scale(sm, apply(b2, phis[slot(0, m - 1)]));
    psis[slot(0, m)] = m == 0 ? psi00 : scale(sm, apply(a2d, psis[slot(0, m - 1)]));
    for (Index n = 1; n <= n_max; ++n) {
      const double sn = 1.0 / std::sqrt(static_cast<double>(n));
      phis[slot(n, m)] = scale(sn, apply(b1, phis[slot(n - 1, m)]));
      psis[slot(n, m)] = scale(sn, apply(a1d, psis[slot(n - 1, m)]));
    }
  }
  // Each lifted ladder only shifts its factor's truncated coefficients, so the
  // results coincide with tensor products of the one-mode vectors; take their tails.
  for (Index n = 0; n <= n_max; ++n)
    for (Index m = 0; m <= m_max; ++m) {
      const double tphi = tensor_in_order(phi_closed_form(f1, n, mode), phi_closed_form(f2, m, mode)).tail_bound();
      const double tpsi = tensor_in_order(psi_series(f1, n, mode), psi_series(f2, m, mode)).tail_bound();
      phis[slot(n, m)] = phis[slot(n, m)].with_tail_bound(tphi);
      psis[slot(n, m)] = psis[slot(n, m)].with_tail_bound(tpsi);
    }
  out.system = pairing_matrix(std::move(phis), std::move(psis));
  return out;
}

double factorization_defect(const LandauModel& model, const TwoIndexSystem& family) {
  const FockSpace& mode = model.mode_space();
  const DeformationFamily f1{FamilyKind::GaussLowering, model.alpha()};
  const DeformationFamily f2{FamilyKind::GaussRaising, model.beta()};
  double worst = 0.0;
  for (Index n = 0; n <= family.n_max; ++n)
    for (Index m = 0; m <= family.m_max; ++m) {
      const FockVector phi = tensor_in_order(phi_closed_form(f1, n, mode), phi_closed_form(f2, m, mode));
      const FockVector psi = tensor_in_order(psi_series(f1, n, mode), psi_series(f2, m, mode));
      worst = std::max(worst, (family.phi(n, m).coeffs() - phi.coeffs()).cwiseAbs().maxCoeff());
      worst = std::max(worst, (family.psi(n, m).coeffs() - psi.coeffs()).cwiseAbs().maxCoeff());
    }
  return worst;
}

} // namespace pbfock
