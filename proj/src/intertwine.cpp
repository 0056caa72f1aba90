// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/intertwine.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>

#include <stdexcept>
#include <string>

namespace pbfock {

namespace {

void require_member(const BiorthogonalSystem& system, Index n, Index order, const char* what) {
  if (n < 0 || n > order || n >= system.size())
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(n) + " outside the frame order " +
                            std::to_string(order));
}

const FockVector& at(const std::vector<FockVector>& v, Index n) { return v[static_cast<std::size_t>(n)]; }

double relative(double residual, double scale) { return scale > 0.0 ? residual / scale : residual; }

} // namespace

double FrameOperator::hermiticity_defect() const { return max_entry_diff(op, adjoint(op)); }

Eigen::VectorXd FrameOperator::eigenvalues() const {
  const Eigen::VectorXd sv = Eigen::BDCSVD<Matrix>(factor).singularValues();
  Eigen::VectorXd ev = Eigen::VectorXd::Zero(factor.rows());
  ev.tail(sv.size()) = sv.reverse().array().square().matrix();
  return ev;
}

Eigen::VectorXd FrameOperator::dense_eigenvalues() const {
  const Matrix h = 0.5 * (op.matrix() + op.matrix().adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("FrameOperator: eigensolver did not converge");
  return solver.eigenvalues();
}

double FrameOperator::max_eigenvalue() const {
  const Eigen::VectorXd ev = eigenvalues();
  return ev(ev.size() - 1);
}

FrameOperator frame_operator(const BiorthogonalSystem& system, FrameSide side, Index order) {
  if (order < 0 || order >= system.size())
    throw std::out_of_range("frame_operator: order " + std::to_string(order) + " exceeds family size " +
                            std::to_string(system.size()));
  const auto& family = side == FrameSide::Phi ? system.phis : system.psis;
  std::vector<Vector> vs;
  vs.reserve(static_cast<std::size_t>(order + 1));
  for (Index n = 0; n <= order; ++n) vs.push_back(at(family, n).coeffs());
  const FockSpace& space = family.front().space();
  Matrix factor(space.total_dim(), order + 1);
  for (Index n = 0; n <= order; ++n) factor.col(n) = vs[static_cast<std::size_t>(n)];
  return FrameOperator{FockOperator(space, kernels::parallel::rank_one_sum(vs)), order, side, std::move(factor)};
}

FrameActionResidual frame_action_check(const FrameOperator& s_phi, const FrameOperator& s_psi, const BiorthogonalSystem& system,
                                       Index n) {
  if (s_phi.side != FrameSide::Phi || s_psi.side != FrameSide::Psi)
    throw std::invalid_argument("frame_action_check: expected (S_phi, S_Psi)");
  require_member(system, n, std::min(s_phi.order, s_psi.order), "frame_action_check");
  const FockVector& phi = at(system.phis, n);
  const FockVector& psi = at(system.psis, n);
  FrameActionResidual r;
  const FockVector s_phi_psi = apply(s_phi.op, psi);
  r.phi_from_psi = norm(s_phi_psi - phi);
  r.psi_from_phi = norm(apply(s_psi.op, phi) - psi);
  r.round_trip = norm(apply(s_psi.op, s_phi_psi) - psi);
  return r;
}

ResolutionResidual resolution_check(const BiorthogonalSystem& system, const FockVector& probe, Index order) {
  ResolutionResidual r;
  r.phi_side = norm(probe - expand_in_family(system, probe, order, ExpansionSide::Phi));
  r.psi_side = norm(probe - expand_in_family(system, probe, order, ExpansionSide::Psi));
  return r;
}

IntertwiningResidual intertwining_check(const FrameOperator& s_phi, const FrameOperator& s_psi, const BiorthogonalSystem& system,
                                        const PseudoBosonPair& pair, Index n) {
  if (s_phi.side != FrameSide::Phi || s_psi.side != FrameSide::Psi)
    throw std::invalid_argument("intertwining_check: expected (S_phi, S_Psi)");
  const Index order = std::min(s_phi.order, s_psi.order);
  if (n < 0 || n > order - 1)
    throw std::out_of_range("intertwining_check: need n <= order - 1, got n = " + std::to_string(n));
  const FockOperator number = pair.number();
  const FockOperator dual = adjoint(number);
  const FockVector& phi = at(system.phis, n);
  const FockVector& psi = at(system.psis, n);
  IntertwiningResidual r;
  r.psi_frame = norm(apply(s_psi.op, apply(number, phi)) - apply(dual, apply(s_psi.op, phi)));
  r.phi_frame = norm(apply(number, apply(s_phi.op, psi)) - apply(s_phi.op, apply(dual, psi)));
  return r;
}

double number_eigen_residual(const PseudoBosonPair& pair, const BiorthogonalSystem& system, Index n) {
  require_member(system, n, system.size() - 1, "number_eigen_residual");
  const FockVector& phi = at(system.phis, n);
  return relative(norm(apply(pair.number(), phi) - static_cast<double>(n) * phi), norm(phi));
}

double dual_number_eigen_residual(const PseudoBosonPair& pair, const BiorthogonalSystem& system, Index n) {
  require_member(system, n, system.size() - 1, "dual_number_eigen_residual");
  const FockVector& psi = at(system.psis, n);
  return relative(norm(apply(pair.dual_number(), psi) - static_cast<double>(n) * psi), norm(psi));
}

std::vector<double> frame_growth(const BiorthogonalSystem& system, FrameSide side, const std::vector<Index>& orders) {
  std::vector<double> out;
  out.reserve(orders.size());
  for (Index order : orders) out.push_back(frame_operator(system, side, order).max_eigenvalue());
  return out;
}

} // namespace pbfock
