// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/pairs.hpp"

#include "pbfock/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace pbfock {

namespace {

using series::log_factorial;
using series::power_times;

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_disk(Complex p, const char* what) {
  const double r = std::abs(p);
  if (!(r < 0.5))
    throw SeriesDivergence(std::string(what) + ": |parameter| = " + std::to_string(r) +
                               " lies outside the convergence disk |parameter| < 1/2 (norm-series term ratio tends to 4|p|^2 = " +
                               std::to_string(4.0 * r * r) + " >= 1)",
                           r);
}

void require_index(Index n, const FockSpace& space, const char* what) {
  if (space.factors() != 1) throw std::invalid_argument(std::string(what) + ": needs a single-mode space");
  if (n < 0 || n >= space.dim())
    throw std::out_of_range(std::string(what) + ": index " + std::to_string(n) + " outside [0, " + std::to_string(space.dim()) +
                            ")");
}

// exp(p a^2) Phi_n = sum_k p^k/k! sqrt(n!/(n-2k)!) Phi_{n-2k}
Vector descending_gaussian(Complex p, Index n, Index dim) {
  Vector c = Vector::Zero(dim);
  for (Index k = 0; 2 * k <= n; ++k)
    c(n - 2 * k) = power_times(p, k, -log_factorial(k) + 0.5 * (log_factorial(n) - log_factorial(n - 2 * k)));
  return c;
}

// exp(p a^dagger^2) Phi_n = sum_k p^k/k! sqrt((n+2k)!/n!) Phi_{n+2k}, truncated at dim
Vector ascending_gaussian(Complex p, Index n, Index dim) {
  Vector c = Vector::Zero(dim);
  for (Index k = 0; n + 2 * k < dim; ++k)
    c(n + 2 * k) = power_times(p, k, -log_factorial(k) + 0.5 * (log_factorial(n + 2 * k) - log_factorial(n)));
  return c;
}

double certified_tail_norm(Complex p, Index n, Index dim) {
  const Index last_kept = (dim - 1 - n) / 2;
  const auto cert = series::gaussian_tail(std::abs(p), n, last_kept);
  return cert ? std::sqrt(cert->bound) : kInf;
}

double norm_rows_below(const FockVector& v, Index limit) { return v.coeffs().head(limit).norm(); }

FockVector probe_vector(const FockSpace& space, Index support) {
  Vector c = Vector::Zero(space.total_dim());
  for (Index k = 0; k <= support; ++k)
    c(k) = Complex(1.0, 0.5 * static_cast<double>(k)) / static_cast<double>(k + 1);
  return FockVector(space, std::move(c), 0.0);
}

} // namespace

std::string to_string(FamilyKind kind) {
  switch (kind) {
  case FamilyKind::GaussLowering:
    return "gauss-lowering";
  case FamilyKind::GaussRaising:
    return "gauss-raising";
  }
  return "unknown";
}

PseudoBosonPair build_pair(const DeformationFamily& family, const FockSpace& space) {
  const Complex p = family.parameter;
  if (!std::isfinite(p.real()) || !std::isfinite(p.imag())) throw std::invalid_argument("build_pair: non-finite parameter");
  if (space.factors() != 1) throw std::invalid_argument("build_pair: needs a single-mode space");
  const FockOperator a = annihilator(space);
  const FockOperator ad = creator(space);
  if (family.kind == FamilyKind::GaussLowering) return PseudoBosonPair{family, a, ad + (2.0 * p) * a};
  return PseudoBosonPair{family, a - (2.0 * p) * ad, ad};
}

std::vector<FockVector> phi_ladder(const PseudoBosonPair& pair, Index n_max) {
  const FockSpace& space = pair.space();
  if (n_max < 0) throw std::invalid_argument("phi_ladder: negative n_max");
  if (n_max > space.dim() - 2)
    throw std::out_of_range("phi_ladder: n_max = " + std::to_string(n_max) + " too large for trust band at D = " +
                            std::to_string(space.dim()) + " (need n_max <= D - 2)");
  const bool raising = pair.family.kind == FamilyKind::GaussRaising;
  std::vector<FockVector> out;
  out.reserve(static_cast<std::size_t>(n_max + 1));
  out.push_back(raising ? phi_closed_form(pair.family, 0, space) : basis_state(space, 0));
  for (Index n = 1; n <= n_max; ++n) {
    FockVector next = scale(1.0 / std::sqrt(static_cast<double>(n)), apply(pair.B, out.back()));
    // B = a^dagger shifts the truncated series up by one and drops only states
    // at or above D, so the ladder vector is exactly the truncated series.
    if (raising) next = next.with_tail_bound(certified_tail_norm(pair.family.parameter, n, space.dim()));
    out.push_back(std::move(next));
  }
  return out;
}

FockVector phi_closed_form(const DeformationFamily& family, Index n, const FockSpace& space) {
  require_index(n, space, "phi_closed_form");
  if (family.kind == FamilyKind::GaussLowering)
    return FockVector(space, descending_gaussian(family.parameter, n, space.dim()), 0.0);
  require_disk(family.parameter, "phi_closed_form");
  return FockVector(space, ascending_gaussian(family.parameter, n, space.dim()),
                    certified_tail_norm(family.parameter, n, space.dim()));
}

FockVector psi_series(const DeformationFamily& family, Index n, const FockSpace& space) {
  require_index(n, space, "psi_series");
  const Complex dual = -std::conj(family.parameter);
  if (family.kind == FamilyKind::GaussRaising) return FockVector(space, descending_gaussian(dual, n, space.dim()), 0.0);
  require_disk(family.parameter, "psi_series");
  return FockVector(space, ascending_gaussian(dual, n, space.dim()), certified_tail_norm(family.parameter, n, space.dim()));
}

double series_tail_bound(const DeformationFamily& family, Index n, const FockSpace& space) {
  require_index(n, space, "series_tail_bound");
  require_disk(family.parameter, "series_tail_bound");
  const Index last_kept = (space.dim() - 1 - n) / 2;
  const auto cert = series::gaussian_tail(std::abs(family.parameter), n, last_kept);
  if (!cert)
    throw std::domain_error("series_tail_bound: truncation at D = " + std::to_string(space.dim()) +
                            " stops before the term ratio of the norm series drops below 1 (n = " + std::to_string(n) + ")");
  return cert->bound;
}

double BiorthogonalSystem::max_pairing_defect() const {
  const Index n = pairing.rows();
  return (pairing - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

BiorthogonalSystem pairing_matrix(std::vector<FockVector> phis, std::vector<FockVector> psis) {
  if (phis.empty() || phis.size() != psis.size())
    throw std::invalid_argument("pairing_matrix: phi and Psi lists must be nonempty and of equal length");
  const FockSpace& space = phis.front().space();
  for (const auto& v : phis)
    if (!(v.space() == space)) throw std::invalid_argument("pairing_matrix: vectors live on different spaces");
  for (const auto& v : psis)
    if (!(v.space() == space)) throw std::invalid_argument("pairing_matrix: vectors live on different spaces");

  BiorthogonalSystem sys;
  const auto n = static_cast<Index>(phis.size());
  sys.pairing = Matrix(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      sys.pairing(i, j) = inner(psis[static_cast<std::size_t>(i)], phis[static_cast<std::size_t>(j)]);
  sys.omega.reserve(phis.size());
  for (std::size_t i = 0; i < phis.size(); ++i) sys.omega.push_back(norm(phis[i]) * norm(psis[i]));
  sys.phis = std::move(phis);
  sys.psis = std::move(psis);
  return sys;
}

BiorthogonalSystem pairing_matrix(const DeformationFamily& phi_family, std::vector<FockVector> phis,
                                  const DeformationFamily& psi_family, std::vector<FockVector> psis) {
  if (!(phi_family == psi_family))
    throw std::invalid_argument("pairing_matrix: phi and Psi lists come from different families or parameters");
  return pairing_matrix(std::move(phis), std::move(psis));
}

BiorthogonalSystem build_system(const DeformationFamily& family, const FockSpace& space, Index n_max) {
  const PseudoBosonPair pair = build_pair(family, space);
  std::vector<FockVector> phis = phi_ladder(pair, n_max);
  std::vector<FockVector> psis;
  psis.reserve(phis.size());
  for (Index n = 0; n <= n_max; ++n) psis.push_back(psi_series(family, n, space));
  return pairing_matrix(std::move(phis), std::move(psis));
}

AssumptionReport assumption_report(const DeformationFamily& family, const FockSpace& space, Index n_max) {
  require_disk(family.parameter, "assumption_report");
  const PseudoBosonPair pair = build_pair(family, space);
  const BiorthogonalSystem sys = build_system(family, space, n_max);
  // A and B^dagger have bandwidth one: rows below D-1 only read retained coefficients.
  const Index rows = space.dim() - 1;
  AssumptionReport rep;

  const FockVector& phi0 = sys.phis.front();
  rep.vacuum_residual = norm_rows_below(apply(pair.A, phi0), rows);
  FockVector v = phi0;
  for (Index n = 0; n <= n_max; ++n) {
    if (n > 0) v = apply(pair.B, v);
    rep.ladder_norms.push_back(norm(v));
    rep.ladder_finite = rep.ladder_finite && std::isfinite(rep.ladder_norms.back());
  }

  const FockVector& psi0 = sys.psis.front();
  rep.dual_vacuum_residual = norm_rows_below(apply(adjoint(pair.B), psi0), rows);
  const FockOperator a_dag = adjoint(pair.A);
  FockVector w = psi0;
  for (Index n = 0; n <= n_max; ++n) {
    if (n > 0) w = apply(a_dag, w);
    rep.dual_ladder_norms.push_back(norm(w));
    rep.dual_ladder_finite = rep.dual_ladder_finite && std::isfinite(rep.dual_ladder_norms.back());
  }

  const auto side = family.kind == FamilyKind::GaussLowering ? ExpansionSide::Phi : ExpansionSide::Psi;
  const Index max_support = std::min<Index>(8, n_max);
  for (Index s = 0; s <= max_support; ++s) {
    const FockVector probes[] = {basis_state(space, s), probe_vector(space, s)};
    for (const auto& probe : probes)
      rep.reconstruction_residual = std::max(rep.reconstruction_residual, norm(probe - expand_in_family(sys, probe, n_max, side)));
  }

  rep.omega = sys.omega;
  bool strict = rep.omega.size() > 2;
  for (std::size_t n = 0; n + 2 < rep.omega.size(); ++n) {
    rep.omega_nondecreasing = rep.omega_nondecreasing && rep.omega[n + 2] >= rep.omega[n] * (1.0 - 1e-12);
    strict = strict && rep.omega[n + 2] > rep.omega[n] * (1.0 + 1e-12);
  }
  rep.omega_growth = rep.omega.back() / rep.omega.front();
  rep.riesz_failure_evidence = strict;
  return rep;
}

FockVector expand_in_family(const BiorthogonalSystem& system, const FockVector& v, Index order, ExpansionSide side) {
  if (order < 0 || order >= system.size())
    throw std::out_of_range("expand_in_family: order " + std::to_string(order) + " exceeds family size " +
                            std::to_string(system.size()));
  const auto& coefficient_side = side == ExpansionSide::Phi ? system.psis : system.phis;
  const auto& basis_side = side == ExpansionSide::Phi ? system.phis : system.psis;
  Vector acc = Vector::Zero(v.space().total_dim());
  for (Index n = 0; n <= order; ++n) {
    const auto i = static_cast<std::size_t>(n);
    acc += inner(coefficient_side[i], v) * basis_side[i].coeffs();
  }
  return FockVector(v.space(), std::move(acc), kInf);
}

std::vector<RadiusClassification> radius_scan(const DeformationFamily& family, Index n, const std::vector<Complex>& parameters,
                                              const RadiusScanOptions& options) {
  (void)family;  // both families share the same norm series
  if (n < 0) throw std::invalid_argument("radius_scan: negative index");
  const double log_threshold = std::log(options.blow_up_threshold);
  std::vector<RadiusClassification> out;
  out.reserve(parameters.size());
  for (const Complex p : parameters) {
    RadiusClassification c;
    c.parameter = p;
    const double r = std::abs(p);
    c.limit_ratio = 4.0 * r * r;
    c.convergent = c.limit_ratio < 1.0;
    if (!c.convergent) {
      double log_term = 0.0, log_sum = 0.0;
      for (Index k = 0; k < options.max_terms; ++k) {
        if (log_sum > log_threshold) {
          c.blow_up_index = k;
          break;
        }
        log_term += std::log(series::gaussian_term_ratio(r, n, k));
        log_sum = series::log_add(log_sum, log_term);
      }
    }
    out.push_back(c);
  }
  return out;
}

} // namespace pbfock
