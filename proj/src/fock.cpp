// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace pbfock {

namespace {

void require_same_space(const FockSpace& a, const FockSpace& b, const char* what) {
  if (!(a == b)) throw std::invalid_argument(std::string(what) + ": operands live on different spaces");
}

void require_single_factor(const FockSpace& s, const char* what) {
  if (s.factors() != 1)
    throw std::invalid_argument(std::string(what) + ": needs a single-mode space (build multi-mode operators with tensor)");
}

Index clamp_margin(Index margin, const FockSpace& s) { return std::min(margin, s.total_dim() - 1); }

} // namespace

FockSpace::FockSpace(Index dim, int factors) : dim_(dim), factors_(factors), total_(1) {
  if (dim < 2) throw std::invalid_argument("FockSpace: dim must be >= 2");
  if (factors < 1) throw std::invalid_argument("FockSpace: factors must be >= 1");
  for (int f = 0; f < factors; ++f) {
    if (total_ > std::numeric_limits<Index>::max() / dim) throw std::invalid_argument("FockSpace: dimension overflow");
    total_ *= dim;
  }
}

Index FockSpace::composite_index(std::span<const Index> multi) const {
  if (static_cast<int>(multi.size()) != factors_)
    throw std::invalid_argument("FockSpace: multi-index has " + std::to_string(multi.size()) + " components, space has " +
                                std::to_string(factors_) + " factors");
  Index idx = 0;
  for (Index n : multi) {
    if (n < 0 || n >= dim_)
      throw std::out_of_range("FockSpace: index " + std::to_string(n) + " outside [0, " + std::to_string(dim_) + ")");
    idx = idx * dim_ + n;
  }
  return idx;
}

std::vector<Index> FockSpace::multi_index(Index composite) const {
  if (composite < 0 || composite >= total_) throw std::out_of_range("FockSpace: composite index out of range");
  std::vector<Index> out(static_cast<std::size_t>(factors_));
  for (int f = factors_ - 1; f >= 0; --f) {
    out[static_cast<std::size_t>(f)] = composite % dim_;
    composite /= dim_;
  }
  return out;
}

FockVector::FockVector(FockSpace space, Vector coeffs, double tail_bound)
    : space_(space), coeffs_(std::move(coeffs)), tail_bound_(tail_bound) {
  if (coeffs_.size() != space_.total_dim()) throw std::invalid_argument("FockVector: coefficient length does not match space");
  if (!(tail_bound_ >= 0.0)) throw std::invalid_argument("FockVector: tail bound must be nonnegative");
}

FockVector FockVector::zero(const FockSpace& space) { return FockVector(space, Vector::Zero(space.total_dim())); }

FockVector FockVector::with_tail_bound(double tail_bound) const { return FockVector(space_, coeffs_, tail_bound); }

std::vector<Index> FockVector::support_top() const {
  std::vector<Index> top(static_cast<std::size_t>(space_.factors()), -1);
  for (Index i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_(i) == Complex{0.0, 0.0}) continue;
    const auto digits = space_.multi_index(i);
    for (std::size_t f = 0; f < digits.size(); ++f) top[f] = std::max(top[f], digits[f]);
  }
  return top;
}

FockOperator::FockOperator(FockSpace space, Matrix matrix, Index trust_margin)
    : space_(space), matrix_(std::move(matrix)), trust_margin_(trust_margin) {
  if (matrix_.rows() != space_.total_dim() || matrix_.cols() != space_.total_dim())
    throw std::invalid_argument("FockOperator: matrix is not square with side equal to the space dimension");
  if (trust_margin_ < 0 || trust_margin_ >= space_.total_dim())
    throw std::invalid_argument("FockOperator: trust margin out of range");
}

FockOperator FockOperator::identity(const FockSpace& space) {
  return FockOperator(space, Matrix::Identity(space.total_dim(), space.total_dim()));
}

FockOperator FockOperator::zero(const FockSpace& space) {
  return FockOperator(space, Matrix::Zero(space.total_dim(), space.total_dim()));
}

FockOperator annihilator(const FockSpace& space) {
  require_single_factor(space, "annihilator");
  const Index d = space.dim();
  Matrix m = Matrix::Zero(d, d);
  for (Index n = 1; n < d; ++n) m(n - 1, n) = std::sqrt(static_cast<double>(n));
  return FockOperator(space, std::move(m), 0);
}

FockOperator creator(const FockSpace& space) {
  require_single_factor(space, "creator");
  return FockOperator(space, annihilator(space).matrix().adjoint(), 1);
}

FockVector basis_state(const FockSpace& space, Index n) {
  const Index multi[] = {n};
  return basis_state(space, std::span<const Index>(multi));
}

FockVector basis_state(const FockSpace& space, std::initializer_list<Index> multi) {
  return basis_state(space, std::span<const Index>(multi.begin(), multi.size()));
}

FockVector basis_state(const FockSpace& space, std::span<const Index> multi) {
  Vector c = Vector::Zero(space.total_dim());
  c(space.composite_index(multi)) = 1.0;
  return FockVector(space, std::move(c), 0.0);
}

FockVector apply(const FockOperator& op, const FockVector& v) {
  require_same_space(op.space(), v.space(), "apply");
  Vector out = kernels::parallel::multiply(op.matrix(), v.coeffs());
  // Exact finite support strictly inside the trusted block maps to exact
  // finite support; anything else cannot be certified.
  double tail = std::numeric_limits<double>::infinity();
  if (v.tail_bound() == 0.0) {
    const auto top = v.support_top();
    const Index limit = v.space().dim() - op.trust_margin();
    if (std::all_of(top.begin(), top.end(), [&](Index t) { return t < limit; })) tail = 0.0;
  }
  return FockVector(v.space(), std::move(out), tail);
}

FockOperator compose(const FockOperator& lhs, const FockOperator& rhs) {
  require_same_space(lhs.space(), rhs.space(), "compose");
  return FockOperator(lhs.space(), kernels::parallel::multiply(lhs.matrix(), rhs.matrix()),
                      clamp_margin(lhs.trust_margin() + rhs.trust_margin(), lhs.space()));
}

FockOperator add(const FockOperator& lhs, const FockOperator& rhs) {
  require_same_space(lhs.space(), rhs.space(), "add");
  return FockOperator(lhs.space(), lhs.matrix() + rhs.matrix(), std::max(lhs.trust_margin(), rhs.trust_margin()));
}

FockOperator scale(Complex c, const FockOperator& op) { return FockOperator(op.space(), c * op.matrix(), op.trust_margin()); }

FockOperator adjoint(const FockOperator& op) { return FockOperator(op.space(), op.matrix().adjoint(), op.trust_margin()); }

FockOperator commutator(const FockOperator& lhs, const FockOperator& rhs) {
  require_same_space(lhs.space(), rhs.space(), "commutator");
  Matrix m = kernels::parallel::multiply(lhs.matrix(), rhs.matrix());
  m -= kernels::parallel::multiply(rhs.matrix(), lhs.matrix());
  return FockOperator(lhs.space(), std::move(m), clamp_margin(lhs.trust_margin() + rhs.trust_margin(), lhs.space()));
}

FockVector add(const FockVector& u, const FockVector& v) {
  require_same_space(u.space(), v.space(), "add");
  return FockVector(u.space(), u.coeffs() + v.coeffs(), u.tail_bound() + v.tail_bound());
}

FockVector scale(Complex c, const FockVector& v) {
  const double t = (v.tail_bound() == 0.0 || c == Complex{0.0, 0.0}) ? 0.0 : std::abs(c) * v.tail_bound();
  return FockVector(v.space(), c * v.coeffs(), t);
}

Complex inner(const FockVector& u, const FockVector& v) {
  require_same_space(u.space(), v.space(), "inner");
  return u.coeffs().dot(v.coeffs());
}

double norm(const FockVector& v) { return v.coeffs().norm(); }

FockOperator tensor(const FockOperator& first, const FockOperator& second) {
  require_single_factor(first.space(), "tensor");
  require_single_factor(second.space(), "tensor");
  if (first.space().dim() != second.space().dim()) throw std::invalid_argument("tensor: factors have different dimensions");
  const FockSpace composite(first.space().dim(), 2);
  return FockOperator(composite, kernels::parallel::kron(first.matrix(), second.matrix()),
                      std::max(first.trust_margin(), second.trust_margin()));
}

FockVector tensor_vec(const FockVector& first, const FockVector& second) {
  require_single_factor(first.space(), "tensor_vec");
  require_single_factor(second.space(), "tensor_vec");
  if (first.space().dim() != second.space().dim()) throw std::invalid_argument("tensor_vec: factors have different dimensions");
  const FockSpace composite(first.space().dim(), 2);
  const Index d = first.space().dim();
  Vector c(d * d);
  for (Index n = 0; n < d; ++n) c.segment(n * d, d) = first.coeffs()(n) * second.coeffs();
  // u (x) v - u_t (x) v_t = r_u (x) v + u_t (x) r_v
  const double tu = first.tail_bound(), tv = second.tail_bound();
  double tail = 0.0;
  if (std::isinf(tu) || std::isinf(tv)) tail = std::numeric_limits<double>::infinity();
  else if (tu > 0.0) tail += tu * (norm(second) + tv);
  if (tv > 0.0) tail += norm(first) * tv;
  return FockVector(composite, std::move(c), tail);
}

double interior_defect(const FockOperator& op, const FockOperator& expected, Index margin) {
  require_same_space(op.space(), expected.space(), "interior_defect");
  if (margin < 0) throw std::invalid_argument("interior_defect: negative margin");
  const auto idx = kernels::interior_indices(op.space().dim(), op.space().factors(), margin);
  if (idx.empty())
    throw std::invalid_argument("interior_defect: margin " + std::to_string(margin) + " leaves an empty interior at D=" +
                                std::to_string(op.space().dim()));
  return kernels::parallel::max_abs_diff(op.matrix(), expected.matrix(), idx);
}

double max_entry_diff(const FockOperator& x, const FockOperator& y) {
  require_same_space(x.space(), y.space(), "max_entry_diff");
  return kernels::parallel::max_abs_diff(x.matrix(), y.matrix());
}

} // namespace pbfock
