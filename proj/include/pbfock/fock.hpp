// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// Truncated Fock spaces: number basis, ladder operators, dense operator
// algebra and truncation-aware identity checks.
//
// A space keeps the first D number states of each of its d factors. For
// d = 2 the state Phi_{n,m} sits at composite index n*D + m (first factor
// slowest).
//
// Truncation bookkeeping:
//   FockOperator::trust_margin  -- per-factor band of boundary states where the
//                                  truncated matrix may differ from the true one
//   FockVector::tail_bound      -- upper bound on the norm of the discarded part
//                                  of the vector (0 for exact finite support,
//                                  +inf when nothing can be certified)

#pragma once

#include "pbfock/kernels.hpp"

#include <initializer_list>
#include <span>
#include <vector>

namespace pbfock {

class FockSpace {
public:
  explicit FockSpace(Index dim, int factors = 1);

  Index dim() const { return dim_; }
  int factors() const { return factors_; }
  Index total_dim() const { return total_; }

  Index composite_index(std::span<const Index> multi) const;
  std::vector<Index> multi_index(Index composite) const;

  bool operator==(const FockSpace&) const = default;

private:
  Index dim_;
  int factors_;
  Index total_;
};

class FockVector {
public:
  FockVector(FockSpace space, Vector coeffs, double tail_bound = 0.0);

  static FockVector zero(const FockSpace& space);

  const FockSpace& space() const { return space_; }
  const Vector& coeffs() const { return coeffs_; }
  Complex operator[](Index i) const { return coeffs_(i); }
  double tail_bound() const { return tail_bound_; }

  FockVector with_tail_bound(double tail_bound) const;
  // Largest retained index per factor carrying a nonzero coefficient (-1 if zero vector).
  std::vector<Index> support_top() const;

private:
  FockSpace space_;
  Vector coeffs_;
  double tail_bound_;
};

class FockOperator {
public:
  FockOperator(FockSpace space, Matrix matrix, Index trust_margin = 0);

  static FockOperator identity(const FockSpace& space);
  static FockOperator zero(const FockSpace& space);

  const FockSpace& space() const { return space_; }
  const Matrix& matrix() const { return matrix_; }
  Complex operator()(Index i, Index j) const { return matrix_(i, j); }
  Index trust_margin() const { return trust_margin_; }

private:
  FockSpace space_;
  Matrix matrix_;
  Index trust_margin_;
};

// Ladder operators on a single-mode space. a is exact under truncation;
// a^dagger loses the top state and carries trust margin 1.
FockOperator annihilator(const FockSpace& space);
FockOperator creator(const FockSpace& space);

FockVector basis_state(const FockSpace& space, Index n);
FockVector basis_state(const FockSpace& space, std::initializer_list<Index> multi);
FockVector basis_state(const FockSpace& space, std::span<const Index> multi);

FockVector apply(const FockOperator& op, const FockVector& v);
FockOperator compose(const FockOperator& lhs, const FockOperator& rhs);
FockOperator add(const FockOperator& lhs, const FockOperator& rhs);
FockOperator scale(Complex c, const FockOperator& op);
FockOperator adjoint(const FockOperator& op);
FockOperator commutator(const FockOperator& lhs, const FockOperator& rhs);

FockVector add(const FockVector& u, const FockVector& v);
FockVector scale(Complex c, const FockVector& v);

// <u, v>, conjugate-linear in u
Complex inner(const FockVector& u, const FockVector& v);
double norm(const FockVector& v);

FockOperator tensor(const FockOperator& first, const FockOperator& second);
FockVector tensor_vec(const FockVector& first, const FockVector& second);

// Max |op - expected| over the interior block: composite indices whose every
// factor digit is below D - margin. Throws when the interior is empty.
double interior_defect(const FockOperator& op, const FockOperator& expected, Index margin);

// Entrywise max |x - y| over the whole matrix.
double max_entry_diff(const FockOperator& x, const FockOperator& y);

inline FockOperator operator+(const FockOperator& a, const FockOperator& b) { return add(a, b); }
inline FockOperator operator-(const FockOperator& a, const FockOperator& b) { return add(a, scale(-1.0, b)); }
inline FockOperator operator*(Complex c, const FockOperator& a) { return scale(c, a); }
inline FockOperator operator*(const FockOperator& a, const FockOperator& b) { return compose(a, b); }
inline FockVector operator*(const FockOperator& a, const FockVector& v) { return apply(a, v); }
inline FockVector operator+(const FockVector& u, const FockVector& v) { return add(u, v); }
inline FockVector operator-(const FockVector& u, const FockVector& v) { return add(u, scale(-1.0, v)); }
inline FockVector operator*(Complex c, const FockVector& v) { return scale(c, v); }

} // namespace pbfock
