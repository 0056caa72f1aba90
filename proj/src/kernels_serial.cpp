// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pbfock::kernels {

std::vector<Index> interior_indices(Index per_factor_dim, int factors, Index margin) {
  if (per_factor_dim <= 0 || factors <= 0) throw std::invalid_argument("interior_indices: empty space");
  std::vector<Index> out;
  if (margin >= per_factor_dim) return out;
  const Index limit = per_factor_dim - margin;
  Index total = 1;
  for (int f = 0; f < factors; ++f) total *= per_factor_dim;
  out.reserve(static_cast<std::size_t>(total));
  for (Index i = 0; i < total; ++i) {
    Index rest = i;
    bool inside = true;
    for (int f = 0; f < factors && inside; ++f) {
      inside = (rest % per_factor_dim) < limit;
      rest /= per_factor_dim;
    }
    if (inside) out.push_back(i);
  }
  return out;
}

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
  Matrix c = Matrix::Zero(a.rows(), b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < b.cols(); ++j) {
      Complex s{0.0, 0.0};
      for (Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

Vector multiply(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("multiply: vector dimension mismatch");
  Vector y = Vector::Zero(a.rows());
  for (Index i = 0; i < a.rows(); ++i) {
    Complex s{0.0, 0.0};
    for (Index k = 0; k < a.cols(); ++k) s += a(i, k) * x(k);
    y(i) = s;
  }
  return y;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index p = 0; p < b.rows(); ++p)
        for (Index q = 0; q < b.cols(); ++q) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

double max_abs_diff(const Matrix& x, const Matrix& y, std::span<const Index> indices) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (Index i : indices)
    for (Index j : indices) m = std::max(m, std::abs(x(i, j) - y(i, j)));
  return m;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i) m = std::max(m, std::abs(x(i, j) - y(i, j)));
  return m;
}

Matrix rank_one_sum(std::span<const Vector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("rank_one_sum: no vectors");
  const Index n = vectors.front().size();
  Matrix s = Matrix::Zero(n, n);
  for (const Vector& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("rank_one_sum: size mismatch");
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) s(i, j) += v(i) * std::conj(v(j));
  }
  return s;
}

} // namespace serial
} // namespace pbfock::kernels
