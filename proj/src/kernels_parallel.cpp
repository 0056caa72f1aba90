// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#ifdef PBFOCK_HAVE_OPENMP
#include <omp.h>
#endif

namespace pbfock::kernels {

int max_threads() {
#ifdef PBFOCK_HAVE_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace parallel {

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
  const Index rows = a.rows();
  const Index inner = a.cols();
  const Index cols = b.cols();
  Matrix c = Matrix::Zero(rows, cols);
  // column-major: column j of c is a linear combination of the columns of a
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < cols; ++j) {
    for (Index k = 0; k < inner; ++k) {
      const Complex bkj = b(k, j);
      if (bkj == Complex{0.0, 0.0}) continue;
      c.col(j).noalias() += bkj * a.col(k);
    }
  }
  return c;
}

Vector multiply(const Matrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("multiply: vector dimension mismatch");
  const Index rows = a.rows();
  Vector y = Vector::Zero(rows);
  constexpr Index block = 64;
  const Index blocks = (rows + block - 1) / block;
  // row blocks; within a block the product walks a column-major panel
#pragma omp parallel for schedule(static)
  for (Index b = 0; b < blocks; ++b) {
    const Index r0 = b * block;
    const Index len = std::min(block, rows - r0);
    for (Index k = 0; k < a.cols(); ++k) {
      const Complex xk = x(k);
      if (xk == Complex{0.0, 0.0}) continue;
      y.segment(r0, len).noalias() += xk * a.col(k).segment(r0, len);
    }
  }
  return y;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Index br = b.rows();
  const Index bc = b.cols();
  Matrix k = Matrix::Zero(a.rows() * br, a.cols() * bc);
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i) {
      const Complex aij = a(i, j);
      if (aij == Complex{0.0, 0.0}) continue;
      k.block(i * br, j * bc, br, bc) = aij * b;
    }
  return k;
}

double max_abs_diff(const Matrix& x, const Matrix& y, std::span<const Index> indices) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  const auto n = static_cast<std::ptrdiff_t>(indices.size());
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (std::ptrdiff_t jj = 0; jj < n; ++jj) {
    const Index j = indices[static_cast<std::size_t>(jj)];
    for (Index i : indices) m = std::max(m, std::abs(x(i, j) - y(i, j)));
  }
  return m;
}

double max_abs_diff(const Matrix& x, const Matrix& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double m = 0.0;
#pragma omp parallel for reduction(max : m) schedule(static)
  for (Index j = 0; j < x.cols(); ++j)
    for (Index i = 0; i < x.rows(); ++i) m = std::max(m, std::abs(x(i, j) - y(i, j)));
  return m;
}

Matrix rank_one_sum(std::span<const Vector> vectors) {
  if (vectors.empty()) throw std::invalid_argument("rank_one_sum: no vectors");
  const Index n = vectors.front().size();
  for (const Vector& v : vectors)
    if (v.size() != n) throw std::invalid_argument("rank_one_sum: size mismatch");
  Matrix s = Matrix::Zero(n, n);
#pragma omp parallel for schedule(static)
  for (Index j = 0; j < n; ++j)
    for (const Vector& v : vectors) {
      const Complex vj = std::conj(v(j));
      if (vj == Complex{0.0, 0.0}) continue;
      s.col(j).noalias() += vj * v;
    }
  return s;
}

} // namespace parallel
} // namespace pbfock::kernels
