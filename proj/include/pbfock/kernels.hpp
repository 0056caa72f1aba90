// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// Dense complex kernels behind the operator algebra.
//
// Two implementations share one signature set:
//   kernels::serial   -- plain loops, kept as the reference the tests compare against
//   kernels::parallel -- OpenMP loops over independent output columns / rows
//
// Everything above this layer calls kernels::parallel. Without OpenMP the
// pragmas are ignored and the parallel variants run on one thread.

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <span>
#include <vector>

namespace pbfock {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

namespace kernels {

// Composite indices whose every base-`per_factor_dim` digit is below
// per_factor_dim - margin. Empty when margin >= per_factor_dim.
std::vector<Index> interior_indices(Index per_factor_dim, int factors, Index margin);

namespace serial {

Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);
Matrix kron(const Matrix& a, const Matrix& b);
// max |x(i,j) - y(i,j)| over i, j in `indices`
double max_abs_diff(const Matrix& x, const Matrix& y, std::span<const Index> indices);
double max_abs_diff(const Matrix& x, const Matrix& y);
// sum_n v_n v_n^H
Matrix rank_one_sum(std::span<const Vector> vectors);

} // namespace serial

namespace parallel {

// Zero entries of `b` are skipped, so banded operators stored densely
// multiply in O(n^2 * bandwidth).
Matrix multiply(const Matrix& a, const Matrix& b);
Vector multiply(const Matrix& a, const Vector& x);
Matrix kron(const Matrix& a, const Matrix& b);
double max_abs_diff(const Matrix& x, const Matrix& y, std::span<const Index> indices);
double max_abs_diff(const Matrix& x, const Matrix& y);
Matrix rank_one_sum(std::span<const Vector> vectors);

} // namespace parallel

int max_threads();

} // namespace kernels
} // namespace pbfock
