// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts on the shapes
// the operator algebra produces: dense products, banded ladder products,
// two-mode Kronecker lifts and frame-operator rank-one sums.

#include "pbfock/kernels.hpp"

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

using namespace pbfock;
namespace ks = pbfock::kernels::serial;
namespace kp = pbfock::kernels::parallel;

namespace {

Matrix dense(Index n) {
  std::srand(7);
  return Matrix::Random(n, n);
}

// tridiagonal block shaped like a deformed ladder operator
Matrix banded(Index n) {
  Matrix m = Matrix::Zero(n, n);
  for (Index j = 1; j < n; ++j) {
    m(j - 1, j) = std::sqrt(double(j));
    m(j, j - 1) = Complex(0.0, 0.3) * std::sqrt(double(j));
  }
  return m;
}

std::vector<Vector> family(Index dim, Index count) {
  std::srand(11);
  std::vector<Vector> v;
  for (Index i = 0; i < count; ++i) v.push_back(Vector::Random(dim));
  return v;
}

template <Matrix (*F)(const Matrix&, const Matrix&)>
void BM_dense_multiply(benchmark::State& state) {
  const Matrix a = dense(state.range(0)), b = dense(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

template <Matrix (*F)(const Matrix&, const Matrix&)>
void BM_banded_multiply(benchmark::State& state) {
  const Matrix a = dense(state.range(0)), b = banded(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

template <Vector (*F)(const Matrix&, const Vector&)>
void BM_apply(benchmark::State& state) {
  const Matrix a = dense(state.range(0));
  const Vector x = Vector::Ones(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(F(a, x));
}

template <Matrix (*F)(const Matrix&, const Matrix&)>
void BM_kron(benchmark::State& state) {
  const Matrix a = banded(state.range(0)), b = banded(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

template <Matrix (*F)(std::span<const Vector>)>
void BM_rank_one_sum(benchmark::State& state) {
  const std::vector<Vector> v = family(state.range(0), 25);
  for (auto _ : state) benchmark::DoNotOptimize(F(v));
}

} // namespace

BENCHMARK(BM_dense_multiply<ks::multiply>)->Name("multiply_dense/serial")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_dense_multiply<kp::multiply>)->Name("multiply_dense/parallel")->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(BM_banded_multiply<ks::multiply>)->Name("multiply_banded/serial")->Arg(96)->Arg(256);
BENCHMARK(BM_banded_multiply<kp::multiply>)->Name("multiply_banded/parallel")->Arg(96)->Arg(256);
BENCHMARK(BM_apply<ks::multiply>)->Name("apply/serial")->Arg(96)->Arg(2304);
BENCHMARK(BM_apply<kp::multiply>)->Name("apply/parallel")->Arg(96)->Arg(2304);
BENCHMARK(BM_kron<ks::kron>)->Name("kron/serial")->Arg(24)->Arg(48);
BENCHMARK(BM_kron<kp::kron>)->Name("kron/parallel")->Arg(24)->Arg(48);
BENCHMARK(BM_rank_one_sum<ks::rank_one_sum>)->Name("rank_one_sum/serial")->Arg(96)->Arg(576);
BENCHMARK(BM_rank_one_sum<kp::rank_one_sum>)->Name("rank_one_sum/parallel")->Arg(96)->Arg(576);

BENCHMARK_MAIN();
