// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/kernels.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace pbfock;
using namespace pbfock::kernels;

namespace {

Matrix random_matrix(Index r, Index c, std::mt19937_64& rng, double zero_fraction = 0.0) {
  std::normal_distribution<double> g;
  std::uniform_real_distribution<double> u;
  Matrix m(r, c);
  for (Index j = 0; j < c; ++j)
    for (Index i = 0; i < r; ++i) m(i, j) = u(rng) < zero_fraction ? Complex(0.0) : Complex(g(rng), g(rng));
  return m;
}

} // namespace

TEST_CASE("parallel kernels agree with the serial reference") {
  std::mt19937_64 rng(42);
  for (double zeros : {0.0, 0.7}) {
    const Matrix a = random_matrix(37, 23, rng, zeros);
    const Matrix b = random_matrix(23, 41, rng, zeros);
    const Vector x = random_matrix(23, 1, rng, zeros).col(0);
    CHECK(serial::max_abs_diff(serial::multiply(a, b), parallel::multiply(a, b)) <= 1e-12);
    CHECK((serial::multiply(a, b) - a * b).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((serial::multiply(a, x) - parallel::multiply(a, x)).cwiseAbs().maxCoeff() <= 1e-12);

    const Matrix k1 = random_matrix(4, 3, rng, zeros), k2 = random_matrix(5, 6, rng, zeros);
    CHECK(serial::max_abs_diff(serial::kron(k1, k2), parallel::kron(k1, k2)) == 0.0);

    std::vector<Vector> vs;
    for (int n = 0; n < 9; ++n) vs.push_back(random_matrix(17, 1, rng, zeros).col(0));
    CHECK(serial::max_abs_diff(serial::rank_one_sum(vs), parallel::rank_one_sum(vs)) <= 1e-12);
  }
}

TEST_CASE("kron layout puts the first factor slowest") {
  Matrix a(2, 2), b(2, 2);
  a << 1.0, 2.0, 3.0, 4.0;
  b << 0.0, 1.0, 1.0, 0.0;
  const Matrix k = parallel::kron(a, b);
  CHECK(k(0, 3) == Complex(2.0));
  CHECK(k(3, 0) == Complex(3.0));
  CHECK(k(2, 3) == Complex(4.0));
  CHECK(k(2, 2) == Complex(0.0));
}

TEST_CASE("max_abs_diff on an index subset") {
  std::mt19937_64 rng(3);
  const Matrix x = random_matrix(6, 6, rng);
  Matrix y = x;
  y(5, 5) += 10.0;
  const std::vector<Index> head{0, 1, 2, 3, 4};
  CHECK(serial::max_abs_diff(x, y, head) == 0.0);
  CHECK(parallel::max_abs_diff(x, y, head) == 0.0);
  CHECK(parallel::max_abs_diff(x, y) == Catch::Approx(10.0));
}

TEST_CASE("interior index sets") {
  CHECK(interior_indices(5, 1, 2) == std::vector<Index>{0, 1, 2});
  CHECK(interior_indices(3, 2, 1) == std::vector<Index>{0, 1, 3, 4});
  CHECK(interior_indices(4, 2, 4).empty());
  for (Index m = 0; m < 6; ++m) CHECK(static_cast<Index>(interior_indices(6, 2, m).size()) == (6 - m) * (6 - m));
}

TEST_CASE("thread count is positive") { CHECK(max_threads() >= 1); }
