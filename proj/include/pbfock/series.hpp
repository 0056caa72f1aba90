// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// Log-domain helpers for coefficient series whose factorials overflow long
// before the series is resolved ((2k+n)! passes DBL_MAX near k = 85).

#pragma once

#include "pbfock/kernels.hpp"

#include <optional>

namespace pbfock::series {

double log_factorial(Index n);

// p^k * exp(log_rest); exact 1 * exp(log_rest) for k = 0 even when p = 0.
Complex power_times(Complex p, Index k, double log_rest);

// log(exp(a) + exp(b)) without overflow; a may be -inf.
double log_add(double a, double b);

// Terms of the Gaussian-deformation norm series
//   t_k(n) = |p|^{2k} (2k+n)! / (k!^2 n!)
// which is ||exp(p a^2)^* ... Phi_n||^2 for either deformation family.
double log_gaussian_term(double abs_p, Index n, Index k);
// t_{k+1} / t_k
double gaussian_term_ratio(double abs_p, Index n, Index k);

struct TailCertificate {
  double bound = 0.0;          // upper bound on sum_{k > last_kept} t_k
  double ratio = 0.0;          // geometric ratio q used for the bound
  Index first_omitted = 0;     // last_kept + 1
};

// Geometric bound on the omitted tail once the term ratio stays below q < 1.
// For n >= 1 the ratio decreases in k towards 4|p|^2; for n = 0 it increases
// towards 4|p|^2. q = max(r_{K+1}, 4|p|^2) dominates every later ratio.
// Returns nullopt when q >= 1 (truncation has not reached the geometric regime).
std::optional<TailCertificate> gaussian_tail(double abs_p, Index n, Index last_kept);

} // namespace pbfock::series
