// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/series.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace pbfock::series {

double log_factorial(Index n) {
  if (n < 0) throw std::invalid_argument("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

Complex power_times(Complex p, Index k, double log_rest) {
  if (k == 0) return {std::exp(log_rest), 0.0};
  const double r = std::abs(p);
  if (r == 0.0) return {0.0, 0.0};
  const double kk = static_cast<double>(k);
  return std::polar(std::exp(kk * std::log(r) + log_rest), kk * std::arg(p));
}

double log_add(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  const double hi = std::max(a, b), lo = std::min(a, b);
  return hi + std::log1p(std::exp(lo - hi));
}

double log_gaussian_term(double abs_p, Index n, Index k) {
  if (k == 0) return 0.0;
  if (abs_p == 0.0) return -std::numeric_limits<double>::infinity();
  return 2.0 * static_cast<double>(k) * std::log(abs_p) + log_factorial(2 * k + n) - 2.0 * log_factorial(k) -
         log_factorial(n);
}

double gaussian_term_ratio(double abs_p, Index n, Index k) {
  const double a = static_cast<double>(2 * k + n + 1);
  const double b = static_cast<double>(2 * k + n + 2);
  const double c = static_cast<double>(k + 1);
  return abs_p * abs_p * a * b / (c * c);
}

std::optional<TailCertificate> gaussian_tail(double abs_p, Index n, Index last_kept) {
  if (last_kept < 0) throw std::invalid_argument("gaussian_tail: negative truncation index");
  TailCertificate cert;
  cert.first_omitted = last_kept + 1;
  if (abs_p == 0.0) return cert;
  const double q = std::max(gaussian_term_ratio(abs_p, n, cert.first_omitted), 4.0 * abs_p * abs_p);
  if (q >= 1.0) return std::nullopt;
  cert.ratio = q;
  cert.bound = std::exp(log_gaussian_term(abs_p, n, cert.first_omitted)) / (1.0 - q);
  return cert;
}

} // namespace pbfock::series
