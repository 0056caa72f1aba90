// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "pbfock/nogo.hpp"

#include "pbfock/series.hpp"

#include <cmath>
#include <limits>

namespace pbfock {

namespace {

void require_power(const NoGoFamily& family, const char* what) {
  if (family.power < 2)
    throw std::invalid_argument(std::string(what) + ": power must be >= 2, got " + std::to_string(family.power) +
                                " (power 1 is the linear Gaussian deformation)");
}

double log_kernel_ratio(double abs_parameter, int power, Index k) {
  const Index j = (k + 1) * (power + 1) - 1;
  return 2.0 * std::log(abs_parameter) + series::log_factorial(j) - series::log_factorial(j - power) -
         std::log(static_cast<double>(j + 1));
}

FockOperator power_of(const FockOperator& op, int power) {
  FockOperator out = op;
  for (int i = 1; i < power; ++i) out = compose(out, op);
  return out;
}

// Smallest k with kernel_ratio(k) > 1; the ratio is increasing in k for power >= 2.
Index crossing_of(double abs_parameter, int power) {
  auto above = [&](Index k) { return log_kernel_ratio(abs_parameter, power, k) > 0.0; };
  if (above(0)) return 0;
  Index hi = 1;
  while (!above(hi)) hi *= 2;
  Index lo = hi / 2;
  while (hi - lo > 1) {
    const Index mid = lo + (hi - lo) / 2;
    (above(mid) ? hi : lo) = mid;
  }
  return hi;
}

} // namespace

std::string to_string(NoGoKind kind) {
  return kind == NoGoKind::PowerRaising ? "power-raising" : "dual-power-lowering";
}

std::string to_string(SeriesClass c) { return c == SeriesClass::Convergent ? "convergent" : "divergent"; }

Complex NoGoFamily::kernel_parameter() const {
  return kind == NoGoKind::PowerRaising ? alpha : std::conj(beta);
}

double kernel_ratio(double abs_parameter, int power, Index k) {
  if (abs_parameter == 0.0) return 0.0;
  return std::exp(log_kernel_ratio(abs_parameter, power, k));
}

KernelRecurrence solve_kernel(const NoGoFamily& family, Index k_max) {
  require_power(family, "solve_kernel");
  if (k_max < 1) throw std::invalid_argument("solve_kernel: k_max must be >= 1");
  const double abs_p = std::abs(family.kernel_parameter());
  if (!std::isfinite(abs_p)) throw std::invalid_argument("solve_kernel: non-finite parameter");

  KernelRecurrence rec;
  rec.family = family;
  rec.log_sq_coeffs.emplace_back(0, 0.0);
  rec.ratios.reserve(static_cast<std::size_t>(k_max));
  double log_c = 0.0;
  const Index stride = family.power + 1;
  for (Index k = 0; k < k_max; ++k) {
    if (abs_p == 0.0) {
      rec.ratios.push_back(0.0);
      continue;
    }
    const double lr = log_kernel_ratio(abs_p, family.power, k);
    log_c += lr;
    rec.ratios.push_back(std::exp(lr));
    rec.log_sq_coeffs.emplace_back((k + 1) * stride, log_c);
  }
  return rec;
}

Vector kernel_coefficients(const NoGoFamily& family, Index n_max) {
  require_power(family, "kernel_coefficients");
  if (n_max < 0) throw std::invalid_argument("kernel_coefficients: negative n_max");
  const Complex lambda = family.kernel_parameter();
  const int p = family.power;
  Vector c = Vector::Zero(n_max + 1);
  c(0) = 1.0;
  for (Index j = p; j + 1 <= n_max; ++j) {
    const double w = std::exp(0.5 * (series::log_factorial(j) - series::log_factorial(j - p)));
    c(j + 1) = lambda * c(j - p) * w / std::sqrt(static_cast<double>(j + 1));
  }
  return c;
}

Classification classify(const KernelRecurrence& rec, const ClassifyOptions& options) {
  const auto window = static_cast<Index>(rec.ratios.size());
  if (window < options.min_terms)
    throw std::invalid_argument("classify: need at least " + std::to_string(options.min_terms) + " ratio terms, got " +
                                std::to_string(window));
  Classification out;
  const double abs_p = std::abs(rec.family.kernel_parameter());
  if (abs_p == 0.0) {
    out.series_class = SeriesClass::Convergent;
    return out;
  }

  // Walk back from the end of the window while the ratios stay above 1 and increase.
  Index k = window - 1;
  if (!(rec.ratios[static_cast<std::size_t>(k)] > 1.0)) {
    const Index crossing = crossing_of(abs_p, rec.family.power);
    throw InconclusiveWindow("classify: window of " + std::to_string(window) +
                                 " terms ends before the ratio passes 1 (expected near k = " + std::to_string(crossing) + ")",
                             crossing);
  }
  while (k > 0 && rec.ratios[static_cast<std::size_t>(k - 1)] > 1.0 &&
         rec.ratios[static_cast<std::size_t>(k - 1)] < rec.ratios[static_cast<std::size_t>(k)])
    --k;
  out.series_class = SeriesClass::Divergent;
  out.crossing_index = k;

  const double log_threshold = std::log(options.blow_up_threshold);
  double log_sum = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < rec.log_sq_coeffs.size(); ++i) {
    log_sum = series::log_add(log_sum, rec.log_sq_coeffs[i].second);
    if (log_sum > log_threshold) {
      out.blow_up_index = static_cast<Index>(i);
      break;
    }
  }
  return out;
}

NoGoPair build_nogo_pair(const NoGoFamily& family, const FockSpace& space) {
  require_power(family, "build_nogo_pair");
  if (space.factors() != 1) throw std::invalid_argument("build_nogo_pair: needs a one-mode space");
  const FockOperator a = annihilator(space);
  const FockOperator ad = creator(space);
  const FockOperator id = FockOperator::identity(space);
  if (family.kind == NoGoKind::PowerRaising)
    return NoGoPair{family, a - family.alpha * power_of(ad, family.power), ad - family.beta * id};
  return NoGoPair{family, a - family.alpha * id, ad - family.beta * power_of(a, family.power)};
}

NoGoCommutatorReport nogo_commutator_check(const NoGoFamily& family, const FockSpace& space) {
  const NoGoPair pair = build_nogo_pair(family, space);
  NoGoCommutatorReport r;
  r.margin = family.power + 1;
  r.commutator_defect = interior_defect(commutator(pair.A, pair.B), FockOperator::identity(space), r.margin);
  r.adjoint_gap = max_entry_diff(adjoint(pair.A), pair.B);
  return r;
}

} // namespace pbfock
