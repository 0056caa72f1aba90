// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// Power deformations for which [A, B] = 1 still holds but no normalizable
// vacuum exists.
//
//   PowerRaising(p, alpha, beta):       A = a - alpha a^dagger^p,  B = a^dagger - beta
//   DualPowerLowering(m, alpha, beta):  A = a - alpha,             B = a^dagger - beta a^m
//
// A formal kernel vector sum c_n Phi_n of a - alpha a^dagger^p obeys
//   c_1 = ... = c_p = 0,  c_{j+1} sqrt(j+1) = alpha c_{j-p} sqrt(j!/(j-p)!)
// so only c_{k(p+1)} survive, and the squared ratio between consecutive
// survivors grows without bound unless alpha = 0. The dual family fails on
// the other side: B^dagger = a - conj(beta) a^m has the same recurrence.

#pragma once

#include "pbfock/fock.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pbfock {

enum class NoGoKind { PowerRaising, DualPowerLowering };

std::string to_string(NoGoKind kind);

struct NoGoFamily {
  NoGoKind kind = NoGoKind::PowerRaising;
  int power = 2;
  Complex alpha{0.0, 0.0};
  Complex beta{0.0, 0.0};

  // Coefficient multiplying the power in the kernel equation:
  // alpha for PowerRaising, conj(beta) for DualPowerLowering.
  Complex kernel_parameter() const;
};

enum class SeriesClass { Convergent, Divergent };

std::string to_string(SeriesClass c);

struct KernelRecurrence {
  NoGoFamily family;
  // (n, log|c_n|^2) for the nonzero coefficients, c_0 = 1
  std::vector<std::pair<Index, double>> log_sq_coeffs;
  // ratios[k] = |c_{(k+1)(p+1)}|^2 / |c_{k(p+1)}|^2
  std::vector<double> ratios;
};

// First k_max nonzero-coefficient steps of the kernel recurrence, in log domain.
KernelRecurrence solve_kernel(const NoGoFamily& family, Index k_max);

// Closed form of ratios[k]: |lambda|^2 j! / ((j-p)! (j+1)) with j = (k+1)(p+1) - 1.
double kernel_ratio(double abs_parameter, int power, Index k);

// c_0..c_{n_max} with their phases, by the direct recurrence (small n_max only).
Vector kernel_coefficients(const NoGoFamily& family, Index n_max);

class InconclusiveWindow : public std::domain_error {
public:
  InconclusiveWindow(const std::string& what, Index crossing_estimate)
      : std::domain_error(what), crossing_estimate_(crossing_estimate) {}
  // First k with ratios[k] > 1, from the closed-form ratio.
  Index crossing_estimate() const { return crossing_estimate_; }

private:
  Index crossing_estimate_;
};

struct ClassifyOptions {
  double blow_up_threshold = 1e12;
  Index min_terms = 10;
};

struct Classification {
  SeriesClass series_class = SeriesClass::Convergent;
  // first k from which ratios[k] > 1 and increasing through the window
  std::optional<Index> crossing_index;
  // first k whose partial sum sum_{i <= k} |c_{i(p+1)}|^2 passes the threshold
  std::optional<Index> blow_up_index;
};

Classification classify(const KernelRecurrence& rec, const ClassifyOptions& options = {});

struct NoGoPair {
  NoGoFamily family;
  FockOperator A;
  FockOperator B;
};

NoGoPair build_nogo_pair(const NoGoFamily& family, const FockSpace& space);

struct NoGoCommutatorReport {
  double commutator_defect = 0.0;   // interior max |[A,B] - 1| with margin p+1
  double adjoint_gap = 0.0;         // max |A^dagger - B|
  Index margin = 0;
};

NoGoCommutatorReport nogo_commutator_check(const NoGoFamily& family, const FockSpace& space);

} // namespace pbfock
