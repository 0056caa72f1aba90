// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "report.hpp"

#include <pbfock/kernels.hpp>

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace pbfock::cli {

enum ExitCode { kPass = 0, kCheckFailure = 1, kUsageError = 2 };

struct RunConfig {
  std::string command;
  std::string family = "gauss-lowering";
  std::string alpha_text;
  std::string beta_text;
  Complex alpha{0.3, 0.0};
  Complex beta{0.2, 0.0};
  Index dim = 96;
  Index nmax = 16;
  Index margin = 2;
  std::map<std::string, double> tolerances;
  std::string out;
  std::string format = "json";
  std::string config;
  std::string grid;
  std::vector<double> grid_values;
  int power = 2;
  Index kmax = 50;
  bool dual = false;
};

// "re" or "re,im"
Complex parse_complex(const std::string& text);
// "a,b,c" or "start:stop:step" (stop included up to rounding)
std::vector<double> parse_grid(const std::string& text);

Report run_verify(const RunConfig& cfg);
Report run_sweep(const RunConfig& cfg);
Report run_nogo(const RunConfig& cfg);
Report run_landau(const RunConfig& cfg);

// Full command line front end. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pbfock::cli
