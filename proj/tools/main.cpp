// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return pbfock::cli::run_cli(argc, argv, std::cout, std::cerr); }
