// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

// Run reports: ordered metadata, pass/fail checks and plot-ready tables,
// serialized deterministically (fields in insertion order, floats as %.17g,
// non-finite floats as null).

#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace pbfock::cli {

using Value = std::variant<std::monostate, bool, std::int64_t, double, std::string>;

std::string format_double(double x);

enum class Comparison { AtMost, AtLeast };
enum class Status { Pass, Fail, NotApplicable };

std::string to_string(Status s);

struct Check {
  std::string name;
  double observed = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::AtMost;
  Status status = Status::NotApplicable;
  std::string provenance;
};

// observed <= tolerance (AtMost) or observed >= tolerance (AtLeast); NaN fails.
Check make_check(std::string name, double observed, double tolerance, Comparison cmp, std::string provenance);
Check not_applicable(std::string name, std::string provenance, std::string reason);

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;
};

struct Report {
  std::vector<std::pair<std::string, Value>> meta;
  std::vector<Check> checks;
  std::vector<Table> tables;
  std::string csv_table;   // table written by write_csv; empty selects the checks

  bool all_pass() const;
};

void write_json(std::ostream& os, const Report& r);
void write_csv(std::ostream& os, const Report& r);
void write_text(std::ostream& os, const Report& r);

} // namespace pbfock::cli
