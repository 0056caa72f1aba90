// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <cmath>
#include <cstdio>

namespace pbfock::cli {

namespace {

void json_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (const char c : s) {
    switch (c) {
    case '"': os << "\\\""; break;
    case '\\': os << "\\\\"; break;
    case '\n': os << "\\n"; break;
    case '\t': os << "\\t"; break;
    default:
      if (static_cast<unsigned char>(c) < 0x20) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\u%04x", c);
        os << buf;
      } else {
        os << c;
      }
    }
  }
  os << '"';
}

void json_double(std::ostream& os, double x) {
  if (std::isfinite(x))
    os << format_double(x);
  else
    os << "null";
}

void json_value(std::ostream& os, const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) os << "null";
  else if (const bool* b = std::get_if<bool>(&v)) os << (*b ? "true" : "false");
  else if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) os << *i;
  else if (const double* d = std::get_if<double>(&v)) json_double(os, *d);
  else json_string(os, std::get<std::string>(v));
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string plain(const Value& v) {
  if (std::holds_alternative<std::monostate>(v)) return "";
  if (const bool* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (const std::int64_t* i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  if (const double* d = std::get_if<double>(&v)) return std::isfinite(*d) ? format_double(*d) : "";
  return std::get<std::string>(v);
}

const char* symbol(Comparison c) { return c == Comparison::AtMost ? "<=" : ">="; }

} // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_string(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::NotApplicable: return "not-applicable";
  }
  return "unknown";
}

Check make_check(std::string name, double observed, double tolerance, Comparison cmp, std::string provenance) {
  Check c{std::move(name), observed, tolerance, cmp, Status::Fail, std::move(provenance)};
  const bool ok = cmp == Comparison::AtMost ? observed <= tolerance : observed >= tolerance;
  c.status = ok ? Status::Pass : Status::Fail;
  return c;
}

Check not_applicable(std::string name, std::string provenance, std::string reason) {
  Check c;
  c.name = std::move(name);
  c.observed = std::nan("");
  c.tolerance = std::nan("");
  c.provenance = std::move(provenance) + " (" + reason + ")";
  return c;
}

bool Report::all_pass() const {
  for (const auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

void write_json(std::ostream& os, const Report& r) {
  os << "{\n  \"meta\": {";
  for (std::size_t i = 0; i < r.meta.size(); ++i) {
    os << (i ? ",\n    " : "\n    ");
    json_string(os, r.meta[i].first);
    os << ": ";
    json_value(os, r.meta[i].second);
  }
  os << (r.meta.empty() ? "}" : "\n  }") << ",\n  \"checks\": [";
  for (std::size_t i = 0; i < r.checks.size(); ++i) {
    const Check& c = r.checks[i];
    os << (i ? ",\n    {" : "\n    {") << "\"name\": ";
    json_string(os, c.name);
    os << ", \"observed\": ";
    json_double(os, c.observed);
    os << ", \"tolerance\": ";
    json_double(os, c.tolerance);
    os << ", \"comparison\": \"" << symbol(c.comparison) << "\", \"pass\": "
       << (c.status == Status::Pass ? "true" : "false") << ", \"status\": \"" << to_string(c.status)
       << "\", \"provenance\": ";
    json_string(os, c.provenance);
    os << '}';
  }
  os << (r.checks.empty() ? "]" : "\n  ]") << ",\n  \"tables\": {";
  for (std::size_t t = 0; t < r.tables.size(); ++t) {
    const Table& tab = r.tables[t];
    os << (t ? ",\n    " : "\n    ");
    json_string(os, tab.name);
    os << ": {\n      \"columns\": [";
    for (std::size_t j = 0; j < tab.columns.size(); ++j) {
      if (j) os << ", ";
      json_string(os, tab.columns[j]);
    }
    os << "],\n      \"rows\": [";
    for (std::size_t i = 0; i < tab.rows.size(); ++i) {
      os << (i ? ",\n        [" : "\n        [");
      for (std::size_t j = 0; j < tab.rows[i].size(); ++j) {
        if (j) os << ", ";
        json_value(os, tab.rows[i][j]);
      }
      os << ']';
    }
    os << (tab.rows.empty() ? "]" : "\n      ]") << "\n    }";
  }
  os << (r.tables.empty() ? "}" : "\n  }") << "\n}\n";
}

void write_csv(std::ostream& os, const Report& r) {
  if (r.csv_table.empty()) {
    os << "name,observed,comparison,tolerance,status,provenance\n";
    for (const auto& c : r.checks)
      os << csv_field(c.name) << ',' << plain(c.observed) << ',' << symbol(c.comparison) << ',' << plain(c.tolerance) << ','
         << to_string(c.status) << ',' << csv_field(c.provenance) << '\n';
    return;
  }
  for (const Table& tab : r.tables) {
    if (tab.name != r.csv_table) continue;
    for (std::size_t j = 0; j < tab.columns.size(); ++j) os << (j ? "," : "") << csv_field(tab.columns[j]);
    os << '\n';
    for (const auto& row : tab.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "," : "") << csv_field(plain(row[j]));
      os << '\n';
    }
  }
}

void write_text(std::ostream& os, const Report& r) {
  for (const auto& [k, v] : r.meta) os << k << " = " << plain(v) << '\n';
  if (!r.checks.empty()) os << '\n';
  for (const auto& c : r.checks) {
    os << '[' << to_string(c.status) << "] " << c.name;
    if (c.status != Status::NotApplicable)
      os << ": " << plain(c.observed) << ' ' << symbol(c.comparison) << ' ' << plain(c.tolerance);
    os << "  -- " << c.provenance << '\n';
  }
  for (const auto& tab : r.tables) {
    os << '\n' << tab.name << '\n';
    for (std::size_t j = 0; j < tab.columns.size(); ++j) os << (j ? "\t" : "") << tab.columns[j];
    os << '\n';
    for (const auto& row : tab.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) os << (j ? "\t" : "") << plain(row[j]);
      os << '\n';
    }
  }
}

} // namespace pbfock::cli
