// Copyright 2026 The pbfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "cli.hpp"

#include <pbfock/intertwine.hpp>
#include <pbfock/landau.hpp>
#include <pbfock/nogo.hpp>
#include <pbfock/pairs.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

namespace pbfock::cli {

namespace {

constexpr const char* kVersion = "0.1.0";

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

double parse_real(const std::string& text, const std::string& what) {
  const char* begin = text.c_str();
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(begin, &end);
  while (end && *end == ' ') ++end;
  if (end == begin || *end != '\0' || errno == ERANGE || !std::isfinite(v))
    throw UsageError("malformed " + what + ": '" + text + "'");
  return v;
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::map<std::string, double> default_tolerances(const std::string& command) {
  if (command == "verify")
    return {{"commutator", 1e-12},        {"biorthonormality", 1e-10}, {"vacuum", 1e-12},
            {"number_eigen", 1e-9},       {"dual_number_eigen", 1e-8}, {"frame_action", 1e-9},
            {"intertwining", 1e-9},       {"frame_hermiticity", 1e-12}, {"frame_positivity", 1e-10},
            {"reconstruction", 1e-9}};
  if (command == "landau")
    return {{"commutator", 1e-12},   {"coordinate_form", 1e-10}, {"biorthonormality", 1e-9},
            {"factorization", 1e-12}, {"spectrum", 1e-9},        {"dual_spectrum", 1e-8},
            {"incompleteness", 1e-9}, {"f_norm_min", 1.0}};
  if (command == "nogo") return {{"commutator", 1e-12}, {"adjoint_gap_min", 1e-12}};
  return {};
}

Value opt(double x) { return std::isfinite(x) ? Value(x) : Value(); }
Value opt(std::optional<Index> i) { return i ? Value(static_cast<std::int64_t>(*i)) : Value(); }
Value integer(Index i) { return Value(static_cast<std::int64_t>(i)); }

std::string complex_text(Complex z) {
  return z.imag() == 0.0 ? format_double(z.real()) : format_double(z.real()) + "," + format_double(z.imag());
}

void add_meta(Report& r, const RunConfig& cfg) {
  r.meta = {{"tool", std::string("pbfock")},
            {"version", std::string(kVersion)},
            {"command", cfg.command},
            {"family", cfg.family},
            {"alpha", complex_text(cfg.alpha)},
            {"beta", complex_text(cfg.beta)},
            {"dim", integer(cfg.dim)},
            {"nmax", integer(cfg.nmax)},
            {"margin", integer(cfg.margin)},
            {"format", cfg.format},
            {"out", cfg.out},
            {"config", cfg.config}};
  if (cfg.command == "sweep") r.meta.emplace_back("grid", cfg.grid);
  if (cfg.command == "nogo") {
    r.meta.emplace_back("power", static_cast<std::int64_t>(cfg.power));
    r.meta.emplace_back("kmax", integer(cfg.kmax));
    r.meta.emplace_back("dual", cfg.dual);
  }
  for (const auto& [name, tol] : cfg.tolerances) r.meta.emplace_back("tol." + name, tol);
}

double tol(const RunConfig& cfg, const std::string& name) { return cfg.tolerances.at(name); }

FamilyKind family_kind(const std::string& name) {
  if (name == "gauss-lowering") return FamilyKind::GaussLowering;
  if (name == "gauss-raising") return FamilyKind::GaussRaising;
  throw UsageError("unknown family '" + name + "' (expected gauss-lowering or gauss-raising)");
}

DeformationFamily one_mode_family(const RunConfig& cfg) {
  const FamilyKind kind = family_kind(cfg.family);
  return {kind, kind == FamilyKind::GaussLowering ? cfg.alpha : cfg.beta};
}

double relative(double residual, double scale) { return scale > 0.0 ? residual / scale : residual; }

const FockVector& at(const std::vector<FockVector>& v, Index n) { return v[static_cast<std::size_t>(n)]; }

} // namespace

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) return {parse_real(trim(text), "complex parameter"), 0.0};
  return {parse_real(trim(text.substr(0, comma)), "complex parameter"),
          parse_real(trim(text.substr(comma + 1)), "complex parameter")};
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(trim(p));
    if (parts.size() != 3) throw UsageError("malformed grid '" + text + "' (expected start:stop:step)");
    const double start = parse_real(parts[0], "grid start");
    const double stop = parse_real(parts[1], "grid stop");
    const double step = parse_real(parts[2], "grid step");
    if (!(step > 0.0) || stop < start) throw UsageError("malformed grid '" + text + "' (need step > 0 and stop >= start)");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 100000) throw UsageError("grid '" + text + "' has too many points");
    for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
  } else {
    std::stringstream ss(text);
    for (std::string p; std::getline(ss, p, ',');) out.push_back(parse_real(trim(p), "grid value"));
  }
  if (out.empty()) throw UsageError("empty grid");
  for (double v : out)
    if (v < 0.0 || v > 1.0) throw UsageError("grid value " + format_double(v) + " outside [0, 1]");
  return out;
}

Report run_verify(const RunConfig& cfg) {
  Report r;
  add_meta(r, cfg);
  const DeformationFamily fam = one_mode_family(cfg);
  const FockSpace space(cfg.dim);
  const PseudoBosonPair pair = build_pair(fam, space);
  const BiorthogonalSystem sys = build_system(fam, space, cfg.nmax);
  const AssumptionReport rep = assumption_report(fam, space, cfg.nmax);
  const Index n_max = cfg.nmax;

  r.checks.push_back(make_check("commutator",
                                interior_defect(commutator(pair.A, pair.B), FockOperator::identity(space), cfg.margin),
                                tol(cfg, "commutator"), Comparison::AtMost,
                                "canonical commutation [A, B] = 1 away from the truncation boundary"));
  r.checks.push_back(make_check("biorthonormality", sys.max_pairing_defect(), tol(cfg, "biorthonormality"), Comparison::AtMost,
                                "<Psi_n, phi_m> = delta_nm"));
  r.checks.push_back(make_check("vacuum", rep.vacuum_residual, tol(cfg, "vacuum"), Comparison::AtMost, "A phi_0 = 0"));
  r.checks.push_back(
      make_check("dual_vacuum", rep.dual_vacuum_residual, tol(cfg, "vacuum"), Comparison::AtMost, "B^dagger Psi_0 = 0"));

  double num = 0.0, dual_num = 0.0;
  for (Index n = 0; n <= n_max; ++n) {
    num = std::max(num, number_eigen_residual(pair, sys, n));
    dual_num = std::max(dual_num, dual_number_eigen_residual(pair, sys, n));
  }
  r.checks.push_back(make_check("number_eigen", num, tol(cfg, "number_eigen"), Comparison::AtMost,
                                "N phi_n = n phi_n with N = B A (relative residual)"));
  r.checks.push_back(make_check("dual_number_eigen", dual_num, tol(cfg, "dual_number_eigen"), Comparison::AtMost,
                                "N^dagger Psi_n = n Psi_n (relative residual)"));

  const FrameOperator s_phi = frame_operator(sys, FrameSide::Phi, n_max);
  const FrameOperator s_psi = frame_operator(sys, FrameSide::Psi, n_max);
  double action = 0.0, inter = 0.0;
  for (Index n = 0; n <= n_max; ++n) {
    const FrameActionResidual a = frame_action_check(s_phi, s_psi, sys, n);
    action = std::max({action, relative(a.phi_from_psi, norm(at(sys.phis, n))), relative(a.psi_from_phi, norm(at(sys.psis, n)))});
    if (n < n_max) {
      const IntertwiningResidual i = intertwining_check(s_phi, s_psi, sys, pair, n);
      const double scale = static_cast<double>(n + 1);
      inter = std::max({inter, relative(i.psi_frame, scale * norm(at(sys.psis, n))),
                        relative(i.phi_frame, scale * norm(at(sys.phis, n)))});
    }
  }
  r.checks.push_back(make_check("frame_action", action, tol(cfg, "frame_action"), Comparison::AtMost,
                                "S_phi Psi_n = phi_n and S_Psi phi_n = Psi_n (relative residual)"));
  r.checks.push_back(make_check("intertwining", inter, tol(cfg, "intertwining"), Comparison::AtMost,
                                "S_Psi N = N^dagger S_Psi and N S_phi = S_phi N^dagger on the family (relative residual)"));
  r.checks.push_back(make_check("frame_hermiticity", std::max(s_phi.hermiticity_defect(), s_psi.hermiticity_defect()),
                                tol(cfg, "frame_hermiticity"), Comparison::AtMost, "frame operators are self-adjoint"));
  r.checks.push_back(make_check("frame_positivity", std::max({0.0, -s_phi.min_eigenvalue(), -s_psi.min_eigenvalue()}),
                                tol(cfg, "frame_positivity"), Comparison::AtMost,
                                "frame operators are positive (negative part of the smallest eigenvalue)"));
  r.checks.push_back(make_check("reconstruction", rep.reconstruction_residual, tol(cfg, "reconstruction"), Comparison::AtMost,
                                "finite-support vectors are reproduced by their finite biorthogonal expansion"));
  r.checks.push_back(not_applicable("coordinate_form", "deformed Hamiltonian equals its quadratic form in Q, P",
                                    "two-mode check, run the landau subcommand"));
  r.checks.push_back(not_applicable("single_index_incompleteness", "the one-index family eta_n misses a nonzero vector",
                                    "two-mode check, run the landau subcommand"));

  const bool lowering = fam.kind == FamilyKind::GaussLowering;
  Table family{"family", {"n", "phi_norm", "psi_norm", "omega", "series_side_tail_bound"}, {}};
  for (Index n = 0; n <= n_max; ++n) {
    const FockVector& series_side = lowering ? at(sys.psis, n) : at(sys.phis, n);
    family.rows.push_back({integer(n), norm(at(sys.phis, n)), norm(at(sys.psis, n)), sys.omega[static_cast<std::size_t>(n)],
                           opt(series_side.tail_bound())});
  }
  Table growth{"frame_growth", {"order", "lambda_max_phi", "lambda_max_psi"}, {}};
  for (Index order = 0; order <= n_max; ++order)
    growth.rows.push_back({integer(order), frame_operator(sys, FrameSide::Phi, order).max_eigenvalue(),
                           frame_operator(sys, FrameSide::Psi, order).max_eigenvalue()});
  Table riesz{"riesz_diagnostic", {"omega_growth", "omega_nondecreasing_step2", "failure_evidence"}, {}};
  riesz.rows.push_back({rep.omega_growth, rep.omega_nondecreasing, rep.riesz_failure_evidence});
  r.tables = {std::move(family), std::move(growth), std::move(riesz)};
  return r;
}

Report run_sweep(const RunConfig& cfg) {
  Report r;
  add_meta(r, cfg);
  const FamilyKind kind = family_kind(cfg.family);
  const FockSpace space(cfg.dim);
  const auto n = static_cast<long>(cfg.grid_values.size());
  std::vector<std::vector<Value>> rows(static_cast<std::size_t>(n));
  std::vector<std::string> errors(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      const double p = cfg.grid_values[static_cast<std::size_t>(i)];
      const DeformationFamily fam{kind, p};
      const RadiusClassification rc = radius_scan(fam, 0, {Complex(p)}).front();
      std::vector<Value> row{p, rc.limit_ratio, std::string(rc.convergent ? "convergent" : "divergent")};
      if (rc.convergent) {
        const FockVector vac = kind == FamilyKind::GaussLowering ? psi_series(fam, 0, space) : phi_closed_form(fam, 0, space);
        const double nv = norm(vac);
        const BiorthogonalSystem sys = build_system(fam, space, cfg.nmax);
        row.insert(row.end(), {nv * nv, 1.0 / std::sqrt(1.0 - 4.0 * p * p), opt(vac.tail_bound() * vac.tail_bound()),
                               sys.omega.back() / sys.omega.front(),
                               frame_operator(sys, FrameSide::Phi, cfg.nmax).max_eigenvalue()});
      } else {
        row.insert(row.end(), {Value(), Value(), Value(), Value(), Value()});
      }
      row.push_back(opt(rc.blow_up_index));
      rows[static_cast<std::size_t>(i)] = std::move(row);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);

  r.tables.push_back(Table{"sweep",
                           {"parameter", "limit_ratio", "classification", "series_vacuum_norm_sq", "closed_form_norm_sq",
                            "tail_bound_sq", "omega_ratio", "frame_max_eigenvalue", "blow_up_index"},
                           std::move(rows)});
  r.csv_table = "sweep";
  return r;
}

Report run_nogo(const RunConfig& cfg) {
  Report r;
  add_meta(r, cfg);
  r.meta.emplace_back("note", std::string("the constant shift in B does not enter the kernel recurrence of A"));
  const NoGoFamily fam{cfg.dual ? NoGoKind::DualPowerLowering : NoGoKind::PowerRaising, cfg.power, cfg.alpha, cfg.beta};
  const FockSpace space(cfg.dim);
  const NoGoCommutatorReport comm = nogo_commutator_check(fam, space);
  r.checks.push_back(make_check("commutator", comm.commutator_defect, tol(cfg, "commutator"), Comparison::AtMost,
                                "[A, B] = 1 holds for the power deformation away from the truncation boundary"));
  if (cfg.alpha == Complex(0.0) && cfg.beta == Complex(0.0))
    r.checks.push_back(not_applicable("adjoint_gap", "A^dagger differs from B", "undeformed pair"));
  else
    r.checks.push_back(make_check("adjoint_gap", comm.adjoint_gap, tol(cfg, "adjoint_gap_min"), Comparison::AtLeast,
                                  "A^dagger differs from B (largest entry of A^dagger - B)"));

  const KernelRecurrence rec = solve_kernel(fam, cfg.kmax);
  Table summary{"classification", {"kernel_parameter_abs", "classification", "crossing_index", "blow_up_index"}, {}};
  const double abs_p = std::abs(fam.kernel_parameter());
  try {
    const Classification c = classify(rec);
    summary.rows.push_back({abs_p, to_string(c.series_class), opt(c.crossing_index), opt(c.blow_up_index)});
    if (c.crossing_index)
      r.checks.push_back(make_check("classification_window", static_cast<double>(cfg.kmax),
                                    static_cast<double>(*c.crossing_index + 1), Comparison::AtLeast,
                                    "window reaches the index where the coefficient ratio exceeds 1"));
    else
      r.checks.push_back(not_applicable("classification_window", "window reaches the ratio crossing", "kernel parameter is 0"));
  } catch (const InconclusiveWindow& e) {
    summary.rows.push_back({abs_p, std::string("inconclusive"), integer(e.crossing_estimate()), Value()});
    r.checks.push_back(make_check("classification_window", static_cast<double>(cfg.kmax),
                                  static_cast<double>(e.crossing_estimate() + 1), Comparison::AtLeast,
                                  "window reaches the index where the coefficient ratio exceeds 1"));
  }

  Table coeffs{"coefficients", {"k", "index", "log10_abs_c_sq", "ratio_to_next"}, {}};
  for (std::size_t k = 0; k < rec.log_sq_coeffs.size(); ++k) {
    const auto& [index, lc] = rec.log_sq_coeffs[k];
    coeffs.rows.push_back({static_cast<std::int64_t>(k), integer(index), lc / std::log(10.0),
                           k < rec.ratios.size() ? Value(rec.ratios[k]) : Value()});
  }
  r.tables = {std::move(summary), std::move(coeffs)};
  r.csv_table = "coefficients";
  return r;
}

Report run_landau(const RunConfig& cfg) {
  Report r;
  add_meta(r, cfg);
  const Index algebra_dim = std::min<Index>(cfg.dim, 24);
  r.meta.emplace_back("algebra_dim", integer(algebra_dim));
  r.meta.emplace_back("counterexample_nmax", integer(2 * cfg.nmax));
  if (!(std::abs(cfg.alpha) < 0.5) || !(std::abs(cfg.beta) < 0.5))
    throw SeriesDivergence("landau: both |alpha| and |beta| must lie in the convergence disk |parameter| < 1/2",
                           std::max(std::abs(cfg.alpha), std::abs(cfg.beta)));

  {
    const LandauModel small(algebra_dim, cfg.alpha, cfg.beta);
    const FockOperator id = FockOperator::identity(small.space());
    const FockOperator zero = FockOperator::zero(small.space());
    double comm = 0.0;
    for (int k : {1, 2}) comm = std::max(comm, interior_defect(commutator(small.lifted_A(k), small.lifted_B(k)), id, cfg.margin));
    comm = std::max({comm, max_entry_diff(commutator(small.lifted_A(1), small.lifted_B(2)), zero),
                     max_entry_diff(commutator(small.lifted_A(2), small.lifted_B(1)), zero),
                     max_entry_diff(commutator(small.lifted_A(1), small.lifted_A(2)), zero)});
    r.checks.push_back(make_check("commutator", comm, tol(cfg, "commutator"), Comparison::AtMost,
                                  "[A_j, B_k] = delta_jk and [A_1, A_2] = 0 on the two-mode space"));
    const SingleIndexPair xy = single_index_pair(small);
    r.checks.push_back(make_check("single_index_commutator", interior_defect(commutator(xy.X, xy.Y), id, cfg.margin),
                                  tol(cfg, "commutator"), Comparison::AtMost,
                                  "[X, Y] = 1 for X = (A_1 + A_2)/sqrt(2), Y = (B_1 + B_2)/sqrt(2)"));
    r.checks.push_back(make_check("coordinate_form",
                                  std::max(coordinate_form_defect(small, 1, cfg.margin), coordinate_form_defect(small, 2, cfg.margin)),
                                  tol(cfg, "coordinate_form"), Comparison::AtMost,
                                  "h_1, h_2 equal their quadratic forms in the guiding-center quadratures"));
  }

  const LandauModel model(cfg.dim, cfg.alpha, cfg.beta);
  const TwoIndexSystem fam = two_index_family(model, cfg.nmax, cfg.nmax);
  r.checks.push_back(make_check("biorthonormality", fam.system.max_pairing_defect(), tol(cfg, "biorthonormality"),
                                Comparison::AtMost, "<Psi_{n,m}, phi_{k,l}> = delta_nk delta_ml"));
  r.checks.push_back(make_check("factorization", factorization_defect(model, fam), tol(cfg, "factorization"), Comparison::AtMost,
                                "two-mode vectors are tensor products of the one-mode families"));

  double spec = 0.0, dual_spec = 0.0;
  for (int which : {1, 2}) {
    const FockOperator h = deformed_hamiltonian(model, which);
    const FockOperator hd = adjoint(h);
    for (Index n = 0; n <= cfg.nmax; ++n)
      for (Index m = 0; m <= cfg.nmax; ++m) {
        const double e = (which == 1 ? n : m) + 0.5;
        spec = std::max(spec, eigen_residual(h, fam.phi(n, m), e));
        dual_spec = std::max(dual_spec, eigen_residual(hd, fam.psi(n, m), e));
      }
  }
  r.checks.push_back(make_check("spectrum", spec, tol(cfg, "spectrum"), Comparison::AtMost,
                                "h_1 phi_{n,m} = (n + 1/2) phi_{n,m}, h_2 phi_{n,m} = (m + 1/2) phi_{n,m} (relative residual)"));
  r.checks.push_back(make_check("dual_spectrum", dual_spec, tol(cfg, "dual_spectrum"), Comparison::AtMost,
                                "adjoint Hamiltonians on Psi_{n,m} (relative residual)"));

  const CounterexampleResult ce = single_index_counterexample(model, 2 * cfg.nmax);
  r.checks.push_back(make_check("incompleteness", ce.max_overlap, tol(cfg, "incompleteness"), Comparison::AtMost,
                                "f = Psi_1 (x) Psi_0 - Psi_0 (x) Psi_1 is orthogonal to every eta_n"));
  r.checks.push_back(make_check("incompleteness_norm", ce.f_norm, tol(cfg, "f_norm_min"), Comparison::AtLeast,
                                "the orthogonal vector f is nonzero"));

  Table overlaps{"single_index_overlaps", {"n", "abs_overlap"}, {}};
  for (std::size_t n = 0; n < ce.overlaps.size(); ++n)
    overlaps.rows.push_back({static_cast<std::int64_t>(n), ce.overlaps[n]});
  r.tables = {std::move(overlaps)};
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"pbfock: pseudo-bosonic ladder pairs on truncated Fock spaces"};
  app.require_subcommand(1);
  CLI::Option* config_opt = app.set_config("--config", "", "key=value file merged under the command line flags");
  app.allow_config_extras(CLI::config_extras_mode::error);

  RunConfig cfg;
  std::vector<std::string> tol_args;
  std::string alpha_text = "0.3", beta_text = "0.2";
  long long dim = 0, nmax = 0, margin = 0, kmax = 50;
  app.add_option("--family", cfg.family, "gauss-lowering or gauss-raising")->capture_default_str();
  auto* alpha_opt = app.add_option("--alpha", alpha_text, "parameter alpha, 're' or 're,im'")->capture_default_str();
  auto* beta_opt = app.add_option("--beta", beta_text, "parameter beta, 're' or 're,im'")->capture_default_str();
  auto* dim_opt = app.add_option("--dim", dim, "retained states per factor");
  auto* nmax_opt = app.add_option("--nmax", nmax, "largest family index");
  auto* margin_opt = app.add_option("--margin", margin, "boundary band excluded from operator identities");
  app.add_option("--tol", tol_args, "tolerance override name=value (repeatable)");
  app.add_option("--out", cfg.out, "write the report to this path");
  app.add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}))->capture_default_str();
  app.add_option("--grid", cfg.grid, "sweep grid: a,b,c or start:stop:step");
  app.add_option("--power", cfg.power, "power p (or m) of the no-go deformation")->capture_default_str();
  app.add_option("--kmax", kmax, "number of nonzero kernel coefficients")->capture_default_str();
  app.add_flag("--dual", cfg.dual, "use the dual family A = a - alpha, B = a^dagger - beta a^m");

  std::vector<CLI::App*> subs{app.add_subcommand("verify", "one-mode invariant suite for a Gaussian family"),
                              app.add_subcommand("sweep", "tabulate convergence and frame growth over a parameter grid"),
                              app.add_subcommand("nogo", "kernel recurrence and commutator of a power deformation"),
                              app.add_subcommand("landau", "two-mode Landau-level suite")};
  for (auto* s : subs) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    for (auto* s : subs)
      if (s->parsed()) cfg.command = s->get_name();
    if (config_opt->count()) cfg.config = config_opt->as<std::string>();

    const bool landau = cfg.command == "landau";
    cfg.dim = dim_opt->count() ? dim : (landau ? 48 : cfg.command == "nogo" ? 64 : 96);
    cfg.nmax = nmax_opt->count() ? nmax : (landau ? 6 : 16);
    cfg.margin = margin_opt->count() ? margin : (landau ? 4 : 2);
    cfg.kmax = kmax;
    cfg.alpha = parse_complex(alpha_text);
    cfg.beta = parse_complex(beta_text);
    if (cfg.command == "nogo") {
      cfg.family = to_string(cfg.dual ? NoGoKind::DualPowerLowering : NoGoKind::PowerRaising);
      if (!alpha_opt->count()) cfg.alpha = cfg.dual ? 0.0 : 1.0;
      if (!beta_opt->count()) cfg.beta = cfg.dual ? 1.0 : 0.0;
    }

    if (cfg.command != "nogo") family_kind(cfg.family);
    if (cfg.dim < 2) throw UsageError("--dim must be >= 2");
    if (cfg.nmax < 0 || cfg.margin < 0) throw UsageError("--nmax and --margin must be nonnegative");
    const Index needed = (landau ? 2 * cfg.nmax : cfg.nmax) + cfg.margin + 2;
    if (cfg.command != "nogo" && cfg.dim < needed)
      throw UsageError("--dim " + std::to_string(cfg.dim) + " too small: need dim >= " + std::string(landau ? "2*nmax" : "nmax") +
                       " + margin + 2 = " + std::to_string(needed));
    if (cfg.command == "nogo") {
      if (cfg.power < 2) throw UsageError("--power must be >= 2 (power 1 is the linear Gaussian deformation)");
      if (cfg.kmax < 10) throw UsageError("--kmax must be >= 10 to see the ratio trend");
      if (cfg.dim < cfg.power + 3) throw UsageError("--dim too small for the power band: need dim >= power + 3");
    }
    if (cfg.command == "sweep") {
      if (cfg.grid.empty()) cfg.grid = "0.1,0.2,0.3,0.4,0.45";
      cfg.grid_values = parse_grid(cfg.grid);
    }

    cfg.tolerances = default_tolerances(cfg.command);
    for (const auto& t : tol_args) {
      const auto eq = t.find('=');
      if (eq == std::string::npos) throw UsageError("malformed --tol '" + t + "' (expected name=value)");
      const std::string name = trim(t.substr(0, eq));
      if (!cfg.tolerances.count(name)) throw UsageError("unknown tolerance '" + name + "' for " + cfg.command);
      const double v = parse_real(trim(t.substr(eq + 1)), "tolerance");
      if (!(v > 0.0)) throw UsageError("tolerance '" + name + "' must be positive");
      cfg.tolerances[name] = v;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  Report report;
  try {
    if (cfg.command == "verify") report = run_verify(cfg);
    else if (cfg.command == "sweep") report = run_sweep(cfg);
    else if (cfg.command == "nogo") report = run_nogo(cfg);
    else report = run_landau(cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kCheckFailure;
  }

  std::ostringstream body;
  if (cfg.format == "json") write_json(body, report);
  else if (cfg.format == "csv") write_csv(body, report);
  else write_text(body, report);

  const bool ok = report.all_pass();
  if (cfg.out.empty()) {
    out << body.str();
  } else {
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) {
      err << "error: cannot open " << cfg.out << " for writing\n";
      return kUsageError;
    }
    f << body.str();
    std::size_t failed = 0;
    for (const auto& c : report.checks) failed += c.status == Status::Fail;
    out << cfg.command << ": " << (ok ? "pass" : "FAIL") << " (" << report.checks.size() << " checks, " << failed
        << " failed), report written to " << cfg.out << '\n';
  }
  if (!ok)
    for (const auto& c : report.checks)
      if (c.status == Status::Fail)
        err << "check failed: " << c.name << " observed " << format_double(c.observed) << " vs tolerance "
            << format_double(c.tolerance) << '\n';
  return ok ? kPass : kCheckFailure;
}

} // namespace pbfock::cli
