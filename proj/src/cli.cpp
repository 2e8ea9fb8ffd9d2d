#include "cylvar/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cylvar/appendix.hpp"
#include "cylvar/hamiltonian.hpp"
#include "cylvar/hydrogen2d.hpp"
#include "cylvar/optimizer.hpp"
#include "cylvar/scan_io.hpp"

namespace cylvar {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int default_jobs() {
  if (const char* env = std::getenv("CYLVAR_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Common {
  int nodes = 64;
  int jobs = default_jobs();
  std::string coulomb = "on";
  std::string format = "csv";
  std::string out;
  std::string config;
};

void add_common(CLI::App* sub, Common& c, bool with_format = true) {
  sub->add_option("--nodes", c.nodes, "quadrature nodes per axis")->check(CLI::Range(8, 4096));
  sub->add_option("--jobs", c.jobs, "worker threads (default: $CYLVAR_JOBS or 1)")->check(CLI::PositiveNumber);
  sub->add_option("--coulomb", c.coulomb, "Coulomb term")->check(CLI::IsMember({"on", "off"}));
  if (with_format) sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "output file (default: stdout)");
  sub->add_option("--config", c.config, "JSON file with option values; flags override it");
}

// Fills options that were not given on the command line from a JSON object whose
// keys are option names with '-' replaced by '_'.
void apply_config(CLI::App* sub, const std::string& path) {
  if (path.empty()) return;
  std::ifstream is(path);
  if (!is) throw UsageError("cannot read config file " + path);
  nlohmann::json cfg;
  try {
    cfg = nlohmann::json::parse(is);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("invalid JSON in " + path + ": " + e.what());
  }
  if (!cfg.is_object()) throw UsageError("config file must hold a JSON object");

  auto to_text = [](const nlohmann::json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return std::string(v.get<bool>() ? "on" : "off");
    return v.dump();
  };
  for (const auto& [key, value] : cfg.items()) {
    std::string name = key;
    std::replace(name.begin(), name.end(), '_', '-');
    CLI::Option* opt = sub->get_option_no_throw("--" + name);
    if (!opt) throw UsageError("unknown config key '" + key + "'");
    if (opt->count() > 0) continue;
    if (value.is_array()) {
      for (const auto& v : value) opt->add_result(to_text(v));
    } else {
      opt->add_result(to_text(value));
    }
    try {
      opt->run_callback();
    } catch (const CLI::Error& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

double parse_radius(const std::string& s) {
  double r = 0.0;
  try {
    r = parse_number(s);
  } catch (const Error&) {
    throw UsageError("invalid radius '" + s + "'");
  }
  if (!(r > 0.0)) throw UsageError("radius must be positive or inf");
  return r;
}

std::vector<double> parse_list(const std::vector<std::string>& items, bool radius) {
  std::vector<double> out;
  for (const auto& s : items) {
    if (radius) {
      out.push_back(parse_radius(s));
      continue;
    }
    try {
      out.push_back(parse_number(s));
    } catch (const Error&) {
      throw UsageError("invalid number '" + s + "'");
    }
    if (!(out.back() >= 0.0)) throw UsageError("magnetic field must be non-negative");
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

QuadratureSpec quadrature(const Common& c) { return {c.nodes, c.nodes, {}, {}}; }

// Output sink: the --out file if given, else `fallback`.
class Sink {
public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw Error("cannot open output file " + path);
      os_ = file_.get();
    }
  }
  std::ostream& get() { return *os_; }
  void finish() {
    os_->flush();
    if (!*os_) throw Error("write failed");
  }

private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

void write_records(std::ostream& os, const std::vector<ScanRecord>& recs, const std::string& format) {
  if (format == "json")
    write_json(os, recs);
  else
    write_csv(os, recs);
}

std::vector<SystemConfig> make_grid(const std::vector<double>& Bs, const std::vector<double>& radii,
                                    bool coulomb_on) {
  std::vector<SystemConfig> grid;
  for (double B : Bs)
    for (double r : radii) grid.push_back({B, r, 0, 0, coulomb_on});
  return grid;
}

void report_failures(const std::vector<ScanRecord>& recs, std::ostream& err) {
  for (const auto& r : recs)
    if (!r.error.empty())
      err << "warning: B=" << format_number(r.B) << " rho0=" << format_number(r.rho0) << ": " << r.error << '\n';
}

void write_density(const std::string& path, const TrialParams& params, const SystemConfig& cfg,
                   double norm) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("cannot open density file " + path);
  const double rho_max = cfg.unconfined() ? 6.0 / params.alpha : cfg.rho0;
  const double z_max = 6.0 / params.alpha;
  constexpr int n_rho = 61;
  constexpr int n_z = 121;
  os << "# rho z density\n";
  for (int i = 0; i < n_rho; ++i) {
    const double rho = rho_max * i / (n_rho - 1);
    for (int j = 0; j < n_z; ++j) {
      const double z = -z_max + 2.0 * z_max * j / (n_z - 1);
      os << format_number(rho) << ' ' << format_number(z) << ' '
         << format_number(density(params, cfg, rho, z) / norm) << '\n';
    }
    os << '\n';
  }
  if (!os) throw Error("write failed for " + path);
}

struct PointArgs {
  double B = 0.0;
  std::string rho0 = "inf";
  double alpha = 0.0, beta = 0.0, nu = 0.0, gamma = 0.0;
  CLI::Option *o_B = nullptr, *o_rho0 = nullptr;
  CLI::Option *o_alpha = nullptr, *o_beta = nullptr, *o_nu = nullptr, *o_gamma = nullptr;
  std::string density_out;
};

void add_point(CLI::App* sub, PointArgs& p, bool with_params) {
  // Required, but checked after --config has been merged.
  p.o_B = sub->add_option("--B", p.B, "magnetic field [a.u.] (required)")->check(CLI::NonNegativeNumber);
  p.o_rho0 = sub->add_option("--rho0", p.rho0, "cylinder radius [a.u.] or inf (required)");
  if (!with_params) return;
  p.o_alpha = sub->add_option("--alpha", p.alpha, "fix alpha");
  p.o_beta = sub->add_option("--beta", p.beta, "fix beta");
  p.o_nu = sub->add_option("--nu", p.nu, "fix nu");
  p.o_gamma = sub->add_option("--gamma", p.gamma, "fix gamma (rho0 = inf only)");
  sub->add_option("--density-out", p.density_out, "write the normalized density on a (rho, z) grid");
}

struct PointResult {
  SystemConfig cfg;
  OptimizeResult res;
  ScanRecord rec;
};

PointResult solve_point(const PointArgs& p, const Common& c) {
  if (p.o_B->count() == 0) throw UsageError("--B is required");
  if (p.o_rho0->count() == 0) throw UsageError("--rho0 is required");
  SystemConfig cfg{p.B, parse_radius(p.rho0), 0, 0, c.coulomb == "on"};
  std::map<Param, double> fixed;
  if (p.o_alpha && p.o_alpha->count()) fixed[Param::alpha] = p.alpha;
  if (p.o_beta && p.o_beta->count()) fixed[Param::beta] = p.beta;
  if (p.o_nu && p.o_nu->count()) {
    if (cfg.unconfined()) throw UsageError("--nu applies to a finite rho0 only");
    fixed[Param::nu] = p.nu;
  }
  if (p.o_gamma && p.o_gamma->count()) {
    if (!cfg.unconfined()) throw UsageError("--gamma applies to rho0 = inf only");
    fixed[Param::gamma] = p.gamma;
  }
  if (cfg.B == 0.0 && fixed.count(Param::beta) && fixed[Param::beta] != 0.0)
    throw UsageError("beta must be 0 at B = 0");

  const QuadratureSpec spec = quadrature(c);
  const OptimizeRequest req = make_request(cfg, fixed);
  OptimizeResult res = minimize(req, spec);
  if (!res.energy.admissible()) throw Error("no admissible trial state for the given parameters");
  ScanRecord rec = make_record(cfg, res, spec);
  return {cfg, res, rec};
}

int cmd_energy(const PointArgs& p, const Common& c, std::ostream& out) {
  const PointResult r = solve_point(p, c);
  if (!p.density_out.empty()) write_density(p.density_out, r.res.params, r.cfg, r.res.energy.norm);
  Sink sink(c.out, out);
  write_records(sink.get(), {r.rec}, c.format);
  sink.finish();
  return kExitOk;
}

int cmd_observables(const PointArgs& p, const Common& c, std::ostream& out) {
  const PointResult r = solve_point(p, c);
  Sink sink(c.out, out);
  auto& os = sink.get();
  const ScanRecord& rec = r.rec;
  os << "B            " << format_number(rec.B) << '\n'
     << "rho0         " << format_number(rec.rho0) << '\n'
     << "E            " << format_number(*rec.E) << '\n'
     << "mean_rho     " << format_number(*rec.mean_rho) << '\n'
     << "mean_abs_z   " << format_number(*rec.mean_abs_z) << '\n'
     << "aspect_ratio " << format_number(*rec.aspect_ratio) << '\n'
     << "shannon_r    " << format_number(*rec.shannon_r) << '\n'
     << "cusp_Z       " << format_number(*rec.cusp_Z) << '\n';
  sink.finish();
  return kExitOk;
}

struct GridArgs {
  std::vector<std::string> B_list{"0"};
  std::vector<std::string> rho0_list;
};

void add_grid(CLI::App* sub, GridArgs& g) {
  sub->add_option("--B-list,--B", g.B_list, "magnetic fields [a.u.], comma separated")->delimiter(',');
  sub->add_option("--rho0-list,--rho0", g.rho0_list, "radii [a.u.] or inf, comma separated")->delimiter(',');
}

std::vector<ScanRecord> run_grid(const GridArgs& g, const Common& c, bool with_observables, std::ostream& err) {
  if (g.rho0_list.empty()) throw UsageError("--rho0-list is required");
  ScanTemplate tmpl;
  tmpl.coulomb_on = c.coulomb == "on";
  tmpl.with_observables = with_observables;
  const auto grid = make_grid(parse_list(g.B_list, false), parse_list(g.rho0_list, true), tmpl.coulomb_on);
  auto recs = scan(grid, tmpl, quadrature(c), c.jobs);
  report_failures(recs, err);
  return recs;
}

int cmd_scan(const GridArgs& g, const Common& c, std::ostream& out, std::ostream& err) {
  const auto recs = run_grid(g, c, true, err);
  Sink sink(c.out, out);
  write_records(sink.get(), recs, c.format);
  sink.finish();
  if (!c.out.empty()) out << "wrote " << recs.size() << " records to " << c.out << '\n';
  return kExitOk;
}

int cmd_binding(const GridArgs& g, const Common& c, std::ostream& out, std::ostream& err) {
  const auto recs = run_grid(g, c, false, err);
  Sink sink(c.out, out);
  auto& os = sink.get();
  os << "# B rho0 E E0 Eb\n";
  for (const auto& r : recs) {
    if (!r.E) continue;
    os << format_number(r.B) << ' ' << format_number(r.rho0) << ' ' << format_number(*r.E) << ' '
       << format_number(*r.E0) << ' ' << format_number(*r.Eb) << '\n';
  }
  sink.finish();
  return kExitOk;
}

int cmd_entropy(const GridArgs& g, const Common& c, std::ostream& out, std::ostream& err) {
  const auto recs = run_grid(g, c, true, err);
  {
    Sink sink(c.out, out);
    auto& os = sink.get();
    os << "# B S_r rho0\n";
    for (const auto& r : recs)
      if (r.shannon_r)
        os << format_number(r.B) << ' ' << format_number(*r.shannon_r) << ' ' << format_number(r.rho0) << '\n';
    sink.finish();
  }
  if (!c.out.empty()) {
    out << "rho0        B           E            S_r\n";
    for (const auto& r : recs)
      if (r.shannon_r)
        out << std::left << std::setw(12) << format_number(r.rho0) << std::setw(12) << format_number(r.B)
            << std::setw(13) << format_number(*r.E) << format_number(*r.shannon_r) << '\n';
  }
  return kExitOk;
}

int cmd_compare2d(const GridArgs& g, const Common& c, std::ostream& out, std::ostream& err) {
  for (const auto& s : g.rho0_list)
    if (std::isinf(parse_radius(s))) throw UsageError("compare2d needs finite radii");
  const auto recs = run_grid(g, c, false, err);
  std::vector<std::array<double, 5>> rows; // rho0, ratio, B, E3D, E2D
  for (const auto& r : recs) {
    if (!r.E) continue;
    const RadialGrid rg = radial_grid_for(r.rho0);
    const double e2 = ground_energy_2d(r.B, r.rho0, rg);
    rows.push_back({r.rho0, ratio_3d_2d(*r.E, r.B, r.rho0, rg), r.B, *r.E, e2});
  }
  {
    Sink sink(c.out, out);
    auto& os = sink.get();
    os << "# rho0 ratio B\n";
    for (const auto& row : rows)
      os << format_number(row[0]) << ' ' << format_number(row[1]) << ' ' << format_number(row[2]) << '\n';
    sink.finish();
  }
  if (!c.out.empty()) {
    out << "rho0        B           E3D          E2D          ratio\n";
    for (const auto& row : rows)
      out << std::left << std::setw(12) << format_number(row[0]) << std::setw(12) << format_number(row[2])
          << std::setw(13) << format_number(row[3]) << std::setw(13) << format_number(row[4])
          << format_number(row[1]) << '\n';
  }
  return kExitOk;
}

int cmd_fit_tail(const GridArgs& g, const std::string& input, const Common& c, std::ostream& out,
                 std::ostream& err) {
  std::vector<ScanRecord> recs;
  if (!input.empty()) {
    std::ifstream is(input);
    if (!is) throw Error("cannot read " + input);
    const bool json = input.size() >= 5 && input.substr(input.size() - 5) == ".json";
    recs = json ? read_json(is) : read_csv(is);
  } else {
    GridArgs grid = g;
    if (grid.rho0_list.empty()) grid.rho0_list = {"2.5", "3.0", "3.5", "4.0", "4.5", "5.0"};
    grid.B_list = {"0"};
    recs = run_grid(grid, c, false, err);
  }
  std::vector<TailPoint> pts;
  for (const auto& r : recs)
    if (r.B == 0.0 && r.E && !std::isinf(r.rho0)) pts.push_back({r.rho0, *r.E});
  const TailFit fit = fit_large_rho0_tail(pts);
  for (const auto& w : fit.warnings) err << "warning: " << w << '\n';

  out << "model     E = -0.5 + A / rho0^exponent\n"
      << "A         " << format_number(fit.A) << '\n'
      << "exponent  " << format_number(fit.exponent) << '\n'
      << "points    " << fit.used << '\n';
  if (!c.out.empty()) {
    Sink sink(c.out, out);
    auto& os = sink.get();
    os << "# rho0 E E_fit\n";
    for (const auto& p : pts)
      os << format_number(p.rho0) << ' ' << format_number(p.E) << ' '
         << format_number(-0.5 + fit.A / std::pow(p.rho0, fit.exponent)) << '\n';
    sink.finish();
  }
  return kExitOk;
}

int cmd_verify_appendix(std::ostream& out) {
  const AppendixReport report = verify_rows(chi_table());
  out << "n l  m p N  chi             max|residual|  status\n";
  for (const auto& r : report.rows) {
    out << r.row.n << ' ' << r.row.ell << ' ' << std::setw(2) << r.row.m << ' ' << r.row.p << ' ' << r.row.N << "  "
        << std::left << std::setw(16) << r.row.label << std::setw(15) << format_number(r.max_residual)
        << (r.passed ? "ok" : "FAIL") << std::right << '\n';
  }
  for (int n = 1; n <= 6; ++n)
    out << "n=" << n << ": " << mapped_state_count(n) << " mapped states (n^2 = " << n * n << ")\n";
  out << (report.all_passed ? "all rows verified\n" : "verification FAILED\n");
  return report.all_passed ? kExitOk : kExitRuntime;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variational ground state of a hydrogen atom in an impenetrable cylinder with an axial magnetic field",
               "cylvar"};
  app.require_subcommand(1);

  Common common;
  PointArgs point;
  PointArgs obs_point;
  GridArgs grid;
  std::string fit_input;

  auto* energy_cmd = app.add_subcommand("energy", "optimize (or evaluate) one configuration");
  add_point(energy_cmd, point, true);
  add_common(energy_cmd, common);

  auto* obs_cmd = app.add_subcommand("observables", "<rho>, <|z|>, entropy and cusp of the optimal state");
  add_point(obs_cmd, obs_point, true);
  add_common(obs_cmd, common, false);

  auto* scan_cmd = app.add_subcommand("scan", "optimize over a grid of B and rho0");
  add_grid(scan_cmd, grid);
  add_common(scan_cmd, common);

  auto* binding_cmd = app.add_subcommand("binding", "binding energy E0 - E over a grid");
  add_grid(binding_cmd, grid);
  add_common(binding_cmd, common, false);

  auto* entropy_cmd = app.add_subcommand("entropy", "position-space Shannon entropy over a grid");
  add_grid(entropy_cmd, grid);
  add_common(entropy_cmd, common, false);

  auto* cmp_cmd = app.add_subcommand("compare2d", "ratio of the 3D and 2D confined ground energies");
  add_grid(cmp_cmd, grid);
  add_common(cmp_cmd, common, false);

  auto* fit_cmd = app.add_subcommand("fit-tail", "fit E = -0.5 + A / rho0^k to the B = 0 energies");
  add_grid(fit_cmd, grid);
  fit_cmd->add_option("--in", fit_input, "scan records (CSV, or JSON by .json suffix) instead of a new scan");
  add_common(fit_cmd, common, false);

  auto* verify_cmd = app.add_subcommand("verify-appendix", "check the free-atom eigenpolynomials");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << "run 'cylvar --help' for usage\n";
    return kExitUsage;
  }

  try {
    for (auto* sub : app.get_subcommands()) apply_config(sub, common.config);
    if (energy_cmd->parsed()) return cmd_energy(point, common, out);
    if (obs_cmd->parsed()) return cmd_observables(obs_point, common, out);
    if (scan_cmd->parsed()) {
      return cmd_scan(grid, common, out, err);
    }
    if (binding_cmd->parsed()) return cmd_binding(grid, common, out, err);
    if (entropy_cmd->parsed()) return cmd_entropy(grid, common, out, err);
    if (cmp_cmd->parsed()) return cmd_compare2d(grid, common, out, err);
    if (fit_cmd->parsed()) return cmd_fit_tail(grid, fit_input, common, out, err);
    if (verify_cmd->parsed()) return cmd_verify_appendix(out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

} // namespace cylvar
