#include "cylvar/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

namespace cylvar {

std::string to_string(Param p) {
  switch (p) {
  case Param::alpha: return "alpha";
  case Param::beta: return "beta";
  case Param::nu: return "nu";
  case Param::gamma: return "gamma";
  }
  return "?";
}

namespace {

double get(const TrialParams& t, Param p) {
  switch (p) {
  case Param::alpha: return t.alpha;
  case Param::beta: return t.beta;
  case Param::nu: return t.nu;
  case Param::gamma: return t.gamma.value_or(0.0);
  }
  return 0.0;
}

void set(TrialParams& t, Param p, double v) {
  switch (p) {
  case Param::alpha: t.alpha = v; break;
  case Param::beta: t.beta = v; break;
  case Param::nu: t.nu = v; break;
  case Param::gamma: t.gamma = v; break;
  }
}

double initial_step(Param p) {
  switch (p) {
  case Param::alpha: return 0.1;
  case Param::beta: return 0.05;
  case Param::nu: return 0.5;
  case Param::gamma: return 0.1;
  }
  return 0.1;
}

bool contains(const std::vector<Param>& v, Param p) { return std::find(v.begin(), v.end(), p) != v.end(); }

} // namespace

void OptimizeRequest::validate() const {
  cfg.validate();
  if (starts.empty()) throw DomainError("optimizer needs at least one start");
  if (!(tol_energy > 0.0) || !(tol_param > 0.0)) throw DomainError("tolerances must be positive");
  if (max_evals < 1) throw DomainError("max_evals must be positive");
  if (cfg.B == 0.0) {
    const auto it = fixed_values.find(Param::beta);
    if (contains(free_params, Param::beta) || it == fixed_values.end() || it->second != 0.0)
      throw DomainError("at B = 0 beta must be fixed to 0");
  }
  for (Param p : free_params)
    if (fixed_values.count(p)) throw DomainError(to_string(p) + " is both free and fixed");
  if (contains(free_params, Param::gamma) && !cfg.unconfined())
    throw DomainError("gamma is a parameter of the unconfined trial state only");
}

OptimizeRequest make_request(const SystemConfig& cfg, const std::map<Param, double>& fixed) {
  OptimizeRequest req;
  req.cfg = cfg;
  req.fixed_values = fixed;
  if (cfg.B == 0.0) req.fixed_values[Param::beta] = 0.0;
  if (!cfg.coulomb_on && !req.fixed_values.count(Param::alpha)) req.fixed_values[Param::alpha] = 1e-3;

  std::vector<Param> candidates{Param::alpha, Param::beta};
  candidates.push_back(cfg.unconfined() ? Param::gamma : Param::nu);
  for (Param p : candidates)
    if (!req.fixed_values.count(p)) req.free_params.push_back(p);

  if (cfg.unconfined()) {
    req.starts = {{1.0, 0.25, 1.0, 0.1}, {1.0, 0.1, 1.0, 0.3}, {0.8, 0.3, 1.0, 0.5}};
  } else {
    req.starts = {{1.0, 0.1, 2.0, {}}, {1.2, -0.1, 3.0, {}}, {0.8, 0.25, 1.5, {}}};
    // Without the Coulomb term the state is close to the lowest Landau orbital
    // exp(-B rho^2 / 4) with a sharp wall factor, a basin the three starts above
    // do not reach once alpha is pinned.
    if (!cfg.coulomb_on && cfg.B > 0.0)
      req.starts.push_back({1.0, 0.25, std::max(2.0, cfg.B * cfg.rho0 * cfg.rho0), {}});
  }
  for (auto& s : req.starts) {
    if (cfg.unconfined() && !s.gamma) s.gamma = 0.0;
    for (const auto& [p, v] : req.fixed_values) set(s, p, v);
  }
  return req;
}

SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, const std::vector<double>& step, double tol_f,
                          double tol_x, int max_evals) {
  const std::size_t n = x0.size();
  SimplexResult out;
  if (n == 0) {
    out.x = x0;
    out.f = f(x0);
    out.evals = 1;
    out.converged = true;
    return out;
  }

  std::vector<std::vector<double>> pts(n + 1, x0);
  std::vector<double> val(n + 1);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += step[i];
  for (std::size_t i = 0; i <= n; ++i) val[i] = f(pts[i]);
  out.evals = static_cast<int>(n + 1);

  std::vector<std::size_t> order(n + 1);
  auto point = [&](const std::vector<double>& c, const std::vector<double>& x, double t) {
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = c[k] + t * (x[k] - c[k]);
    return y;
  };

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return val[a] < val[b]; });
    {
      std::vector<std::vector<double>> p2(n + 1);
      std::vector<double> v2(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        p2[i] = pts[order[i]];
        v2[i] = val[order[i]];
      }
      pts.swap(p2);
      val.swap(v2);
    }

    double xspread = 0.0;
    for (std::size_t i = 1; i <= n; ++i)
      for (std::size_t k = 0; k < n; ++k) xspread = std::max(xspread, std::abs(pts[i][k] - pts[0][k]));
    if (val[n] - val[0] < tol_f && xspread < tol_x) {
      out.converged = true;
      break;
    }
    if (out.evals >= max_evals) break;

    std::vector<double> c(n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) c[k] += pts[i][k] / static_cast<double>(n);

    const auto xr = point(c, pts[n], -1.0);
    const double fr = f(xr);
    ++out.evals;
    if (fr < val[0]) {
      const auto xe = point(c, pts[n], -2.0);
      const double fe = f(xe);
      ++out.evals;
      if (fe < fr) {
        pts[n] = xe;
        val[n] = fe;
      } else {
        pts[n] = xr;
        val[n] = fr;
      }
      continue;
    }
    if (fr < val[n - 1]) {
      pts[n] = xr;
      val[n] = fr;
      continue;
    }

    const bool outside = fr < val[n];
    const auto xc = outside ? point(c, xr, 0.5) : point(c, pts[n], 0.5);
    const double fc = f(xc);
    ++out.evals;
    if (outside ? fc <= fr : fc < val[n]) {
      pts[n] = xc;
      val[n] = fc;
      continue;
    }

    for (std::size_t i = 1; i <= n; ++i) {
      pts[i] = point(pts[0], pts[i], 0.5);
      val[i] = f(pts[i]);
    }
    out.evals += static_cast<int>(n);
  }

  out.x = pts[0];
  out.f = val[0];
  return out;
}

OptimizeResult minimize(const OptimizeRequest& req, const QuadratureSpec& spec, Execution ex) {
  req.validate();
  const auto& free = req.free_params;

  auto build = [&](const TrialParams& base, const std::vector<double>& x) {
    TrialParams t = base;
    for (const auto& [p, v] : req.fixed_values) set(t, p, v);
    for (std::size_t k = 0; k < free.size(); ++k) set(t, free[k], x[k]);
    return t;
  };

  std::vector<OptimizeResult> results;
  for (std::size_t s = 0; s < req.starts.size(); ++s) {
    const TrialParams& base = req.starts[s];
    auto objective = [&](const std::vector<double>& x) {
      try {
        return energy(build(base, x), req.cfg, spec, ex).total;
      } catch (const EvaluationError&) {
        return kInf;
      }
    };

    std::vector<double> x0(free.size());
    std::vector<double> step(free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
      x0[k] = get(base, free[k]);
      step[k] = initial_step(free[k]);
    }

    SimplexResult first = nelder_mead(objective, x0, step, req.tol_energy, req.tol_param, req.max_evals);
    const int budget = std::max(req.max_evals - first.evals, static_cast<int>(free.size()) + 2);
    SimplexResult second = nelder_mead(objective, first.x, step, req.tol_energy, req.tol_param, budget);
    const SimplexResult& best = second.f <= first.f ? second : first;

    OptimizeResult r;
    r.params = build(base, best.x);
    r.energy = energy(r.params, req.cfg, spec, ex);
    r.evals = first.evals + second.evals + 1;
    r.converged = second.converged;
    r.start_index = static_cast<int>(s);
    r.seed = req.seed;
    results.push_back(r);
  }

  auto better = [&](const OptimizeResult& a, const OptimizeResult& b) {
    const double ea = a.energy.total;
    const double eb = b.energy.total;
    if (std::abs(ea - eb) >= req.tol_energy || !std::isfinite(ea) || !std::isfinite(eb)) return ea < eb;
    if (a.params.nu != b.params.nu) return a.params.nu < b.params.nu;
    return std::abs(a.params.beta) < std::abs(b.params.beta);
  };
  OptimizeResult chosen = results.front();
  for (std::size_t i = 1; i < results.size(); ++i)
    if (better(results[i], chosen)) chosen = results[i];
  return chosen;
}

ScanRecord make_record(const SystemConfig& cfg, const OptimizeResult& res, const QuadratureSpec& spec,
                       bool with_observables, Execution ex) {
  ScanRecord rec;
  rec.B = cfg.B;
  rec.rho0 = cfg.rho0;
  rec.E = res.energy.total;
  rec.alpha = res.params.alpha;
  rec.beta = res.params.beta;
  if (!cfg.unconfined()) rec.nu = res.params.nu;
  rec.gamma = res.params.gamma;
  rec.converged = res.converged;
  rec.evals = res.evals;
  rec.bound_state = res.energy.total < 0.0;

  rec.E0 = reference_energy_no_coulomb(cfg.B, cfg.rho0);
  rec.Eb = *rec.E0 - res.energy.total;
  if (with_observables) {
    const Observables o = observables(res.params, cfg, spec, ex);
    rec.mean_rho = o.mean_rho;
    rec.mean_abs_z = o.mean_abs_z;
    rec.aspect_ratio = o.aspect_ratio;
    rec.shannon_r = o.shannon_r;
    rec.cusp_Z = o.cusp_Z;
  }
  return rec;
}

std::vector<ScanRecord> scan(const std::vector<SystemConfig>& grid, const ScanTemplate& tmpl,
                             const QuadratureSpec& spec, int jobs) {
  if (grid.empty()) throw DomainError("scan grid is empty");

  // Chains of consecutive configs sharing B.
  std::vector<std::pair<std::size_t, std::size_t>> chains;
  for (std::size_t i = 0; i < grid.size();) {
    std::size_t j = i + 1;
    while (j < grid.size() && grid[j].B == grid[i].B) ++j;
    chains.emplace_back(i, j);
    i = j;
  }

  std::vector<ScanRecord> records(grid.size());
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(chains.size())));
  const Execution inner = threads > 1 ? Execution::serial : Execution::parallel;

  auto run_chain = [&](std::size_t c) {
    std::optional<TrialParams> warm;
    for (std::size_t i = chains[c].first; i < chains[c].second; ++i) {
      SystemConfig cfg = grid[i];
      cfg.coulomb_on = tmpl.coulomb_on;
      ScanRecord& rec = records[i];
      rec.B = cfg.B;
      rec.rho0 = cfg.rho0;
      try {
        OptimizeRequest req = make_request(cfg, tmpl.fixed);
        req.tol_energy = tmpl.tol_energy;
        req.tol_param = tmpl.tol_param;
        req.max_evals = tmpl.max_evals;
        for (auto s : tmpl.extra_starts) req.starts.push_back(s);
        if (warm && warm->gamma.has_value() == cfg.unconfined()) {
          TrialParams w = *warm;
          for (const auto& [p, v] : req.fixed_values) set(w, p, v);
          req.starts.insert(req.starts.begin(), w);
        }
        const OptimizeResult res = minimize(req, spec, inner);
        rec = make_record(cfg, res, spec, tmpl.with_observables, inner);
        warm = res.params;
      } catch (const Error& e) {
        rec.error = e.what();
      }
    }
  };

  const long long n_chains = static_cast<long long>(chains.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (long long c = 0; c < n_chains; ++c) run_chain(static_cast<std::size_t>(c));
  return records;
}

} // namespace cylvar
