#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cylvar/hamiltonian.hpp"
#include "cylvar/scan_io.hpp"

namespace cylvar {

enum class Param { alpha, beta, nu, gamma };

std::string to_string(Param p);

struct OptimizeRequest {
  SystemConfig cfg;
  std::vector<Param> free_params;
  std::map<Param, double> fixed_values;
  std::vector<TrialParams> starts;
  double tol_energy = 1e-6;
  double tol_param = 1e-5;
  int max_evals = 2000;
  std::uint64_t seed = 0; // recorded only; the search itself is deterministic

  void validate() const;
};

struct OptimizeResult {
  TrialParams params;
  EnergyBreakdown energy;
  int evals = 0;
  bool converged = false;
  int start_index = 0;
  std::uint64_t seed = 0;
};

// Default search for cfg: free alpha, beta (B > 0) and nu (finite rho0) or gamma
// (rho0 = inf); beta fixed to 0 at B = 0; alpha fixed to 1e-3 without the Coulomb
// term. Entries of `fixed` are removed from the free set.
OptimizeRequest make_request(const SystemConfig& cfg, const std::map<Param, double>& fixed = {});

// Nelder-Mead minimization of f from x0 with initial steps `step`. Coefficients
// reflect 1, expand 2, contract 1/2, shrink 1/2. Converged when the simplex spread
// is below tol_f in value and tol_x in every coordinate.
struct SimplexResult {
  std::vector<double> x;
  double f = 0.0;
  int evals = 0;
  bool converged = false;
};
SimplexResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                          std::vector<double> x0, const std::vector<double>& step, double tol_f,
                          double tol_x, int max_evals);

// Lowest Rayleigh quotient over all starts; each start runs Nelder-Mead and one
// restart from its own optimum. Ties within tol_energy go to the smaller nu, then
// the smaller |beta|.
OptimizeResult minimize(const OptimizeRequest& req, const QuadratureSpec& spec,
                        Execution ex = Execution::parallel);

struct ScanTemplate {
  std::map<Param, double> fixed;
  std::vector<TrialParams> extra_starts;
  bool coulomb_on = true;
  double tol_energy = 1e-6;
  double tol_param = 1e-5;
  int max_evals = 2000;
  bool with_observables = true;
};

// One record per config, in grid order. Consecutive configs with equal B form a
// chain warm-started from the previous optimum; chains run on up to `jobs`
// threads and the output does not depend on the thread count.
std::vector<ScanRecord> scan(const std::vector<SystemConfig>& grid, const ScanTemplate& tmpl,
                             const QuadratureSpec& spec, int jobs = 1);

// Record for an already optimized state (observables and binding energy filled in).
ScanRecord make_record(const SystemConfig& cfg, const OptimizeResult& res, const QuadratureSpec& spec,
                       bool with_observables = true, Execution ex = Execution::parallel);

} // namespace cylvar
