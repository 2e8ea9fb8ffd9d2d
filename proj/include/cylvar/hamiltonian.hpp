#pragma once

#include <string>
#include <vector>

#include "cylvar/quadrature.hpp"
#include "cylvar/trialfn.hpp"

namespace cylvar {

// Expectation values of the Hamiltonian terms in the normalized trial state.
struct EnergyBreakdown {
  double kinetic = 0.0;
  double coulomb = 0.0;
  double zeeman_linear = 0.0;
  double zeeman_quadratic = 0.0;
  double total = 0.0;
  double norm = 0.0;

  bool admissible() const { return std::isfinite(total); }
};

struct Observables {
  double mean_rho = 0.0;
  double mean_abs_z = 0.0;
  double aspect_ratio = 0.0; // <rho> / (2 <|z|>)
  double shannon_r = 0.0;    // natural log
  double cusp_Z = 0.0;
};

// Rayleigh quotient of H = -1/2 Lap - [1/r] + m B/2 + B^2 rho^2 / 8 inside the
// cylinder. The kinetic term uses the gradient form (1/2) int |grad psi|^2, which
// is exact for states vanishing on the wall. Inadmissible parameters return a
// breakdown with total = +inf.
EnergyBreakdown energy(const TrialParams& params, const SystemConfig& cfg, const QuadratureSpec& spec,
                       Execution ex = Execution::parallel);

Observables observables(const TrialParams& params, const SystemConfig& cfg,
                        const QuadratureSpec& spec, Execution ex = Execution::parallel);

// Ground energy of the electron in the same cavity and field without the nucleus:
// the lowest confined Landau level, its Bessel limit at B -> 0, or B/2 when unconfined.
double reference_energy_no_coulomb(double B, double rho0);

// E_b = E0 - E.
double binding_energy(double E_total, const SystemConfig& cfg);

struct TailPoint {
  double rho0;
  double E;
};

struct TailFit {
  double A = 0.0;
  double exponent = 0.0;
  int used = 0;
  std::vector<std::string> warnings;
};

// Least-squares line through log(E + 1/2) versus log(rho0), i.e. the model
// E = -1/2 + A / rho0^exponent. Points with rho0 < min_rho0 or E <= -1/2 are
// skipped and reported in warnings.
TailFit fit_large_rho0_tail(const std::vector<TailPoint>& records, double min_rho0 = 2.5);

} // namespace cylvar
