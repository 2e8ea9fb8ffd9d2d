#include "cylvar/hamiltonian.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "cylvar/specfun.hpp"

namespace cylvar {

namespace {

void check_config(const SystemConfig& cfg) {
  cfg.validate();
  if (cfg.m != 0 || cfg.p != 0)
    throw NotImplementedError("energy implemented for the m = 0, p = 0 state only");
}

CylinderGrid grid_for(const TrialParams& params, const SystemConfig& cfg, const QuadratureSpec& spec) {
  return make_cylinder_grid(cfg.rho0, spec.resolved_for(params.alpha, cfg.B));
}

} // namespace

EnergyBreakdown energy(const TrialParams& params, const SystemConfig& cfg, const QuadratureSpec& spec,
                       Execution ex) {
  check_config(cfg);
  if (!params_admissible(params, cfg)) {
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    return {nan, nan, nan, nan, kInf, 0.0};
  }

  const CylinderGrid g = grid_for(params, cfg, spec);
  // norm, |grad psi|^2, psi^2 / r, psi^2 rho^2
  const auto m = integrate_moments<4>(
      g,
      [&](double rho, double z) {
        const WavefunctionSample s = eval_unchecked(params, cfg, rho, z);
        const double d = s.psi * s.psi;
        const double r = std::sqrt(rho * rho + z * z);
        return std::array<double, 4>{d, s.dpsi_drho * s.dpsi_drho + s.dpsi_dz * s.dpsi_dz, d / r,
                                     d * rho * rho};
      },
      ex);

  EnergyBreakdown e;
  e.norm = m[0];
  if (!(e.norm > 0.0)) throw EvaluationError(0.0, 0.0, "trial state has zero norm");
  e.kinetic = 0.5 * m[1] / e.norm;
  e.coulomb = cfg.coulomb_on ? -m[2] / e.norm : 0.0;
  e.zeeman_linear = 0.5 * cfg.m * cfg.B;
  e.zeeman_quadratic = cfg.B * cfg.B / 8.0 * m[3] / e.norm;
  e.total = e.kinetic + e.coulomb + e.zeeman_linear + e.zeeman_quadratic;
  return e;
}

Observables observables(const TrialParams& params, const SystemConfig& cfg, const QuadratureSpec& spec,
                        Execution ex) {
  check_config(cfg);
  if (!params_admissible(params, cfg)) throw DomainError("inadmissible trial parameters");

  const CylinderGrid g = grid_for(params, cfg, spec);
  // norm, rho, |z|, psi^2 ln psi^2  (z >= 0 on the folded grid)
  const auto m = integrate_moments<4>(
      g,
      [&](double rho, double z) {
        const double psi = eval_unchecked(params, cfg, rho, z).psi;
        const double d = psi * psi;
        const double dlogd = d > 0.0 ? d * std::log(d) : 0.0;
        return std::array<double, 4>{d, d * rho, d * z, dlogd};
      },
      ex);

  const double norm = m[0];
  if (!(norm > 0.0)) throw EvaluationError(0.0, 0.0, "trial state has zero norm");
  Observables o;
  o.mean_rho = m[1] / norm;
  o.mean_abs_z = m[2] / norm;
  o.aspect_ratio = o.mean_rho / (2.0 * o.mean_abs_z);
  // -int (d/N) ln(d/N) = ln N - (1/N) int d ln d
  o.shannon_r = std::log(norm) - m[3] / norm;
  o.cusp_Z = cusp_reported(params, cfg);
  return o;
}

double reference_energy_no_coulomb(double B, double rho0) {
  if (!(B >= 0.0)) throw DomainError("magnetic field must be non-negative");
  if (std::isinf(rho0)) return 0.5 * B;
  return landau_cylinder_energy(B, rho0);
}

double binding_energy(double E_total, const SystemConfig& cfg) {
  return reference_energy_no_coulomb(cfg.B, cfg.rho0) - E_total;
}

TailFit fit_large_rho0_tail(const std::vector<TailPoint>& records, double min_rho0) {
  TailFit fit;
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (const auto& rec : records) {
    std::ostringstream why;
    if (rec.rho0 < min_rho0) {
      why << "rho0 = " << rec.rho0 << " below fit window";
      fit.warnings.push_back(why.str());
      continue;
    }
    if (!(rec.E > -0.5) || !std::isfinite(rec.E)) {
      why << "rho0 = " << rec.rho0 << ": E = " << rec.E << " not above -0.5, excluded";
      fit.warnings.push_back(why.str());
      continue;
    }
    const double x = std::log(rec.rho0);
    const double y = std::log(rec.E + 0.5);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++fit.used;
  }
  if (fit.used < 3) throw FitError("tail fit needs at least 3 usable records");

  const double n = fit.used;
  const double denom = n * sxx - sx * sx;
  if (!(std::abs(denom) > 0.0)) throw FitError("tail fit needs at least two distinct radii");
  const double slope = (n * sxy - sx * sy) / denom;
  const double intercept = (sy - slope * sx) / n;
  fit.exponent = -slope;
  fit.A = std::exp(intercept);
  return fit;
}

} // namespace cylvar
