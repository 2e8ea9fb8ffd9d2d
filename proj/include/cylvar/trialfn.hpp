#pragma once

#include <cmath>
#include <optional>

#include "cylvar/quadrature.hpp"

namespace cylvar {

// Variational parameters of the trial state
//   psi = [1 - (rho/rho0)^nu] exp(-alpha r - beta B rho^2)        (finite rho0)
//   psi = (1 + gamma^2 rho^2) exp(-alpha r - beta B rho^2)        (rho0 = inf, gamma set)
struct TrialParams {
  double alpha = 1.0;
  double beta = 0.0;
  double nu = 2.0;
  std::optional<double> gamma;

  bool operator==(const TrialParams&) const = default;
};

struct SystemConfig {
  double B = 0.0;
  double rho0 = kInf;
  int m = 0;
  int p = 0;
  bool coulomb_on = true;

  bool unconfined() const { return std::isinf(rho0); }
  void validate() const;
};

struct WavefunctionSample {
  double psi;
  double dpsi_drho;
  double dpsi_dz;
};

// True when the parameters describe a normalizable member of the family for cfg:
// alpha > 0; nu >= 1 for finite rho0; gamma only for rho0 = inf; beta > 0 when
// rho0 = inf and B > 0.
bool params_admissible(const TrialParams& params, const SystemConfig& cfg);

// Amplitude and analytic gradient. Only the m = 0, p = 0 state is implemented.
WavefunctionSample eval(const TrialParams& params, const SystemConfig& cfg, double rho, double z);

// Unnormalized |psi|^2.
double density(const TrialParams& params, const SystemConfig& cfg, double rho, double z);

// Inline kernel shared by eval() and the energy integrands; no argument checks.
inline WavefunctionSample eval_unchecked(const TrialParams& params, const SystemConfig& cfg,
                                         double rho, double z) {
  const double r = std::sqrt(rho * rho + z * z);
  const double bB = params.beta * cfg.B;
  const double envelope = std::exp(-params.alpha * r - bB * rho * rho);

  double f = 1.0;
  double df = 0.0;
  if (!cfg.unconfined()) {
    const double x = rho / cfg.rho0;
    const double xnu1 = std::pow(x, params.nu - 1.0);
    f = 1.0 - xnu1 * x;
    df = -params.nu * xnu1 / cfg.rho0;
  } else if (params.gamma) {
    const double g2 = *params.gamma * *params.gamma;
    f = 1.0 + g2 * rho * rho;
    df = 2.0 * g2 * rho;
  }

  const double psi = f * envelope;
  // r > 0 at every quadrature node; the origin is only reachable through eval().
  const double drdrho = r > 0.0 ? rho / r : 0.0;
  const double drdz = r > 0.0 ? z / r : 0.0;
  return {psi,
          df * envelope + psi * (-params.alpha * drdrho - 2.0 * bB * rho),
          psi * (-params.alpha * drdz)};
}

// Kato cusp estimate Z = -(1/2n) dn/dr at r -> 0 of the spherically averaged density,
// from a finite difference between radii r and 2r.
double cusp_numeric(const TrialParams& params, const SystemConfig& cfg, double r = 1e-3);

// Cusp value reported with observables: alpha when the cut-off is smoother than
// linear at the axis (nu > 1 or unconfined), otherwise the numeric estimate.
double cusp_reported(const TrialParams& params, const SystemConfig& cfg);

} // namespace cylvar
