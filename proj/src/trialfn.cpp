#include "cylvar/trialfn.hpp"

#include <cmath>

namespace cylvar {

void SystemConfig::validate() const {
  if (!(B >= 0.0)) throw DomainError("magnetic field must be non-negative");
  if (!(rho0 > 0.0)) throw DomainError("cylinder radius must be positive or inf");
  if (p != 0 && p != 1) throw DomainError("parity label p must be 0 or 1");
}

bool params_admissible(const TrialParams& params, const SystemConfig& cfg) {
  if (!(params.alpha > 0.0) || !std::isfinite(params.alpha)) return false;
  if (!std::isfinite(params.beta)) return false;
  if (cfg.unconfined()) {
    if (params.gamma && !std::isfinite(*params.gamma)) return false;
    if (cfg.B > 0.0 && !(params.beta > 0.0)) return false;
  } else {
    if (params.gamma) return false;
    if (!(params.nu >= 1.0) || !std::isfinite(params.nu)) return false;
  }
  return true;
}

namespace {

void check_supported(const SystemConfig& cfg) {
  cfg.validate();
  if (cfg.m != 0 || cfg.p != 0)
    throw NotImplementedError("trial state implemented for m = 0, p = 0 only");
}

} // namespace

WavefunctionSample eval(const TrialParams& params, const SystemConfig& cfg, double rho, double z) {
  check_supported(cfg);
  if (!params_admissible(params, cfg)) throw DomainError("inadmissible trial parameters");
  if (rho < 0.0) throw DomainError("rho must be non-negative");
  if (rho > cfg.rho0) throw DomainError("rho outside the cylinder");
  if (!cfg.unconfined() && rho == cfg.rho0) {
    // Exact wall value; the power form leaves rounding noise.
    auto s = eval_unchecked(params, cfg, rho, z);
    s.psi = 0.0;
    s.dpsi_dz = 0.0;
    return s;
  }
  return eval_unchecked(params, cfg, rho, z);
}

double density(const TrialParams& params, const SystemConfig& cfg, double rho, double z) {
  const double psi = eval(params, cfg, rho, z).psi;
  return psi * psi;
}

double cusp_numeric(const TrialParams& params, const SystemConfig& cfg, double r) {
  check_supported(cfg);
  if (!params_admissible(params, cfg)) throw DomainError("inadmissible trial parameters");
  if (!(r > 0.0) || (!cfg.unconfined() && 2.0 * r >= cfg.rho0))
    throw DomainError("cusp probe radius must be positive and inside the cylinder");

  // Spherical average over cos(theta) in [0, 1]; the density is even in z.
  const GaussRule& rule = gauss_legendre_unit(48);
  auto averaged = [&](double radius) {
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      const double c = rule.nodes[k];
      const double psi = eval_unchecked(params, cfg, radius * std::sqrt(1.0 - c * c), radius * c).psi;
      sum += rule.weights[k] * psi * psi;
    }
    return sum;
  };
  const double n1 = averaged(r);
  const double n2 = averaged(2.0 * r);
  return -(std::log(n2) - std::log(n1)) / (2.0 * r);
}

double cusp_reported(const TrialParams& params, const SystemConfig& cfg) {
  if (cfg.unconfined() || params.nu > 1.0) return params.alpha;
  return cusp_numeric(params, cfg);
}

} // namespace cylvar
