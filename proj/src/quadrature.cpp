#include "cylvar/quadrature.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace cylvar {

namespace {

GaussRule build_gauss_legendre(int n) {
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Tricomi initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p2) / j;
      }
      dp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = 0.5 * (1.0 - x);
    rule.nodes[hi] = 0.5 * (1.0 + x);
    rule.weights[lo] = 0.5 * w;
    rule.weights[hi] = 0.5 * w;
  }
  return rule;
}

// Rational map z = scale * t / (1 - t) of [0, 1) onto [0, inf).
void map_semi_infinite(const GaussRule& rule, double scale, std::vector<double>& x,
                       std::vector<double>& w) {
  const std::size_t n = rule.nodes.size();
  x.resize(n);
  w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = rule.nodes[i];
    const double s = 1.0 - t;
    x[i] = scale * t / s;
    w[i] = rule.weights[i] * scale / (s * s);
  }
}

} // namespace

const GaussRule& gauss_legendre_unit(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre rule needs at least one node");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build_gauss_legendre(n));
  return *slot;
}

void QuadratureSpec::validate() const {
  if (n_rho < 8 || n_z < 8) throw DomainError("quadrature needs n_rho >= 8 and n_z >= 8");
  if (z_scale && !(*z_scale > 0.0)) throw DomainError("z_scale must be positive");
  if (rho_scale && !(*rho_scale > 0.0)) throw DomainError("rho_scale must be positive");
}

QuadratureSpec QuadratureSpec::doubled() const {
  QuadratureSpec s = *this;
  s.n_rho *= 2;
  s.n_z *= 2;
  return s;
}

QuadratureSpec QuadratureSpec::resolved_for(double alpha, double B) const {
  QuadratureSpec s = *this;
  const double coulomb_length = alpha > 0.0 ? 1.0 / alpha : 1.0;
  if (!s.z_scale) s.z_scale = coulomb_length;
  if (!s.rho_scale) {
    const double landau_length = B > 0.0 ? 2.0 / std::sqrt(B) : 0.0;
    s.rho_scale = std::max(coulomb_length, landau_length);
  }
  return s;
}

CylinderGrid make_cylinder_grid(double rho0, const QuadratureSpec& spec) {
  spec.validate();
  if (!(rho0 > 0.0)) throw DomainError("cylinder radius must be positive");

  CylinderGrid g;
  const GaussRule& rrule = gauss_legendre_unit(spec.n_rho);
  if (std::isinf(rho0)) {
    map_semi_infinite(rrule, spec.rho_scale.value_or(1.0), g.rho, g.rho_weight);
  } else {
    g.rho.resize(rrule.nodes.size());
    g.rho_weight.resize(rrule.nodes.size());
    for (std::size_t i = 0; i < rrule.nodes.size(); ++i) {
      g.rho[i] = rho0 * rrule.nodes[i];
      g.rho_weight[i] = rho0 * rrule.weights[i];
    }
  }
  for (std::size_t i = 0; i < g.rho.size(); ++i)
    g.rho_weight[i] *= 2.0 * std::numbers::pi * g.rho[i];

  map_semi_infinite(gauss_legendre_unit(spec.n_z), spec.z_scale.value_or(1.0), g.z, g.z_weight);
  for (auto& w : g.z_weight) w *= 2.0;
  return g;
}

double integrate_cylinder(const CylIntegrand& f, double rho0, const QuadratureSpec& spec,
                          Execution ex) {
  return integrate_grid(make_cylinder_grid(rho0, spec), f, ex);
}

ConvergenceEstimate convergence_check(const CylIntegrand& f, double rho0,
                                      const QuadratureSpec& spec) {
  const double coarse = integrate_cylinder(f, rho0, spec);
  const double fine = integrate_cylinder(f, rho0, spec.doubled());
  return {coarse, std::abs(fine - coarse)};
}

} // namespace cylvar
