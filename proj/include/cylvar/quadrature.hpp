#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "cylvar/errors.hpp"

namespace cylvar {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Execution { serial, parallel };

// Gauss-Legendre rule on the unit interval [0, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached per node count; safe to call concurrently.
const GaussRule& gauss_legendre_unit(int n);

// Node counts and length scales for integrals over the cylinder interior.
// Unset scales are filled from the trial parameters by resolved_for().
struct QuadratureSpec {
  int n_rho = 64;
  int n_z = 64;
  std::optional<double> z_scale;
  std::optional<double> rho_scale;

  static QuadratureSpec production() { return {64, 64, {}, {}}; }
  static QuadratureSpec acceptance() { return {96, 96, {}, {}}; }

  void validate() const;
  QuadratureSpec doubled() const;
  // z_scale defaults to 1/alpha; rho_scale to max(1/alpha, 2/sqrt(B)).
  QuadratureSpec resolved_for(double alpha, double B) const;
};

// Tensor-product nodes over {0 <= rho < rho0, 0 <= z < inf}. The weights carry
// the 2*pi*rho Jacobian and the factor 2 from folding the even z integrand.
struct CylinderGrid {
  std::vector<double> rho;
  std::vector<double> rho_weight;
  std::vector<double> z;
  std::vector<double> z_weight;

  std::size_t n_rho() const { return rho.size(); }
  std::size_t n_z() const { return z.size(); }
};

CylinderGrid make_cylinder_grid(double rho0, const QuadratureSpec& spec);

namespace detail {

template <std::size_t K, class F>
void integrate_row(const CylinderGrid& g, std::size_t i, F& f, std::array<double, K>& acc) {
  acc.fill(0.0);
  const double rho = g.rho[i];
  for (std::size_t j = 0; j < g.n_z(); ++j) {
    const std::array<double, K> v = f(rho, g.z[j]);
    for (std::size_t k = 0; k < K; ++k) {
      if (!std::isfinite(v[k])) throw EvaluationError(rho, g.z[j], "non-finite integrand");
      acc[k] += g.z_weight[j] * v[k];
    }
  }
  for (auto& a : acc) a *= g.rho_weight[i];
}

template <std::size_t K>
std::array<double, K> sum_rows(std::span<const std::array<double, K>> rows) {
  std::array<double, K> total{};
  for (const auto& r : rows)
    for (std::size_t k = 0; k < K; ++k) total[k] += r[k];
  return total;
}

} // namespace detail

// Integrates K integrands at once. Rows in rho are accumulated independently and
// summed in a fixed order, so serial and parallel runs agree bit for bit.
template <std::size_t K, class F>
std::array<double, K> integrate_moments(const CylinderGrid& g, F&& f,
                                        Execution ex = Execution::parallel) {
  const std::size_t n = g.n_rho();
  std::vector<std::array<double, K>> rows(n);
  if (ex == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) detail::integrate_row<K>(g, i, f, rows[i]);
    return detail::sum_rows<K>(rows);
  }

  // Exceptions cannot cross the parallel region; keep the lowest failing row.
  std::vector<std::optional<EvaluationError>> errors(n);
  const long long count = static_cast<long long>(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    try {
      detail::integrate_row<K>(g, static_cast<std::size_t>(i), f, rows[static_cast<std::size_t>(i)]);
    } catch (const EvaluationError& e) {
      errors[static_cast<std::size_t>(i)] = e;
    }
  }
  for (const auto& e : errors)
    if (e) throw *e;
  return detail::sum_rows<K>(rows);
}

template <class F>
double integrate_grid(const CylinderGrid& g, F&& f, Execution ex = Execution::parallel) {
  auto wrapped = [&f](double rho, double z) { return std::array<double, 1>{f(rho, z)}; };
  return integrate_moments<1>(g, wrapped, ex)[0];
}

using CylIntegrand = std::function<double(double rho, double z)>;

// 2*pi * int_0^rho0 int_-inf^inf f(rho, z) rho dz drho for f even in z.
double integrate_cylinder(const CylIntegrand& f, double rho0, const QuadratureSpec& spec,
                          Execution ex = Execution::parallel);

struct ConvergenceEstimate {
  double value;
  double est_error;
};

// Value at spec plus its absolute difference from the rule with doubled node counts.
ConvergenceEstimate convergence_check(const CylIntegrand& f, double rho0, const QuadratureSpec& spec);

} // namespace cylvar
