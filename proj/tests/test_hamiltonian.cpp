#include <doctest.h>

#include <algorithm>
#include <limits>

#include "cylvar/errors.hpp"

#include <cmath>
#include <numbers>

#include "cylvar/hamiltonian.hpp"
#include "cylvar/specfun.hpp"

using namespace cylvar;
using std::numbers::pi;

TEST_CASE("free hydrogen 1s") {
  const auto spec = QuadratureSpec::acceptance();
  const SystemConfig cfg{0.0, kInf};
  const TrialParams p{1.0, 0.0, 2.0, 0.0};
  const EnergyBreakdown e = energy(p, cfg, spec);
  CHECK(e.norm == doctest::Approx(pi).epsilon(1e-9));
  CHECK(e.kinetic == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(e.coulomb == doctest::Approx(-1.0).epsilon(1e-7));
  CHECK(e.total == doctest::Approx(-0.5).epsilon(1e-7));

  const Observables o = observables(p, cfg, spec);
  CHECK(o.mean_rho == doctest::Approx(3.0 * pi / 8.0).epsilon(1e-8));
  CHECK(o.mean_abs_z == doctest::Approx(0.75).epsilon(1e-8));
  CHECK(o.shannon_r == doctest::Approx(3.0 + std::log(pi)).epsilon(1e-8));
  CHECK(o.cusp_Z == 1.0);
}

TEST_CASE("scaled 1s virial") {
  const auto spec = QuadratureSpec::acceptance();
  const SystemConfig cfg{0.0, kInf};
  for (double a : {0.5, 1.7}) {
    const EnergyBreakdown e = energy({a, 0.0, 2.0, 0.0}, cfg, spec);
    CHECK(e.kinetic == doctest::Approx(a * a / 2).epsilon(1e-9));
    CHECK(e.coulomb == doctest::Approx(-a).epsilon(1e-7));
  }
}

TEST_CASE("breakdown adds up") {
  const auto spec = QuadratureSpec::production();
  for (const auto& [p, cfg] : {std::pair{TrialParams{1.04, 0.09, 2.8, {}}, SystemConfig{1.0, 5.0}},
                               std::pair{TrialParams{0.9, -0.2, 2.1, {}}, SystemConfig{0.4, 3.0}},
                               std::pair{TrialParams{1.0, 0.2, 2.0, 0.3}, SystemConfig{0.8, kInf}}}) {
    const EnergyBreakdown e = energy(p, cfg, spec);
    const double sum = e.kinetic + e.coulomb + e.zeeman_linear + e.zeeman_quadratic;
    CHECK(std::abs(sum - e.total) <= 1e-12);
    CHECK(e.zeeman_linear == 0.0);
    CHECK(e.zeeman_quadratic > 0.0);
  }
}

TEST_CASE("inadmissible parameters give infinite energy") {
  const EnergyBreakdown e = energy({1.0, 0.0, 0.5, {}}, {0.0, 2.0}, QuadratureSpec::production());
  CHECK_FALSE(e.admissible());
  CHECK(std::isinf(e.total));
}

TEST_CASE("serial and parallel energies are bit-identical") {
  const TrialParams p{1.04, 0.09, 2.8, {}};
  const SystemConfig cfg{1.0, 5.0};
  const auto spec = QuadratureSpec::acceptance();
  const EnergyBreakdown a = energy(p, cfg, spec, Execution::serial);
  const EnergyBreakdown b = energy(p, cfg, spec, Execution::parallel);
  CHECK(a.total == b.total);
  CHECK(a.norm == b.norm);
}

TEST_CASE("binding energy reference") {
  CHECK(reference_energy_no_coulomb(0.6, kInf) == doctest::Approx(0.3));
  CHECK(binding_energy(-0.5, {0.0, kInf}) == doctest::Approx(0.5));
  const SystemConfig cfg{1.0, 2.0};
  CHECK(binding_energy(-0.2, cfg) == doctest::Approx(landau_cylinder_energy(1.0, 2.0) + 0.2));
}

TEST_CASE("tail fit recovers a synthetic power law") {
  std::vector<TailPoint> pts;
  for (double r : {2.5, 3.0, 3.5, 4.0, 4.5, 5.0}) pts.push_back({r, -0.5 + 0.4 / (r * r)});
  pts.push_back({1.0, 0.3});
  const TailFit fit = fit_large_rho0_tail(pts);
  CHECK(fit.A == doctest::Approx(0.4).epsilon(1e-10));
  CHECK(fit.exponent == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(fit.used == 6);
  CHECK(fit.warnings.size() == 1);
  CHECK_THROWS_AS(fit_large_rho0_tail({{3.0, -0.45}, {4.0, -0.49}}), FitError);
}
