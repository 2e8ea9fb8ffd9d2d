#include "cylvar/specfun.hpp"

#include <cmath>

#include "cylvar/errors.hpp"

namespace cylvar {

double kummer_m(const KummerArgs& args) {
  const auto [a, b, z] = args;
  if (b <= 0.0 && b == std::floor(b)) throw DomainError("Kummer M undefined for b a nonpositive integer");
  if (!(z >= 0.0 && z <= 200.0)) throw DomainError("Kummer M series restricted to 0 <= z <= 200");
  if (z == 0.0) return 1.0;

  double term = 1.0;
  double sum = 1.0;
  for (int k = 0; k < 10000; ++k) {
    const double ratio = (a + k) * z / ((b + k) * (k + 1.0));
    term *= ratio;
    sum += term;
    if (term == 0.0) return sum;
    // Only trust a small term once the terms have started to shrink.
    if (std::abs(ratio) < 1.0 && k + 1.0 > z && std::abs(term) <= 1e-15 * std::abs(sum)) return sum;
  }
  throw Error("Kummer M series did not converge within 10^4 terms");
}

double bessel_j0(double x) {
  if (std::abs(x) > 30.0) throw DomainError("bessel_j0 series restricted to |x| <= 30");
  const double q = -0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * k);
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

namespace {

double bessel_j1(double x) {
  const double q = -0.25 * x * x;
  double term = 0.5 * x;
  double sum = term;
  for (int k = 1; k < 500; ++k) {
    term *= q / (static_cast<double>(k) * (k + 1));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum;
}

} // namespace

double bessel_j0_first_zero() {
  double x = 2.4;
  for (int i = 0; i < 50; ++i) {
    const double dx = bessel_j0(x) / -bessel_j1(x); // J0' = -J1
    x -= dx;
    if (std::abs(dx) < 1e-15) break;
  }
  return x;
}

double landau_cylinder_energy(double B, double rho0) {
  if (!(B > 0.0 || B == 0.0)) throw DomainError("magnetic field must be non-negative");
  if (!(rho0 > 0.0) || std::isinf(rho0)) throw DomainError("cylinder radius must be finite and positive");

  const double j01 = bessel_j0_first_zero();
  const double drum = j01 * j01 / (2.0 * rho0 * rho0);
  if (B <= 1e-6) return drum;

  const double z = 0.5 * B * rho0 * rho0;
  auto f = [&](double E0) { return kummer_m({-(E0 / B - 0.5), 1.0, z}); };

  // Scan upward from the Landau level for the first sign change.
  const double lo = 0.5 * B; // M(0, 1, z) = 1
  const double hi = 0.5 * B + 4.0 * drum + 2.0 * B;
  constexpr int kSteps = 400;
  double a = lo;
  double fa = f(a);
  for (int i = 1; i <= kSteps; ++i) {
    double b = lo + (hi - lo) * i / kSteps;
    const double fb = f(b);
    if (fa == 0.0) return a;
    if ((fa < 0.0) != (fb < 0.0)) {
      while (b - a > 1e-12 * std::max(1.0, b)) {
        const double mid = 0.5 * (a + b);
        const double fm = f(mid);
        if ((fm < 0.0) == (fa < 0.0)) {
          a = mid;
          fa = fm;
        } else {
          b = mid;
        }
      }
      return 0.5 * (a + b);
    }
    a = b;
    fa = fb;
  }
  throw RootError("no sign change of M(-(E0/B - 1/2), 1, B rho0^2/2)", lo, hi);
}

} // namespace cylvar
