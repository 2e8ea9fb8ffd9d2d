#pragma once

namespace cylvar {

struct KummerArgs {
  double a;
  double b = 1.0;
  double z;
};

// Kummer's confluent hypergeometric function M(a, b, z) by its power series,
// for 0 <= z <= 200. Stops once a term falls below 1e-15 of the running sum.
double kummer_m(const KummerArgs& args);

// Bessel J0 by its power series (|x| <= 30).
double bessel_j0(double x);

// First positive zero of J0 (Newton from 2.4).
double bessel_j0_first_zero();

// Ground energy of a free electron in an axial field B inside an impenetrable
// cylinder of radius rho0: the lowest root E0 of M(-(E0/B - 1/2), 1, B rho0^2 / 2).
// For B <= 1e-6 returns the Dirichlet drum limit j01^2 / (2 rho0^2).
double landau_cylinder_energy(double B, double rho0);

} // namespace cylvar
