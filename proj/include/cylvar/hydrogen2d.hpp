#pragma once

namespace cylvar {

// Uniform cell-centred radial grid on (0, rho0): rho_i = (i + 1/2) h, i = 0..n-1,
// with the wall at (n + 1/2) h = rho0. A vertex grid (offset = false) would put a
// node on the Coulomb singularity and is rejected by validate().
struct RadialGrid {
  int n = 400;
  bool offset = true;

  double spacing(double rho0) const { return rho0 / (n + 0.5); }
  double point(int i, double rho0) const { return (i + 0.5) * spacing(rho0); }
  RadialGrid refined() const { return {2 * n, offset}; }
  void validate() const;
};

// Grid with spacing no coarser than h_max and at least n_min points.
RadialGrid radial_grid_for(double rho0, double h_max = 0.0025, int n_min = 400);

// Lowest eigenvalue of the finite-difference radial operator on a single grid
// (no extrapolation), for angular momentum m.
double ground_energy_2d_single(double B, double rho0, const RadialGrid& grid, bool coulomb_on = true,
                               int m = 0);

// Ground-state energy of the 2D hydrogen atom confined to a disc of radius rho0
// in a perpendicular field B, Richardson-extrapolated from grids n and 2n.
// Throws ResolutionError when |E_n - E_2n| > 1e-4.
double ground_energy_2d(double B, double rho0, const RadialGrid& grid, bool coulomb_on = true);

// E(3D) / E(2D); 0 when the 3D state is not bound (E(3D) >= 0).
double ratio_3d_2d(double E3d, double B, double rho0, const RadialGrid& grid);

} // namespace cylvar
