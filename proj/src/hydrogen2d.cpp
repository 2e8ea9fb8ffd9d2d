#include "cylvar/hydrogen2d.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "cylvar/errors.hpp"

namespace cylvar {

void RadialGrid::validate() const {
  if (n < 8) throw DomainError("radial grid needs at least 8 points");
  if (!offset) throw NotImplementedError("vertex radial grid places a node on the Coulomb singularity");
}

RadialGrid radial_grid_for(double rho0, double h_max, int n_min) {
  if (!(rho0 > 0.0) || std::isinf(rho0)) throw DomainError("disc radius must be finite and positive");
  const int n = static_cast<int>(std::ceil(rho0 / h_max));
  return {std::max(n, n_min), true};
}

namespace {

// Number of eigenvalues of the symmetric tridiagonal matrix (diag, off) below x.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
  int count = 0;
  double q = diag[0] - x;
  if (q < 0.0) ++count;
  for (std::size_t i = 1; i < diag.size(); ++i) {
    const double prev = q != 0.0 ? q : 1e-300;
    q = diag[i] - x - off[i - 1] * off[i - 1] / prev;
    if (q < 0.0) ++count;
  }
  return count;
}

double lowest_eigenvalue(const std::vector<double>& diag, const std::vector<double>& off) {
  double lo = diag[0] - std::abs(off.empty() ? 0.0 : off[0]);
  double hi = diag[0];
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double left = i > 0 ? std::abs(off[i - 1]) : 0.0;
    const double right = i < off.size() ? std::abs(off[i]) : 0.0;
    lo = std::min(lo, diag[i] - left - right);
    hi = std::min(hi, diag[i]); // Rayleigh quotient of a unit vector
  }
  for (int iter = 0; iter < 200 && hi - lo > 1e-14 * std::max(1.0, std::abs(hi)); ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(diag, off, mid) >= 1)
      hi = mid;
    else
      lo = mid;
  }
  const double e = 0.5 * (lo + hi);
  if (!std::isfinite(e)) throw Error("tridiagonal eigen-solve failed");
  return e;
}

} // namespace

double ground_energy_2d_single(double B, double rho0, const RadialGrid& grid, bool coulomb_on, int m) {
  grid.validate();
  if (!(B >= 0.0)) throw DomainError("magnetic field must be non-negative");
  if (!(rho0 > 0.0) || std::isinf(rho0)) throw DomainError("disc radius must be finite and positive");

  // Flux form -(1/(2 rho)) d/drho (rho dR/drho) on cell centres, zero flux through
  // rho = 0 and R = 0 at the wall. Symmetrizing with u_i = sqrt(rho_i) R_i gives a
  // symmetric tridiagonal matrix; this is the discrete form of the u = sqrt(rho) R
  // substitution.
  const int n = grid.n;
  const double h = grid.spacing(rho0);
  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> off(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    const double rho = grid.point(i, rho0);
    const double face_in = rho - 0.5 * h;
    const double face_out = rho + 0.5 * h;
    double v = B * B * rho * rho / 8.0 + 0.5 * m * B;
    if (m != 0) v += m * m / (2.0 * rho * rho);
    if (coulomb_on) v -= 1.0 / rho;
    diag[static_cast<std::size_t>(i)] = (face_in + face_out) / (2.0 * h * h * rho) + v;
    if (i + 1 < n) {
      const double next = grid.point(i + 1, rho0);
      off[static_cast<std::size_t>(i)] = -face_out / (2.0 * h * h * std::sqrt(rho * next));
    }
  }
  return lowest_eigenvalue(diag, off);
}

double ground_energy_2d(double B, double rho0, const RadialGrid& grid, bool coulomb_on) {
  const double coarse = ground_energy_2d_single(B, rho0, grid, coulomb_on);
  const double fine = ground_energy_2d_single(B, rho0, grid.refined(), coulomb_on);
  if (std::abs(coarse - fine) > 1e-4)
    throw ResolutionError("2D eigenvalue not converged: |E_n - E_2n| = " + std::to_string(std::abs(coarse - fine)));
  return (4.0 * fine - coarse) / 3.0;
}

double ratio_3d_2d(double E3d, double B, double rho0, const RadialGrid& grid) {
  const double E2d = ground_energy_2d(B, rho0, grid);
  if (E2d == 0.0) throw DomainError("E(2D) vanishes; ratio undefined");
  if (!(E3d < 0.0)) return 0.0;
  return E3d / E2d;
}

} // namespace cylvar
