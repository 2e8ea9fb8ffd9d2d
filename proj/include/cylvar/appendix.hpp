#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cylvar {

// Polynomial in r and u = rho^2: sum of c_ij r^i u^j.
class Poly2 {
public:
  using Key = std::pair<int, int>; // (power of r, power of u)

  Poly2() = default;
  Poly2(std::initializer_list<std::pair<const Key, double>> terms);
  static Poly2 constant(double c) { return Poly2{{{0, 0}, c}}; }

  double coeff(int i, int j) const;
  void add(int i, int j, double c);
  const std::map<Key, double>& terms() const { return terms_; }

  double operator()(double r, double u) const;
  int degree() const;

  Poly2 d_r() const;
  Poly2 d_u() const;
  // Antiderivative in r with zero constant term.
  Poly2 integrate_r() const;
  // Multiplies by r^i u^j and a scalar.
  Poly2 times_monomial(int i, int j, double c) const;

  Poly2& operator+=(const Poly2& other);
  Poly2& operator-=(const Poly2& other);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(double c, const Poly2& p) { return p.times_monomial(0, 0, c); }

  // Largest |coefficient|.
  double max_abs_coeff() const;

private:
  std::map<Key, double> terms_;
};

struct QuantumLabels {
  int n;
  int ell;
  int m;
  int p;
  int N;
};

// (n, l, m) -> (N, m, p) with p = (1 - (-1)^(l - |m|)) / 2 and N = n - (1 + |m| + p).
QuantumLabels map_labels(int n, int ell, int m);

// E = -k^2 / (2 (N + 1 + |m| + p)^2).
double energy_nmp(const QuantumLabels& labels, double k = 1.0);

// Residual (h - k) chi of the algebraic operator in (r, u) with kappa = sqrt(-2E):
//   h = -1/2 r d_rr - 2 r u d_uu - 2 u d_ru - 2 [r (1 + |m|) - u kappa] d_u
//       - (1 + p + |m| - r kappa) d_r + kappa (1 + p + |m|)
Poly2 apply_h_residual(const Poly2& chi, double E, int p, int abs_m, double k = 1.0);

struct TableRow {
  int n;
  int ell;
  int m;
  int p;
  int N;
  Poly2 chi;
  std::string label;
};

// Eigenpolynomials for n = 1, 2, 3 with k = 1.
std::vector<TableRow> chi_table();

struct RowReport {
  TableRow row;
  double max_residual;     // largest |residual| over the sampled points
  double max_coefficient;  // largest |coefficient| of the residual polynomial
  bool labels_match;
  bool passed;
};

struct AppendixReport {
  std::vector<RowReport> rows;
  bool all_passed = true;
};

// Residual check at E = -1/(2 n^2), k = 1 over sample points in (0, 10)^2.
AppendixReport verify_rows(const std::vector<TableRow>& rows, double tolerance = 1e-10, int samples = 100);

// Same, for the built-in table. Throws VerificationError naming the first failing row.
AppendixReport verify_table(double tolerance = 1e-10);

// Number of (l, m) states at principal number n whose mapped labels satisfy
// N + 1 + |m| + p = n with N >= 0.
int mapped_state_count(int n);

// Number of distinct (N, m, p) triples with N + 1 + |m| + p = n.
int distinct_triple_count(int n);

} // namespace cylvar
