#include "cylvar/appendix.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <tuple>

#include "cylvar/errors.hpp"

namespace cylvar {

Poly2::Poly2(std::initializer_list<std::pair<const Key, double>> terms) {
  for (const auto& [key, c] : terms) add(key.first, key.second, c);
}

double Poly2::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? 0.0 : it->second;
}

void Poly2::add(int i, int j, double c) {
  if (i < 0 || j < 0) throw DomainError("negative power in Poly2");
  if (c == 0.0) return;
  auto& slot = terms_[{i, j}];
  slot += c;
  if (slot == 0.0) terms_.erase({i, j});
}

double Poly2::operator()(double r, double u) const {
  double sum = 0.0;
  for (const auto& [key, c] : terms_) sum += c * std::pow(r, key.first) * std::pow(u, key.second);
  return sum;
}

int Poly2::degree() const {
  int d = 0;
  for (const auto& [key, c] : terms_) d = std::max(d, key.first + key.second);
  return d;
}

Poly2 Poly2::d_r() const {
  Poly2 out;
  for (const auto& [key, c] : terms_)
    if (key.first > 0) out.add(key.first - 1, key.second, c * key.first);
  return out;
}

Poly2 Poly2::d_u() const {
  Poly2 out;
  for (const auto& [key, c] : terms_)
    if (key.second > 0) out.add(key.first, key.second - 1, c * key.second);
  return out;
}

Poly2 Poly2::integrate_r() const {
  Poly2 out;
  for (const auto& [key, c] : terms_) out.add(key.first + 1, key.second, c / (key.first + 1));
  return out;
}

Poly2 Poly2::times_monomial(int i, int j, double c) const {
  Poly2 out;
  for (const auto& [key, v] : terms_) out.add(key.first + i, key.second + j, v * c);
  return out;
}

Poly2& Poly2::operator+=(const Poly2& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& other) {
  for (const auto& [key, c] : other.terms_) add(key.first, key.second, -c);
  return *this;
}

double Poly2::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [key, c] : terms_) m = std::max(m, std::abs(c));
  return m;
}

QuantumLabels map_labels(int n, int ell, int m) {
  if (n < 1 || ell < 0 || ell >= n || std::abs(m) > ell)
    throw DomainError("require n >= 1, 0 <= l < n, |m| <= l");
  const int p = (ell - std::abs(m)) % 2 == 0 ? 0 : 1;
  return {n, ell, m, p, n - (1 + std::abs(m) + p)};
}

double energy_nmp(const QuantumLabels& labels, double k) {
  const double n_eff = labels.N + 1 + std::abs(labels.m) + labels.p;
  return -k * k / (2.0 * n_eff * n_eff);
}

Poly2 apply_h_residual(const Poly2& chi, double E, int p, int abs_m, double k) {
  if (!(E < 0.0)) throw DomainError("apply_h needs E < 0");
  const double kappa = std::sqrt(-2.0 * E);
  const double s = 1.0 + p + abs_m;

  const Poly2 dr = chi.d_r();
  const Poly2 du = chi.d_u();
  const Poly2 drr = dr.d_r();
  const Poly2 duu = du.d_u();
  const Poly2 dru = dr.d_u();

  Poly2 h;
  h += drr.times_monomial(1, 0, -0.5);
  h += duu.times_monomial(1, 1, -2.0);
  h += dru.times_monomial(0, 1, -2.0);
  h += du.times_monomial(1, 0, -2.0 * (1.0 + abs_m));
  h += du.times_monomial(0, 1, 2.0 * kappa);
  h += dr.times_monomial(0, 0, -s);
  h += dr.times_monomial(1, 0, kappa);
  h += chi.times_monomial(0, 0, kappa * s);
  return h - k * chi;
}

std::vector<TableRow> chi_table() {
  const Poly2 one = Poly2::constant(1.0);
  const Poly2 r_minus_2{{{1, 0}, 1.0}, {{0, 0}, -2.0}};
  const Poly2 r_minus_6{{{1, 0}, 1.0}, {{0, 0}, -6.0}};
  const Poly2 n3_s{{{2, 0}, 2.0}, {{1, 0}, -18.0}, {{0, 0}, 27.0}};
  const Poly2 n3_d{{{2, 0}, 2.0}, {{0, 1}, -3.0}};
  return {
      {1, 0, 0, 0, 0, one, "1"},
      {2, 0, 0, 0, 1, r_minus_2, "r-2"},
      {2, 1, -1, 0, 0, one, "1"},
      {2, 1, 0, 1, 0, one, "1"},
      {2, 1, 1, 0, 0, one, "1"},
      {3, 0, 0, 0, 2, n3_s, "2r^2-18r+27"},
      {3, 1, -1, 0, 1, r_minus_6, "r-6"},
      {3, 1, 0, 1, 1, r_minus_6, "r-6"},
      {3, 1, 1, 0, 1, r_minus_6, "r-6"},
      {3, 2, -2, 0, 0, one, "1"},
      {3, 2, -1, 1, 0, one, "1"},
      {3, 2, 0, 0, 2, n3_d, "2r^2-3u"},
      {3, 2, 1, 1, 0, one, "1"},
      {3, 2, 2, 0, 0, one, "1"},
  };
}

AppendixReport verify_rows(const std::vector<TableRow>& rows, double tolerance, int samples) {
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> dist(0.0, 10.0);
  std::vector<std::pair<double, double>> points(static_cast<std::size_t>(samples));
  for (auto& pt : points) pt = {dist(rng), dist(rng)};

  AppendixReport report;
  for (const auto& row : rows) {
    const QuantumLabels labels = map_labels(row.n, row.ell, row.m);
    const double E = -1.0 / (2.0 * row.n * row.n);
    const Poly2 res = apply_h_residual(row.chi, E, row.p, std::abs(row.m));
    double worst = 0.0;
    for (const auto& [r, u] : points) worst = std::max(worst, std::abs(res(r, u)));

    RowReport rr{row, worst, res.max_abs_coeff(), labels.p == row.p && labels.N == row.N, false};
    rr.passed = rr.labels_match && worst <= tolerance;
    report.all_passed = report.all_passed && rr.passed;
    report.rows.push_back(std::move(rr));
  }
  return report;
}

AppendixReport verify_table(double tolerance) {
  AppendixReport report = verify_rows(chi_table(), tolerance);
  for (const auto& rr : report.rows) {
    if (!rr.passed) {
      throw VerificationError("row (n=" + std::to_string(rr.row.n) + ", l=" + std::to_string(rr.row.ell) +
                              ", m=" + std::to_string(rr.row.m) + ", chi=" + rr.row.label +
                              ") fails: residual " + std::to_string(rr.max_residual));
    }
  }
  return report;
}

int mapped_state_count(int n) {
  int count = 0;
  for (int ell = 0; ell < n; ++ell) {
    for (int m = -ell; m <= ell; ++m) {
      const QuantumLabels q = map_labels(n, ell, m);
      if (q.N >= 0 && q.N + 1 + std::abs(q.m) + q.p == n) ++count;
    }
  }
  return count;
}

int distinct_triple_count(int n) {
  std::set<std::tuple<int, int, int>> triples;
  for (int p = 0; p <= 1; ++p)
    for (int m = -(n - 1); m <= n - 1; ++m) {
      const int N = n - 1 - std::abs(m) - p;
      if (N >= 0) triples.insert({N, m, p});
    }
  return static_cast<int>(triples.size());
}

} // namespace cylvar
