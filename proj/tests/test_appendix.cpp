#include <doctest.h>

#include <algorithm>
#include <limits>

#include "cylvar/errors.hpp"

#include "cylvar/appendix.hpp"

using namespace cylvar;

TEST_CASE("Poly2 calculus") {
  const Poly2 p{{{2, 0}, 3.0}, {{1, 1}, -2.0}, {{0, 0}, 1.0}}; // 3r^2 - 2ru + 1
  CHECK(p(2.0, 0.5) == doctest::Approx(11.0));
  CHECK(p.d_r()(2.0, 0.5) == doctest::Approx(11.0));
  CHECK(p.d_u()(2.0, 0.5) == doctest::Approx(-4.0));
  CHECK(p.integrate_r().d_r()(1.3, 0.7) == doctest::Approx(p(1.3, 0.7)));
  CHECK(p.degree() == 2);
  CHECK((p - p).max_abs_coeff() == 0.0);
}

TEST_CASE("label map") {
  const QuantumLabels l = map_labels(3, 2, 0);
  CHECK(l.N + 1 + std::abs(l.m) + l.p == 3);
  CHECK(energy_nmp(l) == doctest::Approx(-1.0 / 18.0));
  CHECK_THROWS_AS(map_labels(2, 2, 0), DomainError);
  CHECK_THROWS_AS(map_labels(2, 1, 2), DomainError);
}

TEST_CASE("table verifies") {
  const AppendixReport rep = verify_rows(chi_table());
  CHECK(rep.rows.size() == 14);
  CHECK(rep.all_passed);
  for (const auto& r : rep.rows) CHECK(r.max_residual <= 1e-10);
  CHECK_NOTHROW(verify_table());
}

TEST_CASE("mutated coefficient is detected") {
  auto rows = chi_table();
  for (auto& row : rows)
    if (row.label == "r-2") row.chi = Poly2{{{1, 0}, 1.0}, {{0, 0}, -2.01}};
  const AppendixReport rep = verify_rows(rows);
  CHECK_FALSE(rep.all_passed);
}

TEST_CASE("degeneracy counts") {
  for (int n = 1; n <= 6; ++n) CHECK(mapped_state_count(n) == n * n);
  CHECK(distinct_triple_count(3) == 8);
}
