#include <doctest.h>

#include <algorithm>
#include <limits>

#include "cylvar/errors.hpp"

#include <sstream>

#include "cylvar/errors.hpp"
#include "cylvar/scan_io.hpp"

using namespace cylvar;

namespace {
std::vector<ScanRecord> sample() {
  ScanRecord a;
  a.B = 0.4;
  a.rho0 = 3.0;
  a.E = -0.434574444;
  a.alpha = 1.0385;
  a.beta = -0.2059;
  a.nu = 2.0958;
  a.E0 = 0.3;
  a.Eb = 0.73;
  a.mean_rho = 0.94;
  a.mean_abs_z = 0.68;
  a.aspect_ratio = 0.69;
  a.shannon_r = 3.58;
  a.cusp_Z = 1.0385;
  a.converged = true;
  a.evals = 301;
  a.bound_state = true;
  ScanRecord b;
  b.B = 0.0;
  b.rho0 = std::numeric_limits<double>::infinity();
  b.E = -0.5;
  b.gamma = 0.0;
  b.evals = 12;
  return {a, b};
}

bool same(const ScanRecord& x, const ScanRecord& y) {
  return x.B == y.B && x.rho0 == y.rho0 && x.E == y.E && x.alpha == y.alpha && x.beta == y.beta && x.nu == y.nu &&
         x.gamma == y.gamma && x.E0 == y.E0 && x.Eb == y.Eb && x.mean_rho == y.mean_rho &&
         x.mean_abs_z == y.mean_abs_z && x.aspect_ratio == y.aspect_ratio && x.shannon_r == y.shannon_r &&
         x.cusp_Z == y.cusp_Z && x.converged == y.converged && x.evals == y.evals && x.bound_state == y.bound_state;
}
} // namespace

TEST_CASE("CSV round trip") {
  std::ostringstream os;
  write_csv(os, sample());
  CHECK(os.str().rfind(std::string(kCsvHeader) + "\n", 0) == 0);
  std::istringstream is(os.str());
  const auto back = read_csv(is);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(same(back[i], sample()[i]));
  std::ostringstream again;
  write_csv(again, back);
  CHECK(again.str() == os.str());
}

TEST_CASE("JSON round trip agrees with CSV") {
  std::ostringstream os;
  write_json(os, sample());
  std::istringstream is(os.str());
  const auto back = read_json(is);
  REQUIRE(back.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) CHECK(same(back[i], sample()[i]));
}

TEST_CASE("number formatting") {
  CHECK(format_number(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(parse_number("inf") == std::numeric_limits<double>::infinity());
  CHECK(parse_number("2.5") == 2.5);
  CHECK_THROWS_AS(parse_number("2.5x"), DomainError);
  std::istringstream bad("B,rho0\n");
  CHECK_THROWS_AS(read_csv(bad), DomainError);
}
