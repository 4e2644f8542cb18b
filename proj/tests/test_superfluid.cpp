#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "shequid/superfluid.hpp"

using namespace shequid;

namespace {

SuperfluidParams at_reduced(double reduced) {
  SuperfluidParams p;
  p.allow_wide_regime = true;
  p.T = p.T_lambda * (1.0 - reduced);
  return p;
}

}  // namespace

TEST_CASE("density law at the default operating point") {
  SuperfluidParams p;  // T_lambda - 20 uK
  // Hand evaluation of 2.4 * 150 * (1 - T/T_lambda)^(2/3) at 50-digit
  // precision from the same double inputs.
  CHECK(rho_s(p) == doctest::Approx(0.15825204905127066).epsilon(5e-11));
  CHECK(rho_s(p) == doctest::Approx(0.158).epsilon(5e-3));
}

TEST_CASE("density vanishes at the transition") {
  SuperfluidParams p;
  p.T = p.T_lambda;
  CHECK(rho_s(p) == 0.0);
}

TEST_CASE("density at reduced temperature 1e-6") {
  // (1e-6)^(2/3) = 1e-4 exactly, times 2.4 * 150 = 360.
  CHECK(rho_s(at_reduced(1e-6)) == doctest::Approx(0.036).epsilon(1e-12));
}

TEST_CASE("density errors") {
  SuperfluidParams p;
  p.T = p.T_lambda + 1e-3;
  CHECK_THROWS_WITH_AS(rho_s(p), doctest::Contains("above lambda point"),
                       std::domain_error);

  SuperfluidParams q;
  q.T = q.T_lambda - 2e-3;  // outside the 1 mK window
  CHECK_THROWS_WITH_AS(rho_s(q), doctest::Contains("outside ideal Josephson regime"),
                       std::domain_error);
  q.allow_wide_regime = true;
  CHECK(rho_s(q) > 0.0);
}

TEST_CASE("exponent-2/3 scaling: 8x reduced temperature gives 4x density") {
  for (double x : {1e-7, 1e-6, 1e-5, 3.33e-5}) {
    const double lo = rho_s(at_reduced(x));
    const double hi = rho_s(at_reduced(8.0 * x));
    CHECK(hi / lo == doctest::Approx(4.0).epsilon(1e-12));
  }
}

TEST_CASE("density increases as temperature decreases") {
  double prev = 0.0;
  for (double x : {1e-8, 1e-7, 1e-6, 1e-5, 1e-4}) {
    const double rho = rho_s(at_reduced(x));
    CHECK(rho > prev);
    prev = rho;
  }
}

TEST_CASE("arm mass") {
  Geometry g;  // L = 0.03, sigma = 4e-6
  CHECK(arm_mass(g, 0.158) == doctest::Approx(1.90e-8).epsilon(1e-3));
  CHECK(arm_mass(g, 0.0) == 0.0);

  Geometry doubled = g;
  doubled.sigma *= 2.0;
  CHECK(arm_mass(doubled, 0.158) == doctest::Approx(2.0 * arm_mass(g, 0.158)));

  // multilinear in L, sigma, rho_s
  Geometry scaled = g;
  scaled.L *= 3.0;
  scaled.sigma *= 5.0;
  CHECK(arm_mass(scaled, 7.0 * 0.158) ==
        doctest::Approx(105.0 * arm_mass(g, 0.158)).epsilon(1e-12));

  CHECK_THROWS_AS(arm_mass(g, -1.0), std::domain_error);
}

TEST_CASE("junction time") {
  CHECK(junction_time(5e3) == doctest::Approx(1e-4).epsilon(1e-15));
  CHECK(junction_time(1e3) == doctest::Approx(5e-4).epsilon(1e-15));
  CHECK(junction_time(1e4) == doctest::Approx(5e-5).epsilon(1e-15));
  CHECK_THROWS_AS(junction_time(0.0), std::domain_error);
  CHECK_THROWS_AS(junction_time(-1.0), std::domain_error);

  // dt_J * f_J = 1/2 exactly
  for (double f : {1.0, 3.0, 5e3, 1.7e4}) CHECK(junction_time(f) * f == 0.5);
}

TEST_CASE("parameter validation names the offending field") {
  SuperfluidParams p;
  p.T = p.T_lambda + 1.0;
  CHECK_THROWS_WITH_AS(validate(p), doctest::Contains("superfluid.T"),
                       std::invalid_argument);

  Geometry g;
  g.d = -1.0;
  CHECK_THROWS_WITH_AS(validate(g), doctest::Contains("geometry.d"),
                       std::invalid_argument);

  Geometry far = {};
  far.d = far.L * 2.5;  // violates d < 2L
  CHECK_THROWS_WITH_AS(validate(far), doctest::Contains("geometry.d"),
                       std::invalid_argument);

  DriveParams dr;
  dr.f_J = 0.0;
  CHECK_THROWS_WITH_AS(validate(dr), doctest::Contains("drive.f_J"),
                       std::invalid_argument);
}
