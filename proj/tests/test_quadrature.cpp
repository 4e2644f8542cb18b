#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "shequid/quadrature.hpp"

using namespace shequid;

TEST_CASE("polynomials are integrated exactly") {
  const auto r = integrate_adaptive([](double x) { return x * x; }, 0.0, 1.0, 1e-12);
  CHECK(r.value == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(r.evaluations == 15);  // single panel suffices
}

TEST_CASE("sine over a half period") {
  const auto r = integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                                    M_PI, 1e-13);
  CHECK(r.value == doctest::Approx(2.0).epsilon(1e-13));
}

TEST_CASE("gaussian against a frozen high-precision value") {
  const auto r = integrate_adaptive(
      [](double x) { return std::exp(-x * x); }, 0.0, 1.0, 1e-13);
  CHECK(r.value == doctest::Approx(0.74682413281242702540).epsilon(1e-13));
}

TEST_CASE("near-singular integrand forces subdivision") {
  // int_0^1 dx / sqrt(x + a) = 2 (sqrt(1 + a) - sqrt(a))
  const double a = 1e-8;
  const auto r = integrate_adaptive(
      [a](double x) { return 1.0 / std::sqrt(x + a); }, 0.0, 1.0, 1e-11);
  const double exact = 2.0 * (std::sqrt(1.0 + a) - std::sqrt(a));
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-10));
  CHECK(r.evaluations > 15);
}

TEST_CASE("empty interval") {
  const auto r = integrate_adaptive([](double) { return 1.0; }, 2.0, 2.0, 1e-12);
  CHECK(r.value == 0.0);
  CHECK(r.evaluations == 0);
}

TEST_CASE("narrow ridge resolved to tolerance") {
  // Peak of width 1e-3 inside a unit interval, as in the large-L/d form
  // factor integrand. Exact: atan scaled.
  const double w = 1e-3;
  const auto r = integrate_adaptive(
      [w](double x) { return w / (w * w + (x - 0.37) * (x - 0.37)); }, 0.0, 1.0,
      1e-12);
  const double exact = std::atan(0.63 / w) + std::atan(0.37 / w);
  CHECK(r.value == doctest::Approx(exact).epsilon(1e-11));
}
