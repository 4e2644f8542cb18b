#include "shequid/superfluid.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace shequid {

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw std::invalid_argument(field + ": " + what);
}

void require_positive(double v, const char* field) {
  if (!(v > 0.0) || !std::isfinite(v)) fail(field, "must be strictly positive");
}

}  // namespace

void validate(const SuperfluidParams& p) {
  require_positive(p.T_lambda, "superfluid.T_lambda");
  require_positive(p.rho_lambda, "superfluid.rho_lambda");
  require_positive(p.T, "superfluid.T");
  if (!(p.epsilon_r > 1.0)) fail("superfluid.epsilon_r", "must exceed 1");
  if (!(p.T < p.T_lambda)) fail("superfluid.T", "above lambda point");
  if (!p.allow_wide_regime && p.T_lambda - p.T > kRegimeWindow)
    fail("superfluid.T", "outside ideal Josephson regime (more than 1 mK below "
         "T_lambda; set allow_wide_regime to override)");
}

void validate(const Geometry& g) {
  require_positive(g.L, "geometry.L");
  require_positive(g.sigma, "geometry.sigma");
  require_positive(g.d, "geometry.d");
  require_positive(g.loop_area, "geometry.loop_area");
  if (!(g.d < 2.0 * g.L))
    fail("geometry.d", "nearest-pair ordering requires d < 2L");
}

void validate(const DriveParams& d) {
  require_positive(d.f_J, "drive.f_J");
  require_positive(d.f_m, "drive.f_m");
  if (!(d.delta_d >= 0.0)) fail("drive.delta_d", "must be non-negative");
  if (!(d.E_field >= 0.0)) fail("drive.E_field", "must be non-negative");
  if (!std::isfinite(d.delta_d) || !std::isfinite(d.E_field))
    fail("drive", "non-finite value");
}

double rho_s(const SuperfluidParams& p) {
  if (!(p.T < p.T_lambda)) {
    if (p.T == p.T_lambda) return 0.0;  // density vanishes at the transition
    throw std::domain_error("rho_s: above lambda point (T >= T_lambda)");
  }
  if (!p.allow_wide_regime && p.T_lambda - p.T > kRegimeWindow)
    throw std::domain_error(
        "rho_s: outside ideal Josephson regime (T_lambda - T > 1 mK; set "
        "allow_wide_regime to override)");
  const double reduced = 1.0 - p.T / p.T_lambda;
  return 2.4 * p.rho_lambda * std::pow(reduced, 2.0 / 3.0);
}

double arm_mass(const Geometry& g, double rho_s) {
  if (rho_s < 0.0) throw std::domain_error("arm_mass: negative density");
  return g.L * g.sigma * rho_s;
}

double junction_time(double f_J) {
  if (!(f_J > 0.0))
    throw std::domain_error("junction_time: f_J must be strictly positive");
  return 1.0 / (2.0 * f_J);
}

}  // namespace shequid
