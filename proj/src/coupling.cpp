#include "shequid/coupling.hpp"

#include <cmath>
#include <stdexcept>

#include "shequid/quadrature.hpp"

namespace shequid {

double grav_phase(double mass, double d, double delta_t, double A,
                  const PhysicalConstants& c) {
  if (!(d > 0.0)) throw std::domain_error("grav_phase: degenerate separation");
  if (!(delta_t > 0.0))
    throw std::domain_error("grav_phase: delta_t must be positive");
  if (mass < 0.0) throw std::domain_error("grav_phase: negative mass");
  if (!(A > 0.0)) throw std::domain_error("grav_phase: form factor must be positive");
  return A * mass * mass * (c.G / c.hbar) * delta_t / d;
}

double form_factor_line(double L, double d) {
  if (!(L > 0.0) || !(d > 0.0))
    throw std::domain_error("form_factor_line: L and d must be positive");
  const double r = L / d;
  // A(r) = 2 [ asinh(r)/r - (sqrt(1+r^2) - 1)/r^2 ], with the second term in
  // the cancellation-free form 1/(sqrt(1+r^2) + 1).
  return 2.0 * (std::asinh(r) / r - 1.0 / (std::sqrt(1.0 + r * r) + 1.0));
}

double form_factor_line_quadrature(double L, double d, double abs_tol) {
  if (!(L > 0.0) || !(d > 0.0))
    throw std::domain_error("form_factor_line_quadrature: L and d must be positive");
  const double r = L / d;
  // Normalized double integral over the unit square:
  //   A = int_0^1 int_0^1 ds dt / sqrt(1 + r^2 (s - t)^2), integrand in (0, 1].
  const auto inner = [r, abs_tol](double t) {
    const auto f = [r, t](double s) {
      const double v = r * (s - t);
      return 1.0 / std::sqrt(1.0 + v * v);
    };
    return integrate_adaptive(f, 0.0, 1.0, 0.25 * abs_tol).value;
  };
  return integrate_adaptive(inner, 0.0, 1.0, 0.5 * abs_tol).value;
}

namespace {

// Dimensionless separation-direction force kernels for two parallel lines of
// identical dipoles, in units of 1/(4 pi eps0 d^4) per squared dipole moment;
// v is the along-line offset in units of d. Derived from
// U = [1 - 3 (e.n)^2] p^2 / (4 pi eps0 R^3) and F = -dU/dd.
double dipole_kernel(double v, FieldOrientation orientation) {
  const double q = 1.0 + v * v;
  const double q7 = std::pow(q, 3.5);
  if (orientation == FieldOrientation::perpendicular)
    return 3.0 * (1.0 - 4.0 * v * v) / q7;  // repulsive at v = 0
  return 3.0 * (3.0 * v * v - 2.0) / q7;    // head-to-tail: attractive
}

}  // namespace

double point_dipole_force(double p, double d, FieldOrientation orientation,
                          const PhysicalConstants& c) {
  if (!(d > 0.0)) throw std::domain_error("point_dipole_force: degenerate separation");
  const double scale = p * p / (4.0 * M_PI * c.eps0 * d * d * d * d);
  return scale * dipole_kernel(0.0, orientation);
}

double em_line_force(double E_field, const Geometry& geometry, double epsilon_r,
                     FieldOrientation orientation, const PhysicalConstants& c) {
  if (E_field < 0.0)
    throw std::domain_error("em_line_force: E_field must be non-negative");
  if (E_field == 0.0) return 0.0;
  if (!(epsilon_r > 1.0))
    throw std::domain_error("em_line_force: epsilon_r must exceed 1");

  // Clausius-Mossotti effective susceptibility; induced dipole moment per
  // unit length of the polarized column.
  const double chi_eff = 3.0 * (epsilon_r - 1.0) / (epsilon_r + 2.0);
  const double p_line = c.eps0 * chi_eff * E_field * geometry.sigma;

  const double rho = geometry.L / geometry.d;
  const auto inner = [rho, orientation](double t) {
    const auto f = [rho, orientation, t](double s) {
      return dipole_kernel(rho * (s - t), orientation);
    };
    return integrate_adaptive(f, 0.0, 1.0, 2.5e-13).value;
  };
  const double J = integrate_adaptive(inner, 0.0, 1.0, 5.0e-13).value;

  const double d = geometry.d;
  return p_line * p_line * geometry.L * geometry.L /
         (4.0 * M_PI * c.eps0 * d * d * d * d) * J;
}

double em_phase(double F_E, double d, double delta_t,
                const PhysicalConstants& c) {
  if (!(d > 0.0)) throw std::domain_error("em_phase: degenerate separation");
  if (!std::isfinite(F_E) || !std::isfinite(delta_t))
    throw std::domain_error("em_phase: non-finite input");
  return F_E * d * delta_t / c.hbar;
}

double compensating_field(const ExperimentConfig& config, double rel_tol) {
  validate(config);
  const CouplingResult base = couple(config);
  const double target = base.phi_grav;
  if (target == 0.0) return 0.0;
  if (!(target > 0.0))
    throw std::domain_error("compensating_field: gravitational phase must be positive");

  const auto phi_em_mag = [&](double E) {
    const double F = em_line_force(E, config.geometry, config.superfluid.epsilon_r,
                                   config.drive.orientation, config.constants);
    return std::abs(em_phase(F, config.geometry.d, base.delta_t, config.constants));
  };

  // Bracket: F_E is quadratic in E, hence phi_em is monotone for E > 0.
  double lo = 0.0, f_lo = -target;
  double hi = std::min(1.0, config.E_max);
  double f_hi = phi_em_mag(hi) - target;
  while (f_hi < 0.0) {
    if (hi >= config.E_max)
      throw std::runtime_error("compensating_field: compensation field out of range");
    hi = std::min(4.0 * hi, config.E_max);
    f_hi = phi_em_mag(hi) - target;
  }

  // Illinois false-position until the forward residual meets rel_tol.
  double root = hi;
  for (int iter = 0; iter < 200; ++iter) {
    root = (f_hi * lo - f_lo * hi) / (f_hi - f_lo);
    if (!(root > lo) || !(root < hi)) root = 0.5 * (lo + hi);
    const double f_root = phi_em_mag(root) - target;
    if (std::abs(f_root) <= rel_tol * target) return root;
    if ((f_root < 0.0) == (f_lo < 0.0)) {
      lo = root;
      f_lo = f_root;
      f_hi *= 0.5;  // Illinois scaling keeps the bracket converging
    } else {
      hi = root;
      f_hi = f_root;
      f_lo *= 0.5;
    }
  }
  throw std::runtime_error("compensating_field: root finder failed to converge");
}

double resolve_form_factor(const ExperimentConfig& config, double separation) {
  switch (config.form_factor_policy) {
    case FormFactorPolicy::computed:
      return form_factor_line(config.geometry.L, separation);
    case FormFactorPolicy::reference:
      return kReferenceFormFactor;
    case FormFactorPolicy::explicit_value:
      return config.form_factor_value;
  }
  throw std::logic_error("resolve_form_factor: unhandled policy");
}

CouplingResult couple(const ExperimentConfig& config) {
  validate(config);
  CouplingResult out;
  const double rho = rho_s(config.superfluid);
  out.mass = arm_mass(config.geometry, rho);
  out.delta_t = junction_time(config.drive.f_J);
  out.d_effective = config.geometry.d;
  out.form_factor_A = resolve_form_factor(config, config.geometry.d);
  out.phi_grav = grav_phase(out.mass, config.geometry.d, out.delta_t,
                            out.form_factor_A, config.constants);
  if (config.drive.E_field > 0.0) {
    const double F =
        em_line_force(config.drive.E_field, config.geometry,
                      config.superfluid.epsilon_r, config.drive.orientation,
                      config.constants);
    // Store with the attraction-positive convention: a repulsive force
    // (positive F) opposes the gravitational phase.
    out.phi_em = -em_phase(F, config.geometry.d, out.delta_t, config.constants);
  }
  return out;
}

}  // namespace shequid
