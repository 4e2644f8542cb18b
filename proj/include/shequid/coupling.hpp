#pragma once

#include "shequid/constants.hpp"
#include "shequid/experiment_config.hpp"
#include "shequid/superfluid.hpp"

namespace shequid {

/// Inter-arm couplings evaluated at one operating point.
/// phi_grav >= 0 (attraction); phi_em <= 0 for a repulsive field orientation,
/// so the observable total is phi_grav + phi_em.
struct CouplingResult {
  double phi_grav = 0.0;      // gravitational branch phase [rad]
  double phi_em = 0.0;        // electrostatic branch phase [rad], signed
  double form_factor_A = 0.0; // dimensionless, in (0, 1] for the line model
  double mass = 0.0;          // interacting arm mass [kg]
  double delta_t = 0.0;       // junction characteristic time [s]
  double d_effective = 0.0;   // separation used [m]
};

/// Gravitational branch phase A m^2 (G/hbar) delta_t / d.
double grav_phase(double mass, double d, double delta_t, double A,
                  const PhysicalConstants& c = kCodata);

/// Mutual-energy form factor of two parallel finite uniform line masses of
/// length L at separation d, normalized so the point-mass limit is 1:
///   A = (d/L^2) * integral_0^L integral_0^L dx dy / sqrt((x-y)^2 + d^2).
/// Closed form, stable for all L/d (point limit handled analytically).
double form_factor_line(double L, double d);

/// Same quantity by nested adaptive quadrature of the normalized double
/// integral; the independent cross-check route for form_factor_line.
double form_factor_line_quadrature(double L, double d, double abs_tol = 1e-12);

/// Electrostatic force between the two polarized superfluid columns, modeled
/// as parallel finite lines of induced dipole density
///   p_l = eps0 * chi_eff * E * sigma,   chi_eff = 3(eps_r - 1)/(eps_r + 2),
/// integrated by nested adaptive quadrature over both lines. Positive return
/// means repulsion (field perpendicular to the separation axis); the parallel
/// orientation gives attraction (negative).
double em_line_force(double E_field, const Geometry& geometry, double epsilon_r,
                     FieldOrientation orientation,
                     const PhysicalConstants& c = kCodata);

/// Force on one point dipole p from an identical parallel dipole at
/// separation d, both oriented as given; positive = repulsive. The L -> 0
/// limit of em_line_force for p = p_l * L.
double point_dipole_force(double p, double d, FieldOrientation orientation,
                          const PhysicalConstants& c = kCodata);

/// Phase acquired by substituting the force F_E for the gravitational
/// attraction: F_E d delta_t / hbar. Sign follows the sign of F_E.
double em_phase(double F_E, double d, double delta_t,
                const PhysicalConstants& c = kCodata);

/// Field magnitude E* such that |em_phase(em_line_force(E*))| equals the
/// gravitational phase of the config, to relative tolerance rel_tol, by
/// bracketing + bisection/secant on the monotone map E -> F_E(E).
/// Throws if no bracket exists below config.E_max.
double compensating_field(const ExperimentConfig& config,
                          double rel_tol = 1e-9);

/// Evaluate the full coupling chain (density, mass, timing, form factor,
/// phases) for the config at its nominal separation.
CouplingResult couple(const ExperimentConfig& config);

}  // namespace shequid
