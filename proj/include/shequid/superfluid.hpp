#pragma once

#include "shequid/types.hpp"

namespace shequid {

/// Superfluid He-4 material parameters. The operating regime for ideal
/// (non-dissipative) Josephson behaviour is T within 1 mK below T_lambda;
/// rho_s rejects temperatures outside it unless allow_wide_regime is set.
struct SuperfluidParams {
  double T_lambda = 2.17;      // lambda point [K]
  double rho_lambda = 1.5e2;   // density at the lambda point [kg/m^3]
  double T = 2.17 - 20e-6;     // operating temperature [K]
  double epsilon_r = 1.057;    // relative dielectric constant of liquid He-4
  bool allow_wide_regime = false;  // lift the 1 mK regime guard (sweeps)
};

/// Interferometer geometry. Each loop is a square of side L; the two
/// side-by-side arms sit a distance d apart, d < 2L.
struct Geometry {
  double L = 3e-2;          // arm length [m]
  double sigma = 4e-6;      // channel cross section [m^2]
  double d = 1e-2;          // side-by-side arm separation [m]
  double loop_area = 9e-4;  // effective rotation-sensing area [m^2] (L^2)
};

/// Probe and modulation drive.
struct DriveParams {
  double f_J = 5e3;       // Josephson probe frequency [Hz]
  double delta_d = 1e-6;  // piezo modulation amplitude [m]
  double f_m = 1.0;       // piezo modulation frequency [Hz]
  double E_field = 0.0;   // applied static electric field [V/m]
  FieldOrientation orientation = FieldOrientation::perpendicular;
};

/// Width of the ideal-Josephson operating window below T_lambda [K].
inline constexpr double kRegimeWindow = 1e-3;

/// Throw std::invalid_argument naming the offending field.
void validate(const SuperfluidParams& p);
void validate(const Geometry& g);
void validate(const DriveParams& d);

/// Superfluid density rho_s(T) = 2.4 rho_lambda (1 - T/T_lambda)^(2/3).
/// Throws above the lambda point, and outside the 1 mK operating window
/// unless p.allow_wide_regime.
double rho_s(const SuperfluidParams& p);

/// Interacting arm mass m = L sigma rho_s.
double arm_mass(const Geometry& g, double rho_s);

/// Characteristic junction time dt_J = 1/(2 f_J).
double junction_time(double f_J);

}  // namespace shequid
