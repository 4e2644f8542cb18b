#pragma once

namespace shequid {

/// Physical constants used throughout (CODATA 2018, rounded).
/// Kept in one record so alternative values can be injected in tests.
struct PhysicalConstants {
  double G = 6.674e-11;     // gravitational constant [m^3 kg^-1 s^-2]
  double hbar = 1.0546e-34; // reduced Planck constant [J s]
  double m_he4 = 6.6465e-27; // He-4 atomic mass [kg]
  double eps0 = 8.854e-12;  // vacuum permittivity [F/m]
};

inline constexpr PhysicalConstants kCodata{};

/// Earth rotation rate [rad/s]; the fully-perpendicular Sagnac default.
inline constexpr double kOmegaEarth = 7.292e-5;

}  // namespace shequid
