#pragma once

// Conversion constants.  Everything else in the hydrogenic model is in atomic
// units (e = m = hbar = 1).

namespace qscale::constants {

/// Bohr radius, CODATA 2018 recommended value.
inline constexpr double bohr_radius_m = 5.29177210903e-11;
inline constexpr double bohr_radius_km = bohr_radius_m * 1e-3;

/// Solar diameter, twice the IAU 2015 nominal solar radius rounded to
/// 1.3927e6 km.
inline constexpr double solar_diameter_km = 1.3927e6;

}  // namespace qscale::constants
