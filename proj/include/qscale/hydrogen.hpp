#pragma once

// Spinless hydrogenic bound states.  Level k holds k^2 states (sum over l of
// 2l+1), so all levels up to n hold n(n+1)(2n+1)/6 ~ n^3/3 states.

#include <cstdint>

#include "qscale/bigint.hpp"

namespace qscale::hydrogen {

struct OrbitParameters {
  BigInt n;
  /// E_n in units of e^2/a0 (one Hartree).
  double energy_e2_per_a0;
  /// r_n = n^2 in units of a0.
  BigInt radius_a0;
  /// p_n = 1/n in units of hbar/a0.
  double momentum_hbar_per_a0;
};

struct HydrogenReport {
  std::uint64_t target_qubits;
  BigInt n_min;
  BigInt state_count;
  BigInt radius_a0;
  double radius_km;
  double sun_diameter_ratio;
};

BigInt bound_state_count(const BigInt& n);

/// Smallest n whose bound states span at least 2^n_qubits dimensions.
BigInt min_principal_qn(std::uint64_t n_qubits);

OrbitParameters orbit_parameters(const BigInt& n);

HydrogenReport radius_report(std::uint64_t n_qubits);

}  // namespace qscale::hydrogen
