#include "qscale/hydrogen.hpp"

#include "qscale/constants.hpp"
#include "qscale/errors.hpp"

namespace qscale::hydrogen {

BigInt bound_state_count(const BigInt& n) {
  if (n < 0) throw DomainError("principal quantum number must be >= 0");
  return n * (n + 1) * (2 * n + 1) / 6;
}

BigInt min_principal_qn(std::uint64_t n_qubits) {
  if (n_qubits < 1) throw DomainError("qubit count must be >= 1");
  const BigInt target = pow2(n_qubits);

  BigInt hi = 2;
  while (bound_state_count(hi) < target) hi *= 2;
  // count(lo - 1) < target <= count(hi)
  BigInt lo = 1;
  while (lo < hi) {
    const BigInt mid = (lo + hi) / 2;
    if (bound_state_count(mid) >= target) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

OrbitParameters orbit_parameters(const BigInt& n) {
  if (n < 1) throw DomainError("principal quantum number must be >= 1");
  const double nd = n.convert_to<double>();
  return {n, -1.0 / (2.0 * nd * nd), n * n, 1.0 / nd};
}

HydrogenReport radius_report(std::uint64_t n_qubits) {
  BigInt n = min_principal_qn(n_qubits);
  const OrbitParameters orbit = orbit_parameters(n);
  const double radius_km = orbit.radius_a0.convert_to<double>() * constants::bohr_radius_km;
  return {n_qubits, n, bound_state_count(n), orbit.radius_a0, radius_km, radius_km / constants::solar_diameter_km};
}

}  // namespace qscale::hydrogen
