#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "qscale/errors.hpp"
#include "qscale/phase_space.hpp"
#include "qscale/tiling.hpp"

using namespace qscale;

namespace {

SystemModel repeated(const DegreeOfFreedom& dof, std::uint64_t count) {
  SystemModel system("s");
  system.add(dof, count);
  return system;
}

SystemModel random_system(std::mt19937_64& rng) {
  SystemModel system("random");
  std::uniform_int_distribution<int> entries(0, 5);
  for (int i = entries(rng); i > 0; --i) {
    const auto count = std::uniform_int_distribution<std::uint64_t>(1, 40)(rng);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: system.add(DegreeOfFreedom::qudit(std::uniform_int_distribution<std::uint64_t>(1, 9)(rng)), count); break;
      case 1: system.add(DegreeOfFreedom::continuous_h(std::uniform_real_distribution<double>(0, 12)(rng)), count); break;
      default: system.add(DegreeOfFreedom::angular(std::uniform_real_distribution<double>(0, 6)(rng)), count);
    }
  }
  return system;
}

}  // namespace

TEST_CASE("action_of per variant") {
  CHECK(action_of(DegreeOfFreedom::qudit(5)).in_units_of_h() == 5.0);
  CHECK(action_of(DegreeOfFreedom::angular(1.0)).in_units_of_h() == 1.0);
  CHECK(action_of(DegreeOfFreedom::continuous_h(2.0)).in_units_of_h() == 2.0);
  CHECK(ActionBudget::from_ranges(4.0, 0.5, 1.0).in_units_of_h() == 2.0);
  CHECK(ActionBudget::from_ranges(3.0, 2.0, 1.5).in_units_of_h() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(ActionBudget::from_angular_spread(2.5).in_units_of_h() == 2.5);
}

TEST_CASE("action budgets reject negative or non-finite values") {
  CHECK_THROWS_AS(ActionBudget::in_units_of_h(-0.1), DomainError);
  CHECK_THROWS_AS(ActionBudget::in_units_of_h(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(ActionBudget::in_units_of_h(std::nan("")), DomainError);
  CHECK_THROWS_AS(ActionBudget::from_ranges(1.0, 1.0, 0.0), DomainError);
  CHECK_THROWS_AS(ActionBudget::from_ranges(-1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(DegreeOfFreedom::angular(-1.0), DomainError);
  CHECK_THROWS_AS(DegreeOfFreedom::qudit(0), DomainError);
  SystemModel system("s");
  CHECK_THROWS_AS(system.add(DegreeOfFreedom::qudit(2), 0), DomainError);
}

TEST_CASE("dof_dimension floors and clamps") {
  CHECK(dof_dimension(DegreeOfFreedom::continuous_h(2.0)) == 2);
  CHECK(dof_dimension(DegreeOfFreedom::continuous_h(0.3)) == 1);
  CHECK(dof_dimension(DegreeOfFreedom::continuous_h(0.0)) == 1);
  CHECK(dof_dimension(DegreeOfFreedom::continuous_h(7.999)) == 7);
  CHECK(dof_dimension(DegreeOfFreedom::qudit(7)) == 7);
  CHECK(dof_dimension(DegreeOfFreedom::angular(3.5)) == 3);
  CHECK(dof_dimension(DegreeOfFreedom::continuous_h(1e30)) == BigInt(1e30));
}

TEST_CASE("system_dimension examples") {
  const auto threebit = system_dimension(repeated(DegreeOfFreedom::continuous_h(2.0), 3));
  CHECK(threebit.exact == 8);
  CHECK(threebit.log2 == 3.0);
  CHECK(threebit.phase_space_volume_log2 == 3.0);

  const auto empty = system_dimension(SystemModel("empty"));
  CHECK(empty.exact == 1);
  CHECK(empty.log2 == 0.0);

  const auto qubits = system_dimension(repeated(DegreeOfFreedom::qudit(2), 100));
  CHECK(qubits.exact == pow2(100));
  CHECK(qubits.log2 == 100.0);

  // Flooring affects the dimension, not the phase-space volume.
  const auto fractional = system_dimension(repeated(DegreeOfFreedom::continuous_h(2.5), 2));
  CHECK(fractional.exact == 4);
  CHECK(fractional.phase_space_volume_log2 == doctest::Approx(2.0 * std::log2(2.5)));

  const auto zero = system_dimension(repeated(DegreeOfFreedom::continuous_h(0.0), 1));
  CHECK(zero.exact == 1);
  CHECK(std::isinf(zero.phase_space_volume_log2));
}

TEST_CASE("qubit_equivalent uses the exact bit length") {
  CHECK(qubit_equivalent(repeated(DegreeOfFreedom::qudit(2), 100)) == 100);
  CHECK(qubit_equivalent(repeated(DegreeOfFreedom::qudit(3), 10)) == 15);
  CHECK(qubit_equivalent(repeated(DegreeOfFreedom::continuous_h(8.0), 1)) == 3);
  CHECK(qubit_equivalent(SystemModel("empty")) == 0);
  // 2^53 + 1 is not representable as a double; the bit length still is.
  SystemModel near("near");
  near.add(DegreeOfFreedom::qudit((std::uint64_t{1} << 53) + 1));
  CHECK(qubit_equivalent(near) == 53);
  // 2^64 - 1 rounds up to 2^64 in double.
  SystemModel top("top");
  top.add(DegreeOfFreedom::qudit(~std::uint64_t{0}));
  CHECK(qubit_equivalent(top) == 63);
}

TEST_CASE("million-DOF system stays representable") {
  const auto budget = system_dimension(repeated(DegreeOfFreedom::qudit(2), 1000000));
  CHECK(qubit_equivalent(budget) == 1000000);
  CHECK(budget.log2 == 1000000.0);
  CHECK(repeated(DegreeOfFreedom::qudit(2), 1000000).dof_count() == 1000000);
}

TEST_CASE("property: product law under combine") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_system(rng);
    const auto b = random_system(rng);
    const auto joint = combine(a, b);
    CHECK(system_dimension(joint).exact == system_dimension(a).exact * system_dimension(b).exact);
    CHECK(joint.dof_count() == a.dof_count() + b.dof_count());
  }
}

TEST_CASE("property: increasing an action never lowers the dimension") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const double base = std::uniform_real_distribution<double>(0, 20)(rng);
    const double bump = std::uniform_real_distribution<double>(0, 5)(rng);
    const auto count = std::uniform_int_distribution<std::uint64_t>(1, 30)(rng);
    const auto rest = random_system(rng);
    const auto low = combine(repeated(DegreeOfFreedom::continuous_h(base), count), rest);
    const auto high = combine(repeated(DegreeOfFreedom::continuous_h(base + bump), count), rest);
    CHECK(system_dimension(low).exact <= system_dimension(high).exact);
  }
}

TEST_CASE("property: log2 agrees with the exact integer") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const auto system = random_system(rng);
    const auto budget = system_dimension(system);
    if (bit_length(budget.exact) > 2048) continue;
    const double reference = qscale::log2(budget.exact);
    CHECK(std::abs(budget.log2 - reference) <= 1e-9 * std::max(1.0, reference));
    CHECK(qubit_equivalent(budget) == bit_length(budget.exact) - 1);
  }
}

TEST_CASE("oracle: enumeration count matches the product for small qudit systems") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint64_t> dims(std::uniform_int_distribution<std::size_t>(0, 6)(rng));
    for (auto& d : dims) d = std::uniform_int_distribution<std::uint64_t>(1, 4)(rng);
    SystemModel system("q");
    for (const auto d : dims) system.add(DegreeOfFreedom::qudit(d));
    CHECK(system_dimension(system).exact == tiling::enumerate_cells(dims).size());
  }
}

TEST_CASE("bigint helpers") {
  CHECK(bit_length(BigInt(0)) == 0);
  CHECK(bit_length(BigInt(1)) == 1);
  CHECK(bit_length(pow2(200)) == 201);
  CHECK(qscale::log2(pow2(5000)) == 5000.0);
  CHECK(qscale::log2(BigInt(3)) == doctest::Approx(std::log2(3.0)));
  CHECK_THROWS_AS(qscale::log2(BigInt(0)), DomainError);
}
