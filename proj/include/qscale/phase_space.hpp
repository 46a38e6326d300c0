#pragma once

// Degrees of freedom, their action budgets measured in units of Planck's
// constant h, and exact Hilbert-space dimension accounting.
//
// A degree of freedom that supplies an action A offers roughly A/h mutually
// orthogonal states.  Here that count is taken as floor(A/h), clamped so that
// every degree of freedom contributes at least a one-dimensional space.  The
// dimension of a composite system is the product of the per-DOF dimensions
// (tensor-product structure) and is kept as an exact integer.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qscale/bigint.hpp"

namespace qscale {

/// Action A/h, a dimensionless nonnegative real.
class ActionBudget {
 public:
  constexpr ActionBudget() = default;

  static ActionBudget in_units_of_h(double action_over_h);
  /// Δq·Δp/h for a position/momentum range pair, all in one consistent unit
  /// system.
  static ActionBudget from_ranges(double delta_q, double delta_p, double h);
  /// An angular momentum spread ΔJ (in units of ħ) covers Δq = 2π, so
  /// A = 2πΔJ and A/h = ΔJ/ħ.
  static ActionBudget from_angular_spread(double delta_j_over_hbar);

  [[nodiscard]] double in_units_of_h() const noexcept { return value_; }

  friend bool operator==(const ActionBudget&, const ActionBudget&) = default;
  friend auto operator<=>(const ActionBudget&, const ActionBudget&) = default;

 private:
  explicit constexpr ActionBudget(double value) : value_(value) {}
  double value_ = 0.0;
};

struct Continuous {
  ActionBudget action;
  friend bool operator==(const Continuous&, const Continuous&) = default;
};

struct AngularMomentum {
  double delta_j_over_hbar = 0.0;
  friend bool operator==(const AngularMomentum&, const AngularMomentum&) = default;
};

struct Qudit {
  std::uint64_t levels = 1;
  friend bool operator==(const Qudit&, const Qudit&) = default;
};

/// One physical degree of freedom.  Construct through the named factories,
/// which enforce the per-variant invariants.
class DegreeOfFreedom {
 public:
  using Variant = std::variant<Continuous, AngularMomentum, Qudit>;

  static DegreeOfFreedom continuous(ActionBudget action);
  static DegreeOfFreedom continuous_h(double action_over_h);
  static DegreeOfFreedom angular(double delta_j_over_hbar);
  static DegreeOfFreedom qudit(std::uint64_t levels);

  [[nodiscard]] const Variant& variant() const noexcept { return value_; }

  friend bool operator==(const DegreeOfFreedom&, const DegreeOfFreedom&) = default;

 private:
  explicit DegreeOfFreedom(Variant value) : value_(value) {}
  Variant value_;
};

struct DofEntry {
  DegreeOfFreedom dof;
  std::uint64_t multiplicity = 1;
  friend bool operator==(const DofEntry&, const DofEntry&) = default;
};

/// A named collection of degrees of freedom.  Repeated identical degrees of
/// freedom are stored once with a multiplicity.
class SystemModel {
 public:
  explicit SystemModel(std::string name = {}) : name_(std::move(name)) {}
  SystemModel(std::string name, std::vector<DofEntry> entries);

  SystemModel& add(DegreeOfFreedom dof, std::uint64_t multiplicity = 1);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const std::vector<DofEntry>& entries() const noexcept { return entries_; }
  /// Total degree-of-freedom count T (sum of multiplicities).
  [[nodiscard]] BigInt dof_count() const;

  friend bool operator==(const SystemModel&, const SystemModel&) = default;

 private:
  std::string name_;
  std::vector<DofEntry> entries_;
};

/// Joint system of two independent subsystems (tensor product of their
/// Hilbert spaces).
SystemModel combine(const SystemModel& first, const SystemModel& second, std::string name = {});

struct DimensionBudget {
  BigInt exact = 1;
  double log2 = 0.0;
  /// log2(V / h^T), V being the phase-space volume before per-DOF flooring.
  /// -inf when some degree of freedom has zero action.
  double phase_space_volume_log2 = 0.0;
};

ActionBudget action_of(const DegreeOfFreedom& dof);
BigInt dof_dimension(const DegreeOfFreedom& dof);
DimensionBudget system_dimension(const SystemModel& system);

/// floor(log2(dimension)), taken from the bit length of the exact integer.
std::uint64_t qubit_equivalent(const DimensionBudget& budget);
std::uint64_t qubit_equivalent(const SystemModel& system);

}  // namespace qscale
