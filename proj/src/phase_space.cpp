#include "qscale/phase_space.hpp"

#include <cmath>
#include <limits>

#include "qscale/errors.hpp"

namespace qscale {

namespace {

// 2^32 bits is half a gigabyte per integer.
constexpr std::uint64_t max_exact_bits = std::uint64_t{1} << 32;

double checked_action(double value, const char* what) {
  if (!std::isfinite(value) || value < 0.0) {
    throw DomainError(std::string(what) + " must be finite and >= 0");
  }
  return value;
}

}  // namespace

ActionBudget ActionBudget::in_units_of_h(double action_over_h) {
  return ActionBudget(checked_action(action_over_h, "action"));
}

ActionBudget ActionBudget::from_ranges(double delta_q, double delta_p, double h) {
  checked_action(delta_q, "dq");
  checked_action(delta_p, "dp");
  if (!std::isfinite(h) || h <= 0.0) throw DomainError("h must be finite and > 0");
  return ActionBudget(checked_action(delta_q * delta_p / h, "dq*dp/h"));
}

ActionBudget ActionBudget::from_angular_spread(double delta_j_over_hbar) {
  return ActionBudget(checked_action(delta_j_over_hbar, "dj/hbar"));
}

DegreeOfFreedom DegreeOfFreedom::continuous(ActionBudget action) {
  return DegreeOfFreedom(Continuous{action});
}

DegreeOfFreedom DegreeOfFreedom::continuous_h(double action_over_h) {
  return continuous(ActionBudget::in_units_of_h(action_over_h));
}

DegreeOfFreedom DegreeOfFreedom::angular(double delta_j_over_hbar) {
  checked_action(delta_j_over_hbar, "dj/hbar");
  return DegreeOfFreedom(AngularMomentum{delta_j_over_hbar});
}

DegreeOfFreedom DegreeOfFreedom::qudit(std::uint64_t levels) {
  if (levels < 1) throw DomainError("levels must be >= 1");
  return DegreeOfFreedom(Qudit{levels});
}

SystemModel::SystemModel(std::string name, std::vector<DofEntry> entries) : name_(std::move(name)) {
  entries_.reserve(entries.size());
  for (auto& entry : entries) add(entry.dof, entry.multiplicity);
}

SystemModel& SystemModel::add(DegreeOfFreedom dof, std::uint64_t multiplicity) {
  if (multiplicity < 1) throw DomainError("count must be >= 1");
  entries_.push_back(DofEntry{dof, multiplicity});
  return *this;
}

BigInt SystemModel::dof_count() const {
  BigInt total = 0;
  for (const auto& entry : entries_) total += entry.multiplicity;
  return total;
}

SystemModel combine(const SystemModel& first, const SystemModel& second, std::string name) {
  std::vector<DofEntry> entries = first.entries();
  entries.insert(entries.end(), second.entries().begin(), second.entries().end());
  if (name.empty()) name = first.name() + "+" + second.name();
  return SystemModel(std::move(name), std::move(entries));
}

ActionBudget action_of(const DegreeOfFreedom& dof) {
  struct Visitor {
    ActionBudget operator()(const Continuous& c) const { return c.action; }
    ActionBudget operator()(const AngularMomentum& a) const {
      return ActionBudget::from_angular_spread(a.delta_j_over_hbar);
    }
    ActionBudget operator()(const Qudit& q) const {
      return ActionBudget::in_units_of_h(static_cast<double>(q.levels));
    }
  };
  return std::visit(Visitor{}, dof.variant());
}

BigInt dof_dimension(const DegreeOfFreedom& dof) {
  if (const auto* q = std::get_if<Qudit>(&dof.variant())) return BigInt(q->levels);
  const double cells = std::floor(action_of(dof).in_units_of_h());
  if (cells < 1.0) return 1;
  // Exact for every finite double: floor() already removed the fraction.
  return BigInt(cells);
}

DimensionBudget system_dimension(const SystemModel& system) {
  DimensionBudget budget;
  for (const auto& entry : system.entries()) {
    const BigInt dim = dof_dimension(entry.dof);
    const double count = static_cast<double>(entry.multiplicity);
    if (dim != 1) {
      if (entry.multiplicity > max_exact_bits / bit_length(dim)) {
        throw DomainError("dimension of system '" + system.name() + "' exceeds the exact-integer limit");
      }
      budget.exact *= boost::multiprecision::pow(dim, static_cast<unsigned>(entry.multiplicity));
      budget.log2 += count * qscale::log2(dim);
    }
    const double action = action_of(entry.dof).in_units_of_h();
    budget.phase_space_volume_log2 +=
        action > 0.0 ? count * std::log2(action) : -std::numeric_limits<double>::infinity();
  }
  return budget;
}

std::uint64_t qubit_equivalent(const DimensionBudget& budget) { return bit_length(budget.exact) - 1; }

std::uint64_t qubit_equivalent(const SystemModel& system) {
  return qubit_equivalent(system_dimension(system));
}

}  // namespace qscale
