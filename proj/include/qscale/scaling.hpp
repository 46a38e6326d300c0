#pragma once

// How many degrees of freedom T an architecture needs for N qubits, and what
// that implies for the action each of them must supply.
//
// With T identical degrees of freedom of action A, (A/h)^T ~ 2^N, so
// log2(A/h) = N/T and the total action is log2(T·A/h) = log2 T + N/T.
// An architecture is scalable when A/h stays polynomially bounded in N.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qscale {

/// T(N) = max(1, round(c·N^alpha / (log2 N)^beta)), defined for N >= 2.
class GrowthLaw {
 public:
  static GrowthLaw make(double c, double alpha, double beta);
  /// T = N / log2 D: a fixed D-level system per degree of freedom.
  static GrowthLaw strictly_linear(double levels);

  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] double alpha() const noexcept { return alpha_; }
  [[nodiscard]] double beta() const noexcept { return beta_; }

  /// The unrounded value c·N^alpha/(log2 N)^beta.
  [[nodiscard]] double evaluate(std::uint64_t n) const;

  friend bool operator==(const GrowthLaw&, const GrowthLaw&) = default;

 private:
  GrowthLaw(double c, double alpha, double beta) : c_(c), alpha_(alpha), beta_(beta) {}
  double c_;
  double alpha_;
  double beta_;
};

enum class Verdict {
  StrictlyScalable,
  Scalable,
  NonscalableExponential,
  FieldRegimeRequired,
};

std::string_view to_string(Verdict verdict);

struct ScalingVerdict {
  Verdict category;
  /// D = 2^(N/T); present only for strictly linear laws.
  std::optional<double> implied_qudit_levels;
  std::string evidence;
};

struct CurvePoint {
  std::uint64_t n;
  std::uint64_t t;
  double action_per_dof_log2;
  double total_action_log2;
};

struct ResourceCurve {
  std::vector<CurvePoint> points;
};

std::uint64_t dof_count(const GrowthLaw& law, std::uint64_t n);

/// log2(A/h) = N/T.
double action_per_dof_log2(std::uint64_t n, std::uint64_t t);

/// log2(T·A/h) = log2 T + N/T.
double total_action_log2(std::uint64_t n, std::uint64_t t);

/// Symbolic classification; exponents are compared exactly against 0 and 1.
ScalingVerdict classify(const GrowthLaw& law);

struct GrowthSample {
  std::uint64_t n;
  std::uint64_t t;
};

/// Decision thresholds for the numeric probe.  All windows are the last half
/// of the sample list.
struct NumericThresholds {
  std::size_t min_samples = 8;
  std::uint64_t min_n = 4;
  /// r = (N/T)/log2 N counts as bounded when max <= (1 + drift_rel)·min + drift_abs.
  double drift_rel = 0.05;
  double drift_abs = 0.05;
  /// r growing by at least this fraction across the window is superpolynomial.
  double growth_trigger = 0.10;
  /// Final N/T strictly below this means T outgrows N.
  double field_cutoff = 0.5;
  /// N/T this close to constant (relative) counts as strictly linear.
  double constant_rel = 1e-6;
};

ScalingVerdict classify_numeric(std::span<const GrowthSample> samples, const NumericThresholds& thresholds = {});

/// Exact samples of a law on the given grid.
std::vector<GrowthSample> sample_law(const GrowthLaw& law, std::span<const std::uint64_t> n_values);

ResourceCurve curve(const GrowthLaw& law, std::span<const std::uint64_t> n_values);

}  // namespace qscale
