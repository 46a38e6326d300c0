#include "qscale/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qscale/errors.hpp"
#include "qscale/format.hpp"

namespace qscale {

namespace {

void require_finite(double value, double lower, bool inclusive, const char* name) {
  const bool ok = std::isfinite(value) && (inclusive ? value >= lower : value > lower);
  if (!ok) {
    throw DomainError(std::string(name) + (inclusive ? " must be finite and >= " : " must be finite and > ") +
                      format_real(lower));
  }
}

std::string law_text(const GrowthLaw& law) {
  return "T = " + format_real(law.c()) + "*N^" + format_real(law.alpha()) + "/(log2 N)^" +
         format_real(law.beta());
}

}  // namespace

GrowthLaw GrowthLaw::make(double c, double alpha, double beta) {
  require_finite(c, 0.0, false, "c");
  require_finite(alpha, 0.0, true, "alpha");
  require_finite(beta, 0.0, true, "beta");
  return GrowthLaw(c, alpha, beta);
}

GrowthLaw GrowthLaw::strictly_linear(double levels) {
  require_finite(levels, 1.0, false, "qudit levels");
  return make(1.0 / std::log2(levels), 1.0, 0.0);
}

double GrowthLaw::evaluate(std::uint64_t n) const {
  if (n < 2) throw DomainError("growth law is undefined for N < 2");
  const double nn = static_cast<double>(n);
  double value = c_ * std::pow(nn, alpha_);
  if (beta_ != 0.0) value /= std::pow(std::log2(nn), beta_);
  return value;
}

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::StrictlyScalable: return "StrictlyScalable";
    case Verdict::Scalable: return "Scalable";
    case Verdict::NonscalableExponential: return "NonscalableExponential";
    case Verdict::FieldRegimeRequired: return "FieldRegimeRequired";
  }
  return "Unknown";
}

std::uint64_t dof_count(const GrowthLaw& law, std::uint64_t n) {
  const double rounded = std::floor(law.evaluate(n) + 0.5);
  // 2^63 is exact in double and safely below the uint64 range.
  if (!(rounded < 9223372036854775808.0)) throw DomainError("degree-of-freedom count overflows 64 bits");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(rounded));
}

double action_per_dof_log2(std::uint64_t n, std::uint64_t t) {
  if (t == 0) throw DomainError("T must be >= 1");
  return static_cast<double>(n) / static_cast<double>(t);
}

double total_action_log2(std::uint64_t n, std::uint64_t t) {
  return std::log2(static_cast<double>(t)) + action_per_dof_log2(n, t);
}

ScalingVerdict classify(const GrowthLaw& law) {
  const double c = law.c();
  const double alpha = law.alpha();
  const double beta = law.beta();
  const std::string form = law_text(law);

  if (alpha > 1.0) {
    return {Verdict::FieldRegimeRequired, std::nullopt,
            form + "; alpha > 1: T outgrows N, A/h -> 1 per degree of freedom; mode counting of a quantum field "
                   "is required"};
  }
  if (alpha < 1.0) {
    return {Verdict::NonscalableExponential, std::nullopt,
            form + "; alpha < 1: log2(A/h) = N/T grows as N^" + format_real(1.0 - alpha) +
                " times a log factor, so A/h is exponential in N"};
  }
  if (beta == 0.0) {
    const double levels = std::exp2(1.0 / c);
    if (c <= 1.0) {
      return {Verdict::StrictlyScalable, levels,
              form + "; alpha = 1, beta = 0: T = N/log2 D with D = 2^(1/c) = " + format_real(levels) +
                  ", constant action per degree of freedom"};
    }
    return {Verdict::FieldRegimeRequired, std::nullopt,
            form + "; alpha = 1, beta = 0: implied D = 2^(1/c) = " + format_real(levels) +
                " < 2, per-DOF analysis breaks down"};
  }
  if (beta <= 1.0) {
    std::string evidence = form + "; alpha = 1, 0 < beta <= 1: log2(A/h) = (log2 N)^" + format_real(beta) + "/" +
                           format_real(c) + ", A/h is polynomially bounded";
    if (beta == 1.0) evidence += "; P(N) = N^" + format_real(1.0 / c);
    return {Verdict::Scalable, std::nullopt, std::move(evidence)};
  }
  return {Verdict::NonscalableExponential, std::nullopt,
          form + "; alpha = 1, beta > 1: log2(A/h) = (log2 N)^" + format_real(beta) + "/" + format_real(c) +
              ", A/h is superpolynomial"};
}

ScalingVerdict classify_numeric(std::span<const GrowthSample> samples, const NumericThresholds& thresholds) {
  if (samples.size() < thresholds.min_samples) {
    throw DomainError("numeric classification needs at least " + std::to_string(thresholds.min_samples) +
                      " samples, got " + std::to_string(samples.size()));
  }
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].n < thresholds.min_n) {
      throw DomainError("sample N must be >= " + std::to_string(thresholds.min_n));
    }
    if (samples[i].t < 1) throw DomainError("sample T must be >= 1");
    if (i > 0 && samples[i].n <= samples[i - 1].n) throw DomainError("sample N must be strictly increasing");
  }

  std::vector<double> per_dof(samples.size());
  std::vector<double> ratio(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    per_dof[i] = action_per_dof_log2(samples[i].n, samples[i].t);
    ratio[i] = per_dof[i] / std::log2(static_cast<double>(samples[i].n));
  }

  const auto describe = [&](std::string head) {
    return head + "; N/T: " + format_real(per_dof.front()) + " -> " + format_real(per_dof.back()) +
           ", r = (N/T)/log2 N: " + format_real(ratio.front()) + " -> " + format_real(ratio.back());
  };

  const double first = per_dof.front();
  const bool constant = std::all_of(per_dof.begin(), per_dof.end(), [&](double x) {
    return std::abs(x - first) <= thresholds.constant_rel * std::abs(first);
  });
  if (constant) {
    const double levels = std::exp2(first);
    if (first >= 1.0) {
      return {Verdict::StrictlyScalable, levels,
              describe("N/T constant, D = 2^(N/T) = " + format_real(levels))};
    }
    return {Verdict::FieldRegimeRequired, std::nullopt,
            describe("N/T constant, implied D = " + format_real(levels) + " < 2")};
  }

  if (per_dof.back() < thresholds.field_cutoff) {
    return {Verdict::FieldRegimeRequired, std::nullopt,
            describe("N/T falls below " + format_real(thresholds.field_cutoff))};
  }

  const std::size_t start = samples.size() / 2;
  const auto [lo, hi] = std::minmax_element(ratio.begin() + static_cast<std::ptrdiff_t>(start), ratio.end());
  if (*hi <= (1.0 + thresholds.drift_rel) * *lo + thresholds.drift_abs) {
    return {Verdict::Scalable, std::nullopt, describe("r bounded over the last half")};
  }
  if (ratio.back() >= (1.0 + thresholds.growth_trigger) * ratio[start]) {
    return {Verdict::NonscalableExponential, std::nullopt, describe("r grows across the last half")};
  }
  if (*hi <= (1.0 + thresholds.drift_rel) * ratio[start] + thresholds.drift_abs) {
    return {Verdict::Scalable, std::nullopt, describe("r nonincreasing over the last half")};
  }
  return {Verdict::NonscalableExponential, std::nullopt, describe("r rises above its window start")};
}

std::vector<GrowthSample> sample_law(const GrowthLaw& law, std::span<const std::uint64_t> n_values) {
  std::vector<GrowthSample> samples;
  samples.reserve(n_values.size());
  for (const auto n : n_values) samples.push_back({n, dof_count(law, n)});
  return samples;
}

ResourceCurve curve(const GrowthLaw& law, std::span<const std::uint64_t> n_values) {
  ResourceCurve result;
  result.points.reserve(n_values.size());
  for (const auto n : n_values) {
    const std::uint64_t t = dof_count(law, n);
    result.points.push_back({n, t, action_per_dof_log2(n, t), total_action_log2(n, t)});
  }
  return result;
}

}  // namespace qscale
