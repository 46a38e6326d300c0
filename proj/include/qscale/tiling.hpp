#pragma once

// Brute-force enumeration of nonoverlapping phase-space cells, one cell per
// orthogonal basis state.  Acts as an independent check on the product-of-
// dimensions count and compares unary (one DOF) and binary (many DOF)
// realizations of the same Hilbert space.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qscale/bigint.hpp"

namespace qscale::tiling {

/// Enumeration refuses to produce more cells than this.
inline constexpr std::uint64_t max_enumerated_cells = std::uint64_t{1} << 24;

struct CellLabel {
  /// Per-DOF cell index; the last DOF varies fastest.
  std::vector<std::uint64_t> multi_index;
  std::uint64_t flat_index;
  /// flat_index in base 2, padded to ceil(log2 total) digits.
  std::string binary_label;
  /// flat_index in base 10.
  std::string unary_label;

  friend bool operator==(const CellLabel&, const CellLabel&) = default;
};

/// Product of dims, rejecting dims < 1 and products beyond the guard.
std::uint64_t cell_count(std::span<const std::uint64_t> dims);

std::vector<CellLabel> enumerate_cells(std::span<const std::uint64_t> dims);

/// Enumerated count equals the exact dimension of the matching qudit system.
bool verify_product(std::span<const std::uint64_t> dims);

struct Realization {
  std::uint64_t dof_count;
  BigInt per_dof_action_h;
  double per_dof_action_log2;
  BigInt total_action_h;
  double total_action_log2;
};

struct RealizationComparison {
  std::uint64_t n_qubits;
  /// Shared Hilbert-space dimension 2^N.
  BigInt dimension;
  /// N qubit-like DOFs of action 2h each.
  Realization multi;
  /// One DOF holding all 2^N cells.
  Realization unary;
  /// log2 of unary action over multi per-DOF action, N - 1.
  double action_ratio_log2;
};

RealizationComparison compare_realizations(std::uint64_t n_qubits);

}  // namespace qscale::tiling
