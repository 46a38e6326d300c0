#include "qscale/tiling.hpp"

#include <cmath>

#include "qscale/errors.hpp"
#include "qscale/phase_space.hpp"

namespace qscale::tiling {

namespace {

std::string binary_digits(std::uint64_t value, std::size_t width) {
  std::string digits(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if ((value >> i) & 1u) digits[width - 1 - i] = '1';
  }
  return digits;
}

// ceil(log2 total) for total >= 2, else 1.
std::size_t label_width(std::uint64_t total) {
  std::size_t width = 0;
  while ((std::uint64_t{1} << width) < total) ++width;
  return width == 0 ? 1 : width;
}

}  // namespace

std::uint64_t cell_count(std::span<const std::uint64_t> dims) {
  std::uint64_t total = 1;
  for (const auto dim : dims) {
    if (dim < 1) throw DomainError("cell dimensions must be >= 1");
    if (dim > max_enumerated_cells || total * dim > max_enumerated_cells) {
      throw DomainError("enumeration would exceed " + std::to_string(max_enumerated_cells) + " cells");
    }
    total *= dim;
  }
  return total;
}

std::vector<CellLabel> enumerate_cells(std::span<const std::uint64_t> dims) {
  const std::uint64_t total = cell_count(dims);
  const std::size_t width = label_width(total);

  std::vector<CellLabel> cells;
  cells.reserve(total);
  std::vector<std::uint64_t> index(dims.size(), 0);
  for (std::uint64_t flat = 0; flat < total; ++flat) {
    cells.push_back({index, flat, binary_digits(flat, width), std::to_string(flat)});
    // Odometer step, last position fastest.
    for (std::size_t j = dims.size(); j-- > 0;) {
      if (++index[j] < dims[j]) break;
      index[j] = 0;
    }
  }
  return cells;
}

bool verify_product(std::span<const std::uint64_t> dims) {
  const auto cells = enumerate_cells(dims);
  SystemModel system("tiling");
  for (const auto dim : dims) system.add(DegreeOfFreedom::qudit(dim));
  return system_dimension(system).exact == cells.size();
}

RealizationComparison compare_realizations(std::uint64_t n_qubits) {
  if (n_qubits < 1) throw DomainError("qubit count must be >= 1");
  const double n = static_cast<double>(n_qubits);
  const BigInt dimension = pow2(n_qubits);

  Realization multi{n_qubits, 2, 1.0, 2 * BigInt(n_qubits), 1.0 + std::log2(n)};
  Realization unary{1, dimension, n, dimension, n};
  return {n_qubits, dimension, std::move(multi), std::move(unary), n - 1.0};
}

}  // namespace qscale::tiling
