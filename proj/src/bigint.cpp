#include "qscale/bigint.hpp"

#include <cmath>
#include <limits>

#include "qscale/errors.hpp"

namespace qscale {

std::uint64_t bit_length(const BigInt& value) {
  if (value == 0) return 0;
  return static_cast<std::uint64_t>(boost::multiprecision::msb(abs(value))) + 1;
}

double log2(const BigInt& value) {
  if (value <= 0) throw DomainError("log2 of a non-positive integer");
  const std::uint64_t bits = bit_length(value);
  // Keep the top 64 bits; the discarded tail moves the result by < 2^-63.
  const std::uint64_t shift = bits > 64 ? bits - 64 : 0;
  const BigInt top = value >> shift;
  return static_cast<double>(shift) + std::log2(top.convert_to<double>());
}

BigInt pow2(std::uint64_t exponent) {
  BigInt result = 0;
  boost::multiprecision::bit_set(result, exponent);
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

}  // namespace qscale
