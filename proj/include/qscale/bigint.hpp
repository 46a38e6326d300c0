#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qscale {

using BigInt = boost::multiprecision::cpp_int;

/// Number of bits needed to write |value|; 0 for 0.
std::uint64_t bit_length(const BigInt& value);

/// Base-2 logarithm of a positive integer, accurate to double precision for
/// values far beyond the double range.
double log2(const BigInt& value);

/// 2^exponent.
BigInt pow2(std::uint64_t exponent);

std::string to_decimal(const BigInt& value);

}  // namespace qscale
