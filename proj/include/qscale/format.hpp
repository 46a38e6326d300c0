#pragma once

#include <string>

namespace qscale {

/// Shortest decimal text that reads back as the same double.  "inf", "-inf"
/// and "nan" for non-finite values.
std::string format_real(double value);

}  // namespace qscale
