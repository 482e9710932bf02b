#pragma once

#include <string>

namespace sl2optics {

/// Shortest decimal form with 17 significant digits: round-trips any
/// finite double exactly. Negative zero is flattened to "0".
std::string format_double(double value);

} // namespace sl2optics
