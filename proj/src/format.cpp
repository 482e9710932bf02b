#include "sl2optics/format.hpp"

#include <cmath>
#include <cstdio>

namespace sl2optics {

std::string format_double(double value) {
    if (value == 0.0) return "0";  // covers -0.0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

} // namespace sl2optics
