#include "ontosim/numfmt.hpp"

#include <cmath>

#include <fmt/format.h>

namespace ontosim {

double round_to(double value, int precision) {
    if (!std::isfinite(value)) return value;
    const double scale = std::pow(10.0, precision);
    return std::round(value * scale) / scale;
}

std::string format_fixed(double value, int precision) {
    if (std::isinf(value)) return value > 0 ? "∞" : "-∞";
    double r = round_to(value, precision);
    if (r == 0.0) r = 0.0;  // drop the sign of -0
    return fmt::format("{:.{}f}", r, precision);
}

}  // namespace ontosim
