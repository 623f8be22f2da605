#ifndef ONTOSIM_NUMFMT_HPP
#define ONTOSIM_NUMFMT_HPP

#include <string>

namespace ontosim {

/// Rounds half away from zero to `precision` decimals.
double round_to(double value, int precision);

/// Fixed-point text of round_to(value, precision), dot decimal, no "-0".
/// Infinity prints as "∞".
std::string format_fixed(double value, int precision);

}  // namespace ontosim

#endif  // ONTOSIM_NUMFMT_HPP
