#pragma once

#include <string>

namespace depra {

inline constexpr int kDefaultSignificantDigits = 6;

/// Locale-independent text for a real: shortest round-trip form when
/// significant_digits <= 0, otherwise %g-style with that many digits.
/// Non-finite values print as "inf", "-inf" or "nan".
std::string format_number(double value, int significant_digits = kDefaultSignificantDigits);

/// value rounded to the given number of significant decimal digits
/// (unchanged when significant_digits <= 0 or value is not finite).
double round_significant(double value, int significant_digits);

}  // namespace depra
