#include "depra/numfmt.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace depra {

std::string format_number(double value, int significant_digits) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto res = significant_digits <= 0
                       ? std::to_chars(buf.data(), buf.data() + buf.size(), value)
                       : std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::general, significant_digits);
  return std::string(buf.data(), res.ptr);
}

double round_significant(double value, int significant_digits) {
  if (significant_digits <= 0 || !std::isfinite(value)) return value;
  const std::string text = format_number(value, significant_digits);
  double out = value;
  std::from_chars(text.data(), text.data() + text.size(), out);
  return out;
}

}  // namespace depra
