#include "tempiso/duration.hpp"

#include <charconv>
#include <cmath>

namespace tempiso {

Duration parse_duration(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty duration");
  Duration scale = 1;
  std::string_view number = text;
  switch (text.back()) {
    case 's':
      number.remove_suffix(1);
      break;
    case 'd':
      scale = kSecondsPerDay;
      number.remove_suffix(1);
      break;
    case 'y':
      scale = kSecondsPerYear;
      number.remove_suffix(1);
      break;
    default:
      break;
  }
  std::int64_t whole = 0;
  auto [ptr, ec] = std::from_chars(number.data(), number.data() + number.size(), whole);
  if (ec == std::errc() && ptr == number.data() + number.size() && !number.empty()) {
    Duration out = 0;
    if (whole < 0 || __builtin_mul_overflow(whole, scale, &out)) {
      throw std::invalid_argument("duration out of range: '" + std::string(text) + "'");
    }
    return out;
  }
  double value = 0;
  auto [p2, ec2] = std::from_chars(number.data(), number.data() + number.size(), value);
  if (ec2 != std::errc() || p2 != number.data() + number.size() || number.empty() ||
      !std::isfinite(value) || value < 0 || value * static_cast<double>(scale) > 9.2e18) {
    throw std::invalid_argument("malformed duration '" + std::string(text) + "'");
  }
  return static_cast<Duration>(std::llround(value * static_cast<double>(scale)));
}

Threshold parse_threshold(std::string_view text) {
  if (text == "inf" || text == "infinite") return Threshold::infinite();
  return Threshold::finite(parse_duration(text));
}

std::string format_threshold(Threshold d) {
  if (d.is_infinite()) return "inf";
  const Duration v = d.value();
  if (v != 0 && v % kSecondsPerYear == 0) return std::to_string(v / kSecondsPerYear) + "y";
  if (v != 0 && v % kSecondsPerDay == 0) return std::to_string(v / kSecondsPerDay) + "d";
  return std::to_string(v) + "s";
}

}  // namespace tempiso
