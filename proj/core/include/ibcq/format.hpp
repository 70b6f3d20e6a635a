#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace ibcq {

// Locale-independent "%.17g": enough digits to round-trip any double.
inline std::string format_real(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc{}) {
    return "nan";
  }
  return std::string(buf, end);
}

}  // namespace ibcq
