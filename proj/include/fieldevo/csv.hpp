#pragma once

#include <cstdio>
#include <string>
#include <string_view>

namespace fieldevo::csv {

/// RFC 4180 quoting, applied only when the value needs it.
inline std::string escape(std::string_view value) {
  if (value.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(value);
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

/// 12 significant digits, shortest form.
inline std::string number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value == 0.0 ? 0.0 : value);
  return buf;
}

inline std::string fixed2(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

}  // namespace fieldevo::csv
