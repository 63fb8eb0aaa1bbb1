#ifndef CUTCX_STRINGS_HPP
#define CUTCX_STRINGS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cutcx {

/// True when a is a (not necessarily proper) prefix of b.
inline bool prefix_of(std::string_view a, std::string_view b) {
  return a.size() <= b.size() && b.substr(0, a.size()) == a;
}

/// Two cylinders meet iff their addresses are comparable in the prefix order.
inline bool comparable(std::string_view a, std::string_view b) {
  return prefix_of(a, b) || prefix_of(b, a);
}

inline void check_binary_string(std::string_view s) {
  for (char c : s) {
    if (c != '0' && c != '1')
      throw std::invalid_argument("binary string expected, got: " + std::string(s));
  }
}

}  // namespace cutcx

#endif
