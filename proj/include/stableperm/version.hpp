#ifndef STABLEPERM_VERSION_HPP
#define STABLEPERM_VERSION_HPP

#include <string_view>

namespace stableperm {

inline constexpr std::string_view version = "0.1.0";

}  // namespace stableperm

#endif  // STABLEPERM_VERSION_HPP
