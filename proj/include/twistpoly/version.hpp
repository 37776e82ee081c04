#pragma once

#include <string_view>

namespace twistpoly {

inline constexpr std::string_view tool_name = "twistpoly";
inline constexpr std::string_view tool_version = "1.0.0";

}  // namespace twistpoly
