#pragma once

#include <string_view>

namespace qhc {

inline constexpr std::string_view tool_name = "qhc";
inline constexpr std::string_view tool_version = "0.1.0";

}
