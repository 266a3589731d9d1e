#pragma once

#include <string_view>

namespace nerh {

inline constexpr std::string_view kToolName = "nerharm";
inline constexpr std::string_view kVersion = "0.1.0";

}  // namespace nerh
