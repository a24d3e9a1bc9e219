#pragma once

namespace wangsun {

inline constexpr const char* kVersion = "0.1.0";

inline const char* tool_version() { return "wangsun 0.1.0"; }

}  // namespace wangsun
