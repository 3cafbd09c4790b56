/**
 * @file version.hh
 * @brief Engine identification reported by the CLI.
 */
#pragma once

namespace supclose {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kEngine = "supclose 0.1.0";

}  // namespace supclose
