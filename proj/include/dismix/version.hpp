#pragma once

namespace dismix {

inline constexpr const char* kProjectName = "dismix";
inline constexpr const char* kVersion = "0.1.0";

} // namespace dismix
