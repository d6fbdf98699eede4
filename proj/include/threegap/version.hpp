#pragma once

namespace threegap {

inline constexpr const char* kToolName = "threegap";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace threegap
