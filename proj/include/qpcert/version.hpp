#pragma once

namespace qpcert {

inline constexpr const char* kToolName = "qpcert";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace qpcert
