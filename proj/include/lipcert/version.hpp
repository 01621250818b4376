#pragma once

namespace lipcert {

inline constexpr const char* kToolName = "lipcert";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

}  // namespace lipcert
