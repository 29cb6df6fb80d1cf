#pragma once

namespace gonality {

inline constexpr const char* tool_version = "1.0.0";
/// Bumped whenever a JSON field is renamed, removed or changes meaning.
inline constexpr int schema_version = 1;

} // namespace gonality
