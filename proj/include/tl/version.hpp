#pragma once

namespace tl {

inline constexpr const char* kVersion = "0.1.0";
// Bumped when a stage's serialized artifact layout changes; part of every
// store key.
inline constexpr const char* kStoreFormatVersion = "v1";

} // namespace tl
