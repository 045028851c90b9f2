#pragma once

namespace g2cc {

inline constexpr const char* kToolName = "g2cc";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace g2cc
