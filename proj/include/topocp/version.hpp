#pragma once

#include <cstdint>

namespace topocp {

inline constexpr const char* kArtifactVersion = "0.1.0";
inline constexpr std::uint8_t kCacheFormatVersion = 1;
inline constexpr std::uint8_t kCheckpointFormatVersion = 1;

}  // namespace topocp
