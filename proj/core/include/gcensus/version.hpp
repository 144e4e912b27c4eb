#pragma once

namespace gcensus {

// Semantic version stamped into every emitted artifact.
inline constexpr const char* kVersion = "1.0.0";

}  // namespace gcensus
