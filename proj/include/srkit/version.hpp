#pragma once

namespace srkit {

inline constexpr const char* kArtifactVersion = "0.1.0";

}  // namespace srkit
