#pragma once

namespace pg {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace pg
