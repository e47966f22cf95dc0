#pragma once

namespace heisvc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace heisvc
