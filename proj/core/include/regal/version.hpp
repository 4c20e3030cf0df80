#pragma once

namespace regal {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace regal
