#pragma once

namespace lagrel {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace lagrel
