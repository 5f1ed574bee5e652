#pragma once

namespace mpair {

inline constexpr const char* kEngineVersion = "0.1.0";

}  // namespace mpair
