#pragma once

namespace latdisc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace latdisc
