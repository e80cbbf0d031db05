#pragma once

namespace ldcc {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace ldcc
