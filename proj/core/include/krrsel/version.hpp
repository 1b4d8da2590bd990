#pragma once

namespace krrsel {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace krrsel
