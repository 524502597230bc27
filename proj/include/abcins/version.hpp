#pragma once

namespace abcins {
inline constexpr const char* kVersion = "0.1.0";
}
