#pragma once

namespace lpt {
inline constexpr const char* kVersion = "0.1.0";
}
