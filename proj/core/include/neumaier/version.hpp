#pragma once

namespace neumaier {

inline constexpr const char* kVersion = "0.1.0";

} // namespace neumaier
