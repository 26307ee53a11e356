#pragma once

namespace qrelax {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace qrelax
