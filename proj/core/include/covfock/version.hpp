#pragma once

namespace covfock {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace covfock
