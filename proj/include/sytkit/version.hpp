#pragma once

namespace sytkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace sytkit
