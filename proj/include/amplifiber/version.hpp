#pragma once

namespace amplifiber {

inline constexpr const char* kVersion = "0.1.0";

} // namespace amplifiber
