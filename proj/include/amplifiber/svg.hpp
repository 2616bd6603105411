#pragma once

#include <string>

#include "amplifiber/fans.hpp"

namespace amplifiber {

// Plain SVG sketch of a 2-dimensional fan: shaded chamber sectors with the
// rays drawn on top.  Presentation only, so floating point is fine here;
// all exact data stays in the JSON outputs.
std::string fan_svg(const ChamberFan& fan, int size = 480);

} // namespace amplifiber
