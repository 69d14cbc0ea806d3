#pragma once

#include <string>

#include "torstab/fan.hpp"

namespace torstab {

// Static SVG 1.1 diagram of a surface fan: integer lattice dots, one arrow
// per primitive ray generator, singular cones shaded. Output is a pure
// function of the fan, so repeated renders are byte identical.
std::string fan_svg(const Fan2D& fan);

} // namespace torstab
