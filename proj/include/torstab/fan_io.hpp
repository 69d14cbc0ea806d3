#pragma once

#include <string>

#include "torstab/fan.hpp"

namespace torstab {

// Fan files are JSON: {"rank": 2, "rays": [[x, y], ...], "cones": [...]?}.
// A "cones" entry is legal but redundant at rank 2 (cyclic adjacency) and is
// ignored on input; output always omits it. Coordinates must fit in 64 bits.

Fan2D parse_fan2d(const std::string& json_text);
std::string emit_fan2d(const Fan2D& fan);

Fan2D load_fan2d(const std::string& path);
void save_fan2d(const Fan2D& fan, const std::string& path);

} // namespace torstab
