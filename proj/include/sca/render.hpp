#pragma once

#include <string>

#include "sca/step.hpp"

namespace sca {

// One text row per generation, two characters per cell at its absolute
// offset: '|' straight, '\' right turn, '/' left turn, 'X' / '%' for the
// Z / S crossing (left character of the cell), space elsewhere. Trailing
// blanks are trimmed; the empty pattern renders as the empty document.
std::string render_ascii(const Pattern& p);

// One band per generation; every strand becomes a line segment from its
// position at the top of the band to its landing position at the bottom.
// At a crossing the strand passing under is split around the midpoint.
std::string render_svg(const Pattern& p);

}  // namespace sca
