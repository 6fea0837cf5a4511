#pragma once

#include "bcr/diagram.hpp"
#include "bcr/exact.hpp"
#include "bcr/schemes.hpp"

namespace bcr {

bool is_chord_diagram(const JacobiDiagram& d);

// Requires a star-like marked presentation in which every crossing is marked and
// the number of non-based disks equals the number of crossings.
// Vertices: per non-based disk D_j (in disk order) the crossing labels U_j1..U_jm (from the based end)
// followed by D_j. Eta path U_j1 -> ... -> U_jm -> D_j; theta D_i -> U_jp when band B_j's p-th crossing pierces D_i.
JacobiDiagram chord_diagram_of(const MarkedPresentation& gamma);

// w_k of the chord diagram for even k, 0 for odd k (k = number of marks).
Rational pairing_value(const MarkedPresentation& gamma);

}  // namespace bcr
