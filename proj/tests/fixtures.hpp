#pragma once

#include "kbracket/chords.hpp"

namespace fixtures {

using kbracket::ChordDiagram;
using kbracket::Twist;

// Two circles joined by three reversing chords.
inline ChordDiagram trefoil_chords() {
  return {{{0, 2, 4}, {1, 3, 5}}, {{0, 1, Twist::Reversing}, {2, 3, Twist::Reversing}, {4, 5, Twist::Reversing}}};
}

inline kbracket::Diagram trefoil() { return kbracket::to_diagram(trefoil_chords()); }

// One crossing whose A-smoothing splits off a small circle.
inline kbracket::Diagram kink() {
  return kbracket::to_diagram(ChordDiagram{{{0}, {1}}, {{0, 1, Twist::Coherent}}});
}

inline kbracket::Diagram unknot() { return kbracket::Diagram({}, {}, 1); }

}  // namespace fixtures
