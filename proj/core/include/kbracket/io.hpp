#pragma once

#include "kbracket/chords.hpp"
#include "kbracket/diagram.hpp"
#include "kbracket/graphs.hpp"
#include "kbracket/laurent.hpp"

#include <stdexcept>
#include <string>

namespace kbracket {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"crossings": [{"a": [[e,e],[e,e]], "b": [[e,e],[e,e]]}, ...],
///  "arcs": [[e,e], ...], "free_circles": n} with e = [crossing, slot].
std::string diagram_to_json(const Diagram& d);
Diagram diagram_from_json(const std::string& text);

/// {"circles": [[ids...], ...], "chords": [{"ends": [p,q], "twist": "coherent"}, ...]}
std::string chord_diagram_to_json(const ChordDiagram& cd);
ChordDiagram chord_diagram_from_json(const std::string& text);

/// {"vertices": n, "edges": [[u,v], ...]}
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

/// [[degree, coefficient], ...] in ascending degree. Coefficients outside the
/// int64 range are written as decimal strings.
std::string laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const std::string& text);

}  // namespace kbracket
