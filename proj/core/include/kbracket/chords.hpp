#pragma once

#include "kbracket/diagram.hpp"
#include "kbracket/graphs.hpp"

#include <random>
#include <string>
#include <vector>

namespace kbracket {

/// How the B smoothing reconnects a chord's two endpoints, relative to the
/// circle traversal directions: coherent gives (out_p, in_q), (out_q, in_p);
/// reversing gives (in_p, in_q), (out_p, out_q).
enum class Twist { Coherent, Reversing };

struct Chord {
  int p = 0;
  int q = 0;
  Twist twist = Twist::Coherent;
  friend bool operator==(const Chord&, const Chord&) = default;
};

/// Disjoint oriented circles, each a cyclic sequence of endpoint ids, and
/// chords pairing the endpoints.
struct ChordDiagram {
  std::vector<std::vector<int>> circles;
  std::vector<Chord> chords;

  int chord_count() const { return static_cast<int>(chords.size()); }
  /// Throws std::invalid_argument if an endpoint is missing, repeated, or not
  /// covered by exactly one chord.
  void validate() const;
  /// Circle index of every endpoint id, indexed by id.
  std::vector<int> circle_of_endpoint() const;
  bool same_circle(int chord) const;
  friend bool operator==(const ChordDiagram&, const ChordDiagram&) = default;
};

/// s_A D with one chord per crossing (chord i <-> crossing i, endpoint 2i is
/// the pass through the A-pair containing slot 0, 2i+1 the other pass).
ChordDiagram a_state_chords(const Diagram& d);

/// Reverses the smoothings: chord i becomes crossing i with the pass through
/// p on slots 0 -> 1 and through q on slots 2 -> 3. Empty circles become free
/// circles.
Diagram to_diagram(const ChordDiagram& cd);

/// Circle count after B-smoothing every chord in `subset`, by surgery on the
/// circle words.
int resmooth_count(const ChordDiagram& cd, const std::vector<int>& subset);

/// Vertices: coherent chords with both ends on one circle (chord order);
/// edges: endpoints alternate along the circle.
Graph lando_graph(const ChordDiagram& cd, std::vector<int>* chord_of_vertex = nullptr);

/// Vertices: all chords. Same-circle chords are adjacent when their endpoints
/// alternate; chords joining two circles are never adjacent.
Graph interlacement_graph(const ChordDiagram& cd);

/// Relabelling-, rotation- and circle-order-invariant code. Reversing a
/// circle toggles the twist of chords leaving it, so that is an invariance as
/// well.
std::vector<int> canonical_form(const ChordDiagram& cd);
bool isomorphic(const ChordDiagram& a, const ChordDiagram& b);

/// True when both chords lie on one circle and their endpoints alternate.
bool chords_interleave(const ChordDiagram& cd, int chord1, int chord2);

/// Uniform-ish random chord diagram: `chords` chords with independently
/// placed endpoints on up to `max_circles` circles and random twists.
ChordDiagram random_chord_diagram(std::mt19937_64& rng, int chords, int max_circles);

/// Random chord diagram whose diagram is planar, grown one chord at a time
/// and rejecting chords that break planarity.
ChordDiagram random_planar_chord_diagram(std::mt19937_64& rng, int chords, int max_circles);

}  // namespace kbracket
