#pragma once

#include "kbracket/chords.hpp"
#include "kbracket/diagram.hpp"
#include "kbracket/graphs.hpp"

#include <vector>

namespace kbracket {

/// Pretzel diagram: one column of |e| stacked crossings per entry, columns
/// joined cyclically along the top and bottom. Positive entries take the
/// vertical smoothing as A, negative entries the horizontal one.
Diagram pretzel(const std::vector<int>& entries);

/// Diagram whose s_A state is a one-circle realization of g with every chord
/// coherent, so its Lando graph is g. Throws std::invalid_argument when the
/// bounded realization search fails.
Diagram diagram_from_graph(const Graph& g);

/// Circle whose chord endpoints follow `word` (each letter twice); chord i
/// joins the two occurrences of letter i, all chords coherent.
ChordDiagram chord_diagram_from_word(const std::vector<int>& word);

/// One-circle double-occurrence word whose interlacement graph is G_r
/// (letter 6k+j is vertex j of the k-th hexagon).
std::vector<int> hexagon_chain_word(int r);

/// Knot diagram with 12r crossings, |s_A| = 1, |s_B| = 6r + 3, A-side Lando
/// graph a duplication of G_r and empty B-side Lando graph.
Diagram d_family(int r);

/// Knot diagram: D_r and the mirror of D_s joined by a band and a two-crossing
/// clasp. 12(r + s) + 2 crossings, |s_A| = 6s + 3, |s_B| = 6r + 3, A-side
/// Lando graph a duplication of G_r, B-side a duplication of G_s; r, s >= 1.
Diagram d_rs(int r, int s);

/// d_rs with the band replaced by a twist of alpha crossings: |s_A| = 6s +
/// alpha + 2, |s_B| = 6r + 4; r, s >= 1, alpha odd and >= 3.
Diagram d_rs_alpha(int r, int s, int alpha);

/// Pretzel link P(2, -2 x (s-2), -alpha, 2 x (r-2), -2, beta) with two extra
/// unknotted components; r, s, alpha, beta >= 2.
Diagram l_family(int r, int s, int alpha, int beta);

/// Knot diagram: l_family plus r + s + 1 twist crossings that merge all its
/// components. |s_A| = 2r + s + alpha, |s_B| = r + 2s + beta + 1, a_M = a_m = 0,
/// a_{M-4} = (-1)^(s+alpha-1) s, a_{m+4} = (-1)^(r+beta) r; r, s, alpha, beta >= 2.
Diagram k_family(int r, int s, int alpha, int beta);

}  // namespace kbracket
