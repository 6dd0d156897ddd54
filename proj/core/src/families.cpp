#include "kbracket/families.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace kbracket {

namespace {

// Slots of pretzel crossings.
constexpr int kNW = 0, kNE = 1, kSE = 2, kSW = 3;

constexpr Crossing kVerticalA{Pairing::P03_12, Pairing::P01_23};
constexpr Crossing kHorizontalA{Pairing::P01_23, Pairing::P03_12};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<int> column_starts(const std::vector<int>& entries) {
  std::vector<int> first(entries.size() + 1, 0);
  for (std::size_t i = 0; i < entries.size(); ++i) first[i + 1] = first[i] + std::abs(entries[i]);
  return first;
}

// Strand ends where a curve around the pretzel columns j1..j2 (in order)
// crosses the diagram: the two top arcs and the two bottom arcs.
std::array<int, 4> block_ends(const std::vector<int>& first, int j1, int j2) {
  return {Diagram::end_id(first[j1], kNW), Diagram::end_id(first[j2], kNE),
          Diagram::end_id(first[j2 + 1] - 1, kSE), Diagram::end_id(first[j1 + 1] - 1, kSW)};
}

// Adds a closed curve meeting the arcs at `ends` in order, one new crossing
// per arc. At each new crossing slot 0 takes the arc end, slot 2 its old
// partner, and the curve runs 1 -> 3, or 3 -> 1 where `reversed`.
Diagram encircle(const Diagram& d, const std::array<int, 4>& ends, const std::array<bool, 4>& reversed) {
  std::vector<Crossing> crossings = d.crossings();
  std::vector<int> arcs = d.arcs();
  const int k = d.crossing_count();
  arcs.resize(4 * (k + 4), -1);
  auto link = [&](int a, int b) {
    arcs[a] = b;
    arcs[b] = a;
  };
  std::array<int, 4> in{}, out{};
  for (int i = 0; i < 4; ++i) {
    const int c = k + i;
    crossings.push_back(kVerticalA);
    const int partner = d.arc_partner(ends[i]);
    link(Diagram::end_id(c, 0), ends[i]);
    link(Diagram::end_id(c, 2), partner);
    in[i] = Diagram::end_id(c, reversed[i] ? 3 : 1);
    out[i] = Diagram::end_id(c, reversed[i] ? 1 : 3);
  }
  for (int i = 0; i < 4; ++i) link(out[i], in[(i + 1) % 4]);
  return Diagram(std::move(crossings), std::move(arcs), d.free_circles());
}

}  // namespace

Diagram pretzel(const std::vector<int>& entries) {
  require(!entries.empty(), "pretzel needs at least one column");
  const int k = static_cast<int>(entries.size());
  for (int e : entries) require(e != 0, "pretzel entries must be nonzero");
  const std::vector<int> first = column_starts(entries);
  const int n = first[k];
  std::vector<Crossing> crossings(n);
  std::vector<int> arcs(4 * n, -1);
  auto link = [&](int c1, int s1, int c2, int s2) {
    arcs[Diagram::end_id(c1, s1)] = Diagram::end_id(c2, s2);
    arcs[Diagram::end_id(c2, s2)] = Diagram::end_id(c1, s1);
  };
  for (int i = 0; i < k; ++i) {
    const int len = std::abs(entries[i]);
    for (int j = 0; j < len; ++j) {
      const int c = first[i] + j;
      crossings[c] = entries[i] > 0 ? kVerticalA : kHorizontalA;
      if (j + 1 < len) {
        link(c, kSW, c + 1, kNW);
        link(c, kSE, c + 1, kNE);
      }
    }
    const int next = (i + 1) % k;
    link(first[i], kNE, first[next], kNW);
    link(first[i + 1] - 1, kSE, first[next + 1] - 1, kSW);
  }
  return Diagram(std::move(crossings), std::move(arcs), 0);
}

ChordDiagram chord_diagram_from_word(const std::vector<int>& word) {
  require(word.size() % 2 == 0, "a chord word has even length");
  const int n = static_cast<int>(word.size() / 2);
  ChordDiagram cd;
  cd.circles.emplace_back();
  std::vector<int> seen(n, 0);
  for (int v : word) {
    require(v >= 0 && v < n && seen[v] < 2, "every letter must occur exactly twice");
    cd.circles[0].push_back(2 * v + seen[v]++);
  }
  for (int i = 0; i < n; ++i) cd.chords.push_back({2 * i, 2 * i + 1, Twist::Coherent});
  cd.validate();
  return cd;
}

Diagram diagram_from_graph(const Graph& g) {
  auto cd = realize_as_chord_diagram(g);
  if (!cd) throw std::invalid_argument("no one-circle chord realization found for the graph");
  return to_diagram(*cd);
}

namespace {

// Hexagon word; its interlacement graph is the 6-cycle 0-1-5-4-3-2-0.
const std::vector<int> kHexagonWord{0, 1, 2, 0, 3, 2, 4, 3, 5, 4, 1, 5};

// Splices a hexagon (letters shifted by `offset`, attached at its letter
// `offset`) next to the first occurrence of `root` so that the new letter
// interleaves only `root`: W = A root B root C becomes
// A Y w X root w B root C, where the hexagon reads Y w X w.
std::vector<int> splice_hexagon(const std::vector<int>& w, int root, int offset) {
  std::vector<int> hex = kHexagonWord;
  for (int& x : hex) x += offset;
  // Rotate so the attaching letter's second occurrence is last.
  std::rotate(hex.begin(), hex.begin() + 4, hex.end());
  const auto mid = std::find(hex.begin(), hex.end(), offset);
  const auto i = std::find(w.begin(), w.end(), root);
  const auto j = std::find(i + 1, w.end(), root);
  std::vector<int> out(w.begin(), i);
  out.insert(out.end(), hex.begin(), mid);
  out.push_back(offset);
  out.insert(out.end(), mid + 1, hex.end() - 1);
  out.push_back(root);
  out.push_back(offset);
  out.insert(out.end(), i + 1, j);
  out.insert(out.end(), j, w.end());
  return out;
}

// Replaces every chord by two parallel ones: letter v becomes 2v, 2v+1 read
// as (2v, 2v+1) at its first occurrence and (2v+1, 2v) at its second.
std::vector<int> parallel_double(const std::vector<int>& w) {
  std::vector<int> seen(w.size() / 2, 0), out;
  for (int v : w) {
    if (seen[v]++ == 0) {
      out.push_back(2 * v);
      out.push_back(2 * v + 1);
    } else {
      out.push_back(2 * v + 1);
      out.push_back(2 * v);
    }
  }
  return out;
}

}  // namespace

std::vector<int> hexagon_chain_word(int r) {
  require(r >= 1, "hexagon_chain_word needs r >= 1");
  std::vector<int> w = kHexagonWord;
  int root = 0;
  for (int k = 1; k < r; ++k) {
    w = splice_hexagon(w, root, 6 * k);
    root = 6 * k + 1;
  }
  return w;
}

// The one-circle realization of G_r is a 3-component diagram D_r' with
// |s_B| = 3. Doubling every chord keeps |s_A| = 1, turns the Lando graph into
// a duplication of G_r, adds one small B-circle per chord pair and leaves no
// same-circle chord in s_B.
Diagram d_family(int r) {
  require(r >= 1, "d_family needs r >= 1");
  return to_diagram(chord_diagram_from_word(parallel_double(hexagon_chain_word(r))));
}

namespace {

Diagram disjoint_union(const Diagram& p, const Diagram& q) {
  std::vector<Crossing> crossings = p.crossings();
  crossings.insert(crossings.end(), q.crossings().begin(), q.crossings().end());
  std::vector<int> arcs = p.arcs();
  const int offset = 4 * p.crossing_count();
  for (int e : q.arcs()) arcs.push_back(e + offset);
  return Diagram(std::move(crossings), std::move(arcs), p.free_circles() + q.free_circles());
}

// New crossing on the arcs at e and f without reconnecting them: slots
// 0, 1, 2, 3 take e, partner(f), partner(e), f. Returns the new crossing index.
int cross_arcs(Diagram& d, int e, int f) {
  std::vector<Crossing> crossings = d.crossings();
  std::vector<int> arcs = d.arcs();
  const int c = d.crossing_count();
  crossings.push_back(kVerticalA);
  const std::array<int, 4> slots{e, arcs[f], arcs[e], f};
  arcs.resize(4 * (c + 1));
  for (int j = 0; j < 4; ++j) {
    arcs[Diagram::end_id(c, j)] = slots[j];
    arcs[slots[j]] = Diagram::end_id(c, j);
  }
  d = Diagram(std::move(crossings), std::move(arcs), d.free_circles());
  return c;
}

// Reconnects the arcs at e and f: e joins f, partner(e) joins partner(f).
Diagram band(const Diagram& d, int e, int f) {
  std::vector<int> arcs = d.arcs();
  const int e2 = arcs[e], f2 = arcs[f];
  arcs[e] = f;
  arcs[f] = e;
  arcs[e2] = f2;
  arcs[f2] = e2;
  return Diagram(d.crossings(), std::move(arcs), d.free_circles());
}

// Column of n crossings between the arcs at e and f. The A smoothing joins
// e to f and partner(e) to partner(f) and leaves n - 1 bigons; the B
// smoothing restores both arcs.
Diagram twist(const Diagram& d, int e, int f, int n) {
  std::vector<Crossing> crossings = d.crossings();
  std::vector<int> arcs = d.arcs();
  const int k = d.crossing_count();
  const int e2 = arcs[e], f2 = arcs[f];
  crossings.insert(crossings.end(), n, kHorizontalA);
  arcs.resize(4 * (k + n));
  auto link = [&](int a, int b) {
    arcs[a] = b;
    arcs[b] = a;
  };
  for (int j = 0; j + 1 < n; ++j) {
    link(Diagram::end_id(k + j, kSW), Diagram::end_id(k + j + 1, kNW));
    link(Diagram::end_id(k + j, kSE), Diagram::end_id(k + j + 1, kNE));
  }
  link(Diagram::end_id(k, kNW), e);
  link(Diagram::end_id(k, kNE), f);
  link(Diagram::end_id(k + n - 1, kSW), e2);
  link(Diagram::end_id(k + n - 1, kSE), f2);
  return Diagram(std::move(crossings), std::move(arcs), d.free_circles());
}

// Clasp of two crossings between arc end 1 of D_r and arc end 25 of the
// mirrored D_s. Both arcs lie on a face shared with the join at ends 0 and 2,
// and the two ends sit on different A-circles and different B-circles, so
// the clasp adds no circle to either extreme state and its chords join
// distinct circles.
Diagram clasp(Diagram d, int offset) {
  const int c = cross_arcs(d, 1, offset + 25);
  cross_arcs(d, Diagram::end_id(c, 0), Diagram::end_id(c, 3));
  return d;
}

}  // namespace

// D_r and the mirror of D_s are joined by a band between end 0 of D_r and
// end 2 of the mirror, which merges the two sides in both extreme states,
// giving |s_A| = 6s + 3 and |s_B| = 6r + 3. The clasp makes the diagram a
// knot with the A-Lando graph a duplication of G_r and the B-Lando graph a
// duplication of G_s.
Diagram d_rs(int r, int s) {
  require(r >= 1 && s >= 1, "d_rs needs r, s >= 1");
  const Diagram left = d_family(r);
  const int offset = 4 * left.crossing_count();
  return clasp(band(disjoint_union(left, mirror(d_family(s))), 0, offset + 2), offset);
}

// As d_rs with the band replaced by a column of alpha crossings: s_A sees
// the band plus alpha - 1 bigons, s_B keeps the sides apart.
Diagram d_rs_alpha(int r, int s, int alpha) {
  require(r >= 1 && s >= 1, "d_rs_alpha needs r, s >= 1");
  require(alpha >= 3 && alpha % 2 == 1, "d_rs_alpha needs odd alpha >= 3");
  const Diagram left = d_family(r);
  const int offset = 4 * left.crossing_count();
  return clasp(twist(disjoint_union(left, mirror(d_family(s))), 0, offset + 2, alpha), offset);
}

// Columns 0..s-2 (the 2 and the -2s) form the P(2, -2, ..., -2) side and
// columns s..r+s-2 (the 2s and the last -2) the P(2, ..., 2, -2, 2) side.
// One extra unknot encircles each side; in s_A and s_B each curve leaves
// exactly one chord with both ends on one circle, the pair parallel.
namespace {

std::vector<int> l_entries(int r, int s, int alpha, int beta) {
  require(r >= 2 && s >= 2, "l_family needs r, s >= 2");
  require(alpha >= 2 && beta >= 2, "l_family needs alpha, beta >= 2");
  std::vector<int> entries{2};
  entries.insert(entries.end(), s - 2, -2);
  entries.push_back(-alpha);
  entries.insert(entries.end(), r - 2, 2);
  entries.push_back(-2);
  entries.push_back(beta);
  return entries;
}

// Adds a crossing forming a bigon with crossing c at a corner that the A
// smoothing of c follows (a_side) or the B smoothing follows. The bigon is a
// new circle of s_A or s_B respectively; the other state is unchanged. The
// two strands at c are reconnected.
Diagram twist_extend(const Diagram& d, int c, bool a_side) {
  int i = 0;
  while ((pair_partner(d.crossing(c).a, i) == (i + 1) % 4) != a_side) ++i;
  const int e = Diagram::end_id(c, i), f = Diagram::end_id(c, (i + 1) % 4);
  std::vector<Crossing> crossings = d.crossings();
  std::vector<int> arcs = d.arcs();
  const int k = d.crossing_count();
  crossings.push_back(a_side ? kHorizontalA : kVerticalA);
  const std::array<int, 4> slots{f, e, arcs[e], arcs[f]};
  arcs.resize(4 * (k + 1));
  for (int j = 0; j < 4; ++j) {
    arcs[Diagram::end_id(k, j)] = slots[j];
    arcs[slots[j]] = Diagram::end_id(k, j);
  }
  return Diagram(std::move(crossings), std::move(arcs), d.free_circles());
}

}  // namespace

Diagram l_family(int r, int s, int alpha, int beta) {
  const std::vector<int> entries = l_entries(r, s, alpha, beta);
  const std::vector<int> first = column_starts(entries);
  Diagram d = pretzel(entries);
  d = encircle(d, block_ends(first, 0, s - 2), {false, true, false, true});
  return encircle(d, block_ends(first, s, r + s - 2), {true, false, true, false});
}

// Every added crossing is a twist extension that merges two components.
// The columns of the right block and one crossing of its circle gain an
// A-bigon each (r crossings, |s_A| + 1 each); the columns of the left block
// and one crossing of its circle gain a B-bigon each (s crossings, |s_B| + 1
// each). The two blocks are then joined by a B-bigon at the alpha column.
// Each extension flips the sign of the second coefficient on its side and
// keeps its magnitude, and the extreme Lando graphs stay two parallel chords.
Diagram k_family(int r, int s, int alpha, int beta) {
  const std::vector<int> first = column_starts(l_entries(r, s, alpha, beta));
  const int circle1 = first.back(), circle2 = circle1 + 4;
  Diagram d = l_family(r, s, alpha, beta);
  for (int j = s; j <= r + s - 2; ++j) d = twist_extend(d, first[j], true);
  d = twist_extend(d, circle2, true);
  for (int j = 0; j <= s - 2; ++j) d = twist_extend(d, first[j], false);
  d = twist_extend(d, circle1, false);
  return twist_extend(d, first[s - 1], false);
}

}  // namespace kbracket
