#include "kbracket/chords.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace kbracket {

void ChordDiagram::validate() const {
  const int ends = 2 * chord_count();
  std::vector<int> on_circle(ends, 0), on_chord(ends, 0);
  for (const auto& c : circles)
    for (int e : c) {
      if (e < 0 || e >= ends) throw std::invalid_argument("chord diagram: endpoint id out of range");
      if (on_circle[e]++) throw std::invalid_argument("chord diagram: endpoint repeated on circles");
    }
  for (const auto& ch : chords) {
    if (ch.p < 0 || ch.p >= ends || ch.q < 0 || ch.q >= ends || ch.p == ch.q)
      throw std::invalid_argument("chord diagram: bad chord endpoints");
    ++on_chord[ch.p];
    ++on_chord[ch.q];
  }
  for (int e = 0; e < ends; ++e) {
    if (on_circle[e] != 1) throw std::invalid_argument("chord diagram: endpoint missing from circles");
    if (on_chord[e] != 1) throw std::invalid_argument("chord diagram: endpoint not on exactly one chord");
  }
}

std::vector<int> ChordDiagram::circle_of_endpoint() const {
  std::vector<int> out(2 * chords.size(), -1);
  for (std::size_t c = 0; c < circles.size(); ++c)
    for (int e : circles[c]) out.at(e) = static_cast<int>(c);
  return out;
}

bool ChordDiagram::same_circle(int chord) const {
  const auto where = circle_of_endpoint();
  return where[chords[chord].p] == where[chords[chord].q];
}

ChordDiagram a_state_chords(const Diagram& d) {
  const int n = d.crossing_count();
  ChordDiagram cd;
  cd.chords.resize(n);
  // Slot of entry and exit for every endpoint, as traversed.
  std::vector<int> in_slot(2 * n, -1), out_slot(2 * n, -1);
  std::vector<bool> visited(4 * n, false);
  for (int start = 0; start < 4 * n; ++start) {
    if (visited[start]) continue;
    std::vector<int> circle;
    int end = start;
    while (!visited[end]) {
      const auto [x, slot] = Diagram::end_of(end);
      const Pairing a = d.crossing(x).a;
      const int exit = pair_partner(a, slot);
      visited[end] = true;
      visited[Diagram::end_id(x, exit)] = true;
      const bool first_pass = slot == 0 || exit == 0;
      const int endpoint = 2 * x + (first_pass ? 0 : 1);
      in_slot[endpoint] = slot;
      out_slot[endpoint] = exit;
      circle.push_back(endpoint);
      end = d.arc_partner(Diagram::end_id(x, exit));
    }
    cd.circles.push_back(std::move(circle));
  }
  for (int i = 0; i < d.crossing_count(); ++i) {
    const int p = 2 * i, q = 2 * i + 1;
    const bool coherent = pair_partner(d.crossing(i).b, out_slot[p]) == in_slot[q];
    cd.chords[i] = {p, q, coherent ? Twist::Coherent : Twist::Reversing};
  }
  for (int k = 0; k < d.free_circles(); ++k) cd.circles.emplace_back();
  return cd;
}

namespace {

// In and out end ids of `endpoint` within to_diagram's crossing layout.
std::pair<int, int> in_out_ends(const ChordDiagram& cd, std::vector<int>& chord_of, int endpoint) {
  const int i = chord_of[endpoint];
  const bool is_p = cd.chords[i].p == endpoint;
  return {4 * i + (is_p ? 0 : 2), 4 * i + (is_p ? 1 : 3)};
}

std::vector<int> chord_of_endpoint(const ChordDiagram& cd) {
  std::vector<int> out(2 * cd.chords.size(), -1);
  for (std::size_t i = 0; i < cd.chords.size(); ++i) {
    out[cd.chords[i].p] = static_cast<int>(i);
    out[cd.chords[i].q] = static_cast<int>(i);
  }
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

Diagram to_diagram(const ChordDiagram& cd) {
  cd.validate();
  const int n = cd.chord_count();
  auto chord_of = chord_of_endpoint(cd);
  std::vector<Crossing> crossings(n);
  for (int i = 0; i < n; ++i)
    crossings[i] = {Pairing::P01_23,
                    cd.chords[i].twist == Twist::Coherent ? Pairing::P03_12 : Pairing::P02_13};
  std::vector<int> arcs(4 * n, -1);
  int free = 0;
  for (const auto& circle : cd.circles) {
    if (circle.empty()) {
      ++free;
      continue;
    }
    for (std::size_t k = 0; k < circle.size(); ++k) {
      const int out = in_out_ends(cd, chord_of, circle[k]).second;
      const int in = in_out_ends(cd, chord_of, circle[(k + 1) % circle.size()]).first;
      arcs[out] = in;
      arcs[in] = out;
    }
  }
  return Diagram(std::move(crossings), std::move(arcs), free);
}

int resmooth_count(const ChordDiagram& cd, const std::vector<int>& subset) {
  const int n = cd.chord_count();
  std::vector<bool> flipped(n, false);
  for (int i : subset) flipped.at(i) = true;
  // Node 2e is the incoming side of endpoint e, node 2e+1 the outgoing side.
  UnionFind uf(4 * n);
  int empty = 0;
  for (const auto& circle : cd.circles) {
    if (circle.empty()) ++empty;
    for (std::size_t k = 0; k < circle.size(); ++k)
      uf.unite(2 * circle[k] + 1, 2 * circle[(k + 1) % circle.size()]);
  }
  for (int i = 0; i < n; ++i) {
    const int p = cd.chords[i].p, q = cd.chords[i].q;
    if (!flipped[i]) {
      uf.unite(2 * p, 2 * p + 1);
      uf.unite(2 * q, 2 * q + 1);
    } else if (cd.chords[i].twist == Twist::Coherent) {
      uf.unite(2 * p + 1, 2 * q);
      uf.unite(2 * q + 1, 2 * p);
    } else {
      uf.unite(2 * p, 2 * q);
      uf.unite(2 * p + 1, 2 * q + 1);
    }
  }
  int roots = 0;
  for (int x = 0; x < 4 * n; ++x)
    if (uf.find(x) == x) ++roots;
  return roots + empty;
}

bool chords_interleave(const ChordDiagram& cd, int chord1, int chord2) {
  const auto where = cd.circle_of_endpoint();
  const Chord& c1 = cd.chords[chord1];
  const Chord& c2 = cd.chords[chord2];
  const int circle = where[c1.p];
  if (where[c1.q] != circle || where[c2.p] != circle || where[c2.q] != circle) return false;
  std::vector<int> pos(where.size(), -1);
  const auto& word = cd.circles[circle];
  for (std::size_t k = 0; k < word.size(); ++k) pos[word[k]] = static_cast<int>(k);
  const int lo = std::min(pos[c1.p], pos[c1.q]);
  const int hi = std::max(pos[c1.p], pos[c1.q]);
  const bool in_p = pos[c2.p] > lo && pos[c2.p] < hi;
  const bool in_q = pos[c2.q] > lo && pos[c2.q] < hi;
  return in_p != in_q;
}

namespace {

Graph interleave_graph(const ChordDiagram& cd, const std::vector<int>& chords) {
  const auto where = cd.circle_of_endpoint();
  std::vector<int> pos(where.size(), -1);
  for (const auto& word : cd.circles)
    for (std::size_t k = 0; k < word.size(); ++k) pos[word[k]] = static_cast<int>(k);
  Graph g(static_cast<int>(chords.size()));
  for (std::size_t i = 0; i < chords.size(); ++i) {
    const Chord& c1 = cd.chords[chords[i]];
    if (where[c1.p] != where[c1.q]) continue;
    const int lo = std::min(pos[c1.p], pos[c1.q]);
    const int hi = std::max(pos[c1.p], pos[c1.q]);
    for (std::size_t j = i + 1; j < chords.size(); ++j) {
      const Chord& c2 = cd.chords[chords[j]];
      if (where[c2.p] != where[c1.p] || where[c2.q] != where[c1.p]) continue;
      const bool in_p = pos[c2.p] > lo && pos[c2.p] < hi;
      const bool in_q = pos[c2.q] > lo && pos[c2.q] < hi;
      if (in_p != in_q) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return g;
}

}  // namespace

Graph lando_graph(const ChordDiagram& cd, std::vector<int>* chord_of_vertex) {
  const auto where = cd.circle_of_endpoint();
  std::vector<int> chords;
  for (int i = 0; i < cd.chord_count(); ++i) {
    const Chord& c = cd.chords[i];
    if (c.twist == Twist::Coherent && where[c.p] == where[c.q]) chords.push_back(i);
  }
  if (chord_of_vertex) *chord_of_vertex = chords;
  return interleave_graph(cd, chords);
}

Graph interlacement_graph(const ChordDiagram& cd) {
  std::vector<int> chords(cd.chord_count());
  std::iota(chords.begin(), chords.end(), 0);
  return interleave_graph(cd, chords);
}

namespace {

// Code of the component reached from (circle, position, direction); circles
// found later are oriented so that their discovering chord reads coherent.
std::vector<int> component_code(const ChordDiagram& cd, const std::vector<int>& where,
                                const std::vector<int>& chord_of, const std::vector<int>& pos,
                                int circle0, int start0, int dir0) {
  const int n = cd.chord_count();
  std::vector<int> label(n, -1), orient(cd.circles.size(), 0);
  std::vector<int> code;
  struct Visit {
    int circle, start, dir;
  };
  std::deque<Visit> queue{{circle0, start0, dir0}};
  orient[circle0] = dir0;
  int next_label = 0;
  std::vector<int> label_chord;
  while (!queue.empty()) {
    const auto [c, start, dir] = queue.front();
    queue.pop_front();
    const auto& word = cd.circles[c];
    const int len = static_cast<int>(word.size());
    code.push_back(len);
    for (int k = 0; k < len; ++k) {
      const int e = word[((start + dir * k) % len + len) % len];
      const int ch = chord_of[e];
      if (label[ch] < 0) {
        label[ch] = next_label++;
        label_chord.push_back(ch);
      }
      code.push_back(label[ch]);
      const int other = cd.chords[ch].p == e ? cd.chords[ch].q : cd.chords[ch].p;
      const int oc = where[other];
      if (orient[oc] == 0) {
        orient[oc] = cd.chords[ch].twist == Twist::Coherent ? dir : -dir;
        queue.push_back({oc, pos[other], orient[oc]});
      }
    }
  }
  for (int ch : label_chord) {
    const Chord& c = cd.chords[ch];
    bool coherent = c.twist == Twist::Coherent;
    if (where[c.p] != where[c.q] && orient[where[c.p]] != orient[where[c.q]]) coherent = !coherent;
    code.push_back(coherent ? 0 : 1);
  }
  return code;
}

}  // namespace

std::vector<int> canonical_form(const ChordDiagram& cd) {
  cd.validate();
  const auto where = cd.circle_of_endpoint();
  const auto chord_of = chord_of_endpoint(cd);
  std::vector<int> pos(where.size(), -1);
  for (const auto& word : cd.circles)
    for (std::size_t k = 0; k < word.size(); ++k) pos[word[k]] = static_cast<int>(k);

  // Components: circles joined by chords.
  UnionFind uf(static_cast<int>(cd.circles.size()));
  for (const auto& c : cd.chords) uf.unite(where[c.p], where[c.q]);

  int empty = 0;
  std::vector<std::vector<int>> codes;
  std::vector<bool> done(cd.circles.size(), false);
  for (std::size_t c = 0; c < cd.circles.size(); ++c) {
    if (cd.circles[c].empty()) {
      ++empty;
      continue;
    }
    const int root = uf.find(static_cast<int>(c));
    if (done[root]) continue;
    done[root] = true;
    std::vector<int> best;
    for (std::size_t c2 = 0; c2 < cd.circles.size(); ++c2) {
      if (uf.find(static_cast<int>(c2)) != root) continue;
      for (std::size_t s = 0; s < cd.circles[c2].size(); ++s)
        for (int dir : {1, -1}) {
          auto code = component_code(cd, where, chord_of, pos, static_cast<int>(c2), static_cast<int>(s), dir);
          if (best.empty() || code < best) best = std::move(code);
        }
    }
    codes.push_back(std::move(best));
  }
  std::sort(codes.begin(), codes.end());
  std::vector<int> out{empty, static_cast<int>(codes.size())};
  for (const auto& code : codes) {
    out.push_back(static_cast<int>(code.size()));
    out.insert(out.end(), code.begin(), code.end());
  }
  return out;
}

bool isomorphic(const ChordDiagram& a, const ChordDiagram& b) {
  return canonical_form(a) == canonical_form(b);
}

ChordDiagram random_chord_diagram(std::mt19937_64& rng, int chords, int max_circles) {
  if (chords < 0 || max_circles < 1) throw std::invalid_argument("random_chord_diagram: bad sizes");
  std::uniform_int_distribution<int> pick_circle(0, max_circles - 1);
  std::bernoulli_distribution reversing(0.5);
  ChordDiagram cd;
  cd.circles.resize(max_circles);
  for (int id = 0; id < 2 * chords; ++id) {
    auto& circle = cd.circles[pick_circle(rng)];
    std::uniform_int_distribution<std::size_t> pos(0, circle.size());
    circle.insert(circle.begin() + static_cast<std::ptrdiff_t>(pos(rng)), id);
  }
  for (int i = 0; i < chords; ++i)
    cd.chords.push_back({2 * i, 2 * i + 1, reversing(rng) ? Twist::Reversing : Twist::Coherent});
  std::erase_if(cd.circles, [](const auto& c) { return c.empty(); });
  return cd;
}

ChordDiagram random_planar_chord_diagram(std::mt19937_64& rng, int chords, int max_circles) {
  if (chords < 0 || max_circles < 1) throw std::invalid_argument("random_planar_chord_diagram: bad sizes");
  std::uniform_int_distribution<int> pick_circle(0, max_circles - 1);
  std::bernoulli_distribution reversing(0.5);
  constexpr int kAttempts = 200;
  for (;;) {
    ChordDiagram cd;
    cd.circles.resize(max_circles);
    bool stuck = false;
    for (int i = 0; i < chords && !stuck; ++i) {
      stuck = true;
      for (int attempt = 0; attempt < kAttempts; ++attempt) {
        ChordDiagram next = cd;
        for (int id : {2 * i, 2 * i + 1}) {
          auto& circle = next.circles[pick_circle(rng)];
          std::uniform_int_distribution<std::size_t> pos(0, circle.size());
          circle.insert(circle.begin() + static_cast<std::ptrdiff_t>(pos(rng)), id);
        }
        next.chords.push_back({2 * i, 2 * i + 1, reversing(rng) ? Twist::Reversing : Twist::Coherent});
        if (is_planar(to_diagram(next))) {
          cd = std::move(next);
          stuck = false;
          break;
        }
      }
    }
    if (stuck) continue;
    std::erase_if(cd.circles, [](const auto& c) { return c.empty(); });
    return cd;
  }
}

}  // namespace kbracket
