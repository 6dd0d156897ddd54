#include "kbracket/graphs.hpp"

#include "kbracket/chords.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace kbracket {

Graph::Graph(int vertices, const std::vector<std::pair<int, int>>& edges) : adj_(vertices) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

int Graph::edge_count() const {
  int total = 0;
  for (const auto& n : adj_) total += static_cast<int>(n.size());
  return total / 2;
}

bool Graph::has_edge(int u, int v) const {
  const auto& n = adj_[u];
  return std::binary_search(n.begin(), n.end(), v);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (has_edge(u, v)) return;
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

int Graph::add_vertex() {
  adj_.emplace_back();
  return vertex_count() - 1;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<int> index(vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) index[keep[i]] = static_cast<int>(i);
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (int v : adj_[keep[i]])
      if (index[v] >= 0) g.add_edge(static_cast<int>(i), index[v]);
  return g;
}

Graph Graph::without(const std::vector<int>& drop) const {
  std::vector<bool> gone(vertex_count(), false);
  for (int v : drop) gone.at(v) = true;
  std::vector<int> keep;
  for (int v = 0; v < vertex_count(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced(keep);
}

Graph Graph::without_closed_neighborhood(int v) const {
  std::vector<int> drop = adj_.at(v);
  drop.push_back(v);
  return without(drop);
}

// --- f(G) -------------------------------------------------------------------

Integer f_naive(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kNaiveVertexLimit)
    throw std::invalid_argument("f_naive enumerates independent sets only up to " +
                                std::to_string(kNaiveVertexLimit) + " vertices; use f_reduced");
  std::vector<std::uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u : g.neighbors(v)) nbr[v] |= std::uint32_t{1} << u;
  // Depth-first over vertices; `blocked` holds neighbours of chosen vertices.
  std::int64_t total = 0;
  std::function<void(int, std::uint32_t, int)> walk = [&](int v, std::uint32_t blocked, int size) {
    if (v == n) {
      total += (size % 2 == 0) ? 1 : -1;
      return;
    }
    walk(v + 1, blocked, size);
    if (!((blocked >> v) & 1u)) walk(v + 1, blocked | nbr[v], size + 1);
  };
  walk(0, 0, 0);
  return Integer(total);
}

namespace {

struct Bits {
  std::vector<std::uint64_t> w;

  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool none() const {
    return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] & ~o.w[i]) return false;
    return true;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= o.w[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] &= ~o.w[i];
    return r;
  }
  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t x = w[i];
      while (x) {
        const int b = __builtin_ctzll(x);
        fn(static_cast<int>(i * 64 + b));
        x &= x - 1;
      }
    }
  }
  friend bool operator==(const Bits&, const Bits&) = default;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : b.w) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

class ReducedEvaluator {
 public:
  explicit ReducedEvaluator(const Graph& g) : n_(g.vertex_count()), nbr_(n_, Bits(n_)) {
    for (int v = 0; v < n_; ++v)
      for (int u : g.neighbors(v)) nbr_[v].set(u);
  }

  Integer eval(Bits alive) {
    if (alive.none()) return 1;
    if (auto it = memo_.find(alive); it != memo_.end()) return it->second;
    const Bits key = alive;
    Integer result = evaluate(std::move(alive));
    memo_.emplace(key, result);
    return result;
  }

 private:
  Integer evaluate(Bits alive) {
    // Multiplication: split off the component of the lowest vertex.
    Bits comp(n_);
    int first = -1;
    alive.for_each([&](int v) {
      if (first < 0) first = v;
    });
    std::vector<int> stack{first};
    comp.set(first);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      (nbr_[v] & alive).minus(comp).for_each([&](int u) {
        comp.set(u);
        stack.push_back(u);
      });
    }
    if (!(comp == alive)) return eval(comp) * eval(alive.minus(comp));
    if (alive.count() == 1) return 0;

    // Duplication: non-adjacent v, w with N(v) within N(w) gives f(G) = f(G - w).
    std::vector<int> verts;
    alive.for_each([&](int v) { verts.push_back(v); });
    std::vector<Bits> local;
    local.reserve(verts.size());
    for (int v : verts) local.push_back(nbr_[v] & alive);
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (std::size_t j = 0; j < verts.size(); ++j) {
        if (i == j || local[i].test(verts[j])) continue;
        if (local[i].subset_of(local[j])) {
          alive.reset(verts[j]);
          return eval(std::move(alive));
        }
      }
    }

    // Recursion on a maximum-degree vertex, smallest index on ties.
    std::size_t best = 0;
    for (std::size_t i = 1; i < verts.size(); ++i)
      if (local[i].count() > local[best].count()) best = i;
    const int v = verts[best];
    Bits minus_v = alive;
    minus_v.reset(v);
    Bits minus_closed = minus_v.minus(local[best]);
    return eval(std::move(minus_v)) - eval(std::move(minus_closed));
  }

  int n_;
  std::vector<Bits> nbr_;
  std::unordered_map<Bits, Integer, BitsHash> memo_;
};

}  // namespace

Integer f_reduced(const Graph& g) {
  ReducedEvaluator ev(g);
  Bits all(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) all.set(v);
  return ev.eval(all);
}

// --- families and constructions -------------------------------------------

Graph path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

RootedGraph hexagon() { return {cycle(6), 0}; }

RootedGraph rooted_path(int n) { return {path(n), 0}; }

Graph star_join(const RootedGraph& g1, const RootedGraph& g2) {
  const int n1 = g1.graph.vertex_count();
  const int n2 = g2.graph.vertex_count();
  Graph g(n1 + n2);
  for (const auto& [u, v] : g1.graph.edges()) g.add_edge(u, v);
  for (const auto& [u, v] : g2.graph.edges()) g.add_edge(n1 + u, n1 + v);
  g.add_edge(g1.root, n1 + g2.root);
  return g;
}

BrickType brick_type(const RootedGraph& g) {
  return {f_reduced(g.graph), f_reduced(g.graph.without_vertex(g.root))};
}

RootedGraph attach_hexagon(const RootedGraph& g) {
  const int base = g.graph.vertex_count();
  return {star_join(g, hexagon()), base + 1};
}

Graph negate(const RootedGraph& g) { return star_join(g, rooted_path(3)); }

RootedGraph family_G(int r) {
  if (r < 1) throw std::invalid_argument("family_G needs r >= 1");
  RootedGraph g = hexagon();
  for (int i = 1; i < r; ++i) g = attach_hexagon(g);
  return g;
}

RootedGraph family_F(int r) {
  if (r < 1) throw std::invalid_argument("family_F needs r >= 1");
  RootedGraph g = hexagon();
  for (int i = 1; i < r; ++i) {
    const int base = g.graph.vertex_count();
    g = {star_join(g, hexagon()), base + kFibonacciRootOffset};
  }
  return g;
}

Building building_simple(const std::vector<RootedGraph>& bricks) {
  if (bricks.empty()) throw std::invalid_argument("a building needs at least one brick");
  Building b;
  b.graph = Graph(1);
  b.center = 0;
  for (const auto& brick : bricks) {
    const int base = b.graph.vertex_count();
    for (int i = 0; i < brick.graph.vertex_count(); ++i) b.graph.add_vertex();
    for (const auto& [u, v] : brick.graph.edges()) b.graph.add_edge(base + u, base + v);
    b.graph.add_edge(b.center, base + brick.root);
    b.roots.push_back(base + brick.root);
  }
  return b;
}

Building building_complicated(const std::vector<RootedGraph>& bricks) {
  if (bricks.empty()) throw std::invalid_argument("a building needs at least one brick");
  Building b;
  b.graph = Graph(1);
  b.center = 0;
  for (const auto& brick : bricks) {
    const int mid = b.graph.add_vertex();
    const int base = b.graph.vertex_count();
    for (int i = 0; i < brick.graph.vertex_count(); ++i) b.graph.add_vertex();
    for (const auto& [u, v] : brick.graph.edges()) b.graph.add_edge(base + u, base + v);
    b.graph.add_edge(b.center, mid);
    b.graph.add_edge(mid, base + brick.root);
    b.intermediates.push_back(mid);
    b.roots.push_back(base + brick.root);
  }
  return b;
}

// --- isomorphism ------------------------------------------------------------

bool isomorphic(const Graph& g1, const Graph& g2) {
  const int n = g1.vertex_count();
  if (n != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return false;
  std::vector<int> d1(n), d2(n);
  for (int v = 0; v < n; ++v) {
    d1[v] = g1.degree(v);
    d2[v] = g2.degree(v);
  }
  {
    auto s1 = d1, s2 = d2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }
  // Assign g1 vertices in BFS order so each new vertex has mapped neighbours.
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  while (static_cast<int>(order.size()) < n) {
    int start = -1;
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (start < 0 || d1[v] > d1[start])) start = v;
    std::vector<int> queue{start};
    seen[start] = true;
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int u : g1.neighbors(queue[i]))
        if (!seen[u]) {
          seen[u] = true;
          queue.push_back(u);
        }
    order.insert(order.end(), queue.begin(), queue.end());
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> extend = [&](int idx) {
    if (idx == n) return true;
    const int v = order[idx];
    for (int w = 0; w < n; ++w) {
      if (used[w] || d2[w] != d1[v]) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        const int u = order[j];
        ok = g1.has_edge(u, v) == g2.has_edge(map[u], w);
      }
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (extend(idx + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return extend(0);
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (int u : g.neighbors(queue[i])) {
        if (color[u] < 0) {
          color[u] = 1 - color[queue[i]];
          queue.push_back(u);
        } else if (color[u] == color[queue[i]]) {
          return false;
        }
      }
  }
  return true;
}

// --- brick search -------------------------------------------------------------

namespace {

// Small graphs as adjacency bitmasks.
using SmallGraph = std::vector<std::uint16_t>;

Graph to_graph(const SmallGraph& sg) {
  const int n = static_cast<int>(sg.size());
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((sg[u] >> v) & 1u) g.add_edge(u, v);
  return g;
}

// f of every induced subgraph, indexed by vertex mask.
std::vector<std::int64_t> f_table(const SmallGraph& sg) {
  const int n = static_cast<int>(sg.size());
  std::vector<std::int64_t> f(std::size_t{1} << n, 1);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    const int v = __builtin_ctz(mask);
    const std::uint32_t rest = mask & ~(1u << v);
    f[mask] = f[rest] - f[rest & ~static_cast<std::uint32_t>(sg[v])];
  }
  return f;
}

std::vector<std::int64_t> invariant(const SmallGraph& sg) {
  const int n = static_cast<int>(sg.size());
  std::vector<std::int64_t> key;
  std::vector<std::int64_t> per_vertex(n);
  for (int v = 0; v < n; ++v) {
    std::int64_t nd = 0;
    for (int u = 0; u < n; ++u)
      if ((sg[v] >> u) & 1u) nd += std::int64_t{1} << (3 * __builtin_popcount(sg[u]));
    per_vertex[v] = __builtin_popcount(sg[v]) * (std::int64_t{1} << 40) + nd;
  }
  std::sort(per_vertex.begin(), per_vertex.end());
  key.push_back(n);
  key.insert(key.end(), per_vertex.begin(), per_vertex.end());
  return key;
}

}  // namespace

std::optional<RootedGraph> brick_search(const Integer& n, const Integer& k, int max_vertices) {
  if (max_vertices < 1 || max_vertices > kBrickSearchMaxVertices)
    throw std::invalid_argument("brick_search: max_vertices must be in 1.." +
                                std::to_string(kBrickSearchMaxVertices));
  std::vector<SmallGraph> level{SmallGraph{0}};
  for (int m = 1; m <= max_vertices; ++m) {
    for (const auto& sg : level) {
      const auto f = f_table(sg);
      const std::uint32_t full = (1u << m) - 1;
      for (int root = 0; root < m; ++root)
        if (f[full] == n && f[full & ~(1u << root)] == k) return RootedGraph{to_graph(sg), root};
    }
    if (m == max_vertices) break;
    // Next level: add vertex m adjacent to every subset, deduplicated.
    std::map<std::vector<std::int64_t>, std::vector<std::size_t>> buckets;
    std::vector<SmallGraph> next;
    std::vector<Graph> next_graphs;
    for (const auto& sg : level) {
      for (std::uint32_t nb = 0; nb < (1u << m); ++nb) {
        SmallGraph h = sg;
        h.push_back(static_cast<std::uint16_t>(nb));
        for (int u = 0; u < m; ++u)
          if ((nb >> u) & 1u) h[u] |= static_cast<std::uint16_t>(1u << m);
        auto key = invariant(h);
        auto& bucket = buckets[key];
        const Graph hg = to_graph(h);
        bool dup = false;
        for (std::size_t idx : bucket)
          if (isomorphic(next_graphs[idx], hg)) {
            dup = true;
            break;
          }
        if (dup) continue;
        bucket.push_back(next.size());
        next.push_back(std::move(h));
        next_graphs.push_back(hg);
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

// --- circle-graph realization -------------------------------------------------

namespace {

// Some bridge (u, v) of a connected graph, or nullopt.
std::optional<std::pair<int, int>> find_bridge(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  std::optional<std::pair<int, int>> found;
  std::function<void(int, int)> dfs = [&](int v, int parent) {
    disc[v] = low[v] = timer++;
    for (int u : g.neighbors(v)) {
      if (u == parent) continue;
      if (disc[u] >= 0) {
        low[v] = std::min(low[v], disc[u]);
        continue;
      }
      dfs(u, v);
      low[v] = std::min(low[v], low[u]);
      if (low[u] > disc[v] && !found) found = std::make_pair(v, u);
    }
  };
  if (n > 0) dfs(0, -1);
  return found;
}

std::optional<std::vector<int>> realize_component(const Graph& g, long long budget);

// Splits g at the bridge (v, w), realizes both sides and splices the w side
// into the v side: A v B v C with w's word rotated to Y w X w gives
// A Y w X v w B v C, where w crosses only v.
std::optional<std::vector<int>> realize_across_bridge(const Graph& g, int v, int w, long long budget) {
  std::vector<int> side(g.vertex_count(), 0), stack{w};
  side[w] = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int y : g.neighbors(x))
      if (!side[y] && !(x == w && y == v)) {
        side[y] = 1;
        stack.push_back(y);
      }
  }
  std::vector<int> left, right;
  for (int x = 0; x < g.vertex_count(); ++x) (side[x] ? right : left).push_back(x);
  auto wl = realize_component(g.induced(left), budget);
  auto wr = realize_component(g.induced(right), budget);
  if (!wl || !wr) return std::nullopt;
  for (int& x : *wl) x = left[x];
  for (int& x : *wr) x = right[x];
  auto last_w = std::find(wr->rbegin(), wr->rend(), w);
  std::rotate(wr->begin(), last_w.base(), wr->end());
  const auto first_v = std::find(wl->begin(), wl->end(), v);
  std::vector<int> out(wl->begin(), first_v);
  out.insert(out.end(), wr->begin(), wr->end() - 1);
  out.insert(out.end(), {v, w});
  out.insert(out.end(), first_v + 1, wl->end());
  return out;
}

// Double-occurrence word on one circle whose interlacement graph is `g`
// (connected), chord labels = vertex ids. Bridges are split off first; the
// remaining blocks are found by backtracking.
std::optional<std::vector<int>> realize_component(const Graph& g, long long budget) {
  if (auto bridge = find_bridge(g)) return realize_across_bridge(g, bridge->first, bridge->second, budget);
  const int n = g.vertex_count();
  if (n == 0) return std::vector<int>{};
  std::vector<int> word;
  std::vector<int> open_pos(n, -1), close_pos(n, -1);
  long long steps = 0;

  // Closing v at position t fixes its relation to every chord.
  auto close_ok = [&](int v, int t) {
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      int inside = 0;
      if (open_pos[u] > open_pos[v] && open_pos[u] < t) ++inside;
      if (close_pos[u] > open_pos[v] && close_pos[u] >= 0 && close_pos[u] < t) ++inside;
      if ((inside == 1) != g.has_edge(u, v)) return false;
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int opened) -> bool {
    if (++steps > budget) return false;
    const int t = static_cast<int>(word.size());
    if (t == 2 * n) return true;
    // Close an open chord.
    for (int v = 0; v < n; ++v) {
      if (open_pos[v] < 0 || close_pos[v] >= 0) continue;
      if (!close_ok(v, t)) continue;
      close_pos[v] = t;
      word.push_back(v);
      if (extend(opened)) return true;
      word.pop_back();
      close_pos[v] = -1;
    }
    // Open a new chord; the first letter is fixed by rotation.
    if (opened < n) {
      for (int v = 0; v < n; ++v) {
        if (open_pos[v] >= 0) continue;
        if (t == 0 && v != 0) break;
        // A chord opened now lies wholly after every closed chord.
        bool blocked = false;
        for (int u : g.neighbors(v)) blocked = blocked || close_pos[u] >= 0;
        if (blocked) continue;
        open_pos[v] = t;
        word.push_back(v);
        if (extend(opened + 1)) return true;
        word.pop_back();
        open_pos[v] = -1;
      }
    }
    return false;
  };
  if (extend(0)) return word;
  return std::nullopt;
}

}  // namespace

std::optional<ChordDiagram> realize_as_chord_diagram(const Graph& g, int max_circles) {
  if (max_circles < 1) throw std::invalid_argument("realize_as_chord_diagram: max_circles must be >= 1");
  if (g.vertex_count() > kRealizeMaxVertices)
    throw std::invalid_argument("realize_as_chord_diagram searches graphs up to " +
                                std::to_string(kRealizeMaxVertices) + " vertices");
  // Components never interleave, so their words are laid out one after another.
  std::vector<int> comp(g.vertex_count(), -1);
  std::vector<int> full_word;
  for (int s = 0; s < g.vertex_count(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = s;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (int u : g.neighbors(members[i]))
        if (comp[u] < 0) {
          comp[u] = s;
          members.push_back(u);
        }
    std::sort(members.begin(), members.end());
    auto word = realize_component(g.induced(members), 4'000'000);
    if (!word) return std::nullopt;
    for (int local : *word) full_word.push_back(members[local]);
  }
  ChordDiagram cd;
  cd.circles.emplace_back();
  cd.chords.resize(g.vertex_count());
  std::vector<int> seen(g.vertex_count(), 0);
  for (int v : full_word) {
    const int endpoint = 2 * v + seen[v]++;
    cd.circles[0].push_back(endpoint);
  }
  for (int v = 0; v < g.vertex_count(); ++v) cd.chords[v] = {2 * v, 2 * v + 1, Twist::Coherent};
  return cd;
}

// --- text format --------------------------------------------------------------

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int declared = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (first == "vertices:") {
      if (!(ls >> declared) || declared < 0)
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad vertex count");
      continue;
    }
    int u = 0, v = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(first, &used);
      if (used != first.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected `u v`");
    }
    std::string extra;
    if (!(ls >> v) || (ls >> extra))
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected `u v`");
    if (u < 0 || v < 0) throw std::invalid_argument("line " + std::to_string(line_no) + ": negative vertex");
    edges.emplace_back(u, v);
  }
  int n = declared;
  if (n < 0) {
    n = 0;
    for (const auto& [u, v] : edges) n = std::max({n, u + 1, v + 1});
  }
  return Graph(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "vertices: " << g.vertex_count() << "\n";
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

}  // namespace kbracket
