#pragma once

// Deliberately naive reference computations used to freeze expected values.

#include "kbracket/diagram.hpp"
#include "kbracket/graphs.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using Poly = std::map<int, long long>;

inline int find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Circles of a state by union-find over strand ends.
inline int circles(const kbracket::Diagram& d, std::uint64_t b_mask) {
  const int n = d.crossing_count();
  std::vector<int> parent(4 * n);
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int x, int y) { parent[find(parent, x)] = find(parent, y); };
  for (int e = 0; e < 4 * n; ++e) unite(e, d.arc_partner(e));
  for (int c = 0; c < n; ++c) {
    const auto p = (b_mask >> c) & 1 ? d.crossing(c).b : d.crossing(c).a;
    for (int s = 0; s < 4; ++s) unite(4 * c + s, 4 * c + kbracket::pair_partner(p, s));
  }
  int count = d.free_circles();
  for (int e = 0; e < 4 * n; ++e) count += find(parent, e) == e;
  return count;
}

inline Poly times(const Poly& p, const Poly& q) {
  Poly r;
  for (auto [a, x] : p)
    for (auto [b, y] : q) r[a + b] += x * y;
  std::erase_if(r, [](const auto& t) { return t.second == 0; });
  return r;
}

// sum over states A^(a-b) (-A^2 - A^-2)^(|s|-1)
inline Poly bracket(const kbracket::Diagram& d) {
  const int n = d.crossing_count();
  const Poly delta{{2, -1}, {-2, -1}};
  Poly total;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const int b = __builtin_popcountll(mask);
    Poly term{{n - 2 * b, 1}};
    for (int k = 1; k < circles(d, mask); ++k) term = times(term, delta);
    for (auto [deg, c] : term) total[deg] += c;
  }
  std::erase_if(total, [](const auto& t) { return t.second == 0; });
  return total;
}

inline Poly as_map(const kbracket::LaurentPoly& p) {
  Poly r;
  for (const auto& [deg, c] : p.terms()) r[deg] = static_cast<long long>(c);
  return r;
}

// sum over independent sets of (-1)^|I|
inline long long f(const kbracket::Graph& g) {
  const int n = g.vertex_count();
  long long total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool independent = true;
    for (auto [u, v] : g.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) independent = false;
    if (independent) total += __builtin_popcountll(mask) % 2 ? -1 : 1;
  }
  return total;
}

inline kbracket::Graph random_graph(std::mt19937_64& rng, int n, double p) {
  kbracket::Graph g(n);
  std::bernoulli_distribution edge(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

}  // namespace oracle
