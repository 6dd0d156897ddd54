#pragma once

#include "kbracket/laurent.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kbracket {

struct ChordDiagram;

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertices) : adj_(vertices) {}
  Graph(int vertices, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  /// Sorted neighbour list.
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(int u, int v) const;
  /// Throws on loops and out-of-range vertices; duplicate edges are ignored.
  void add_edge(int u, int v);
  int add_vertex();
  std::vector<std::pair<int, int>> edges() const;

  /// Induced subgraph on `keep` (in the given order) and the vertex map old->new
  /// (-1 for dropped vertices).
  Graph induced(const std::vector<int>& keep) const;
  Graph without(const std::vector<int>& drop) const;
  Graph without_vertex(int v) const { return without({v}); }
  /// G - N[v]: v and all its neighbours removed.
  Graph without_closed_neighborhood(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<int>> adj_;
};

struct RootedGraph {
  Graph graph;
  int root = 0;
};

inline constexpr int kNaiveVertexLimit = 30;

/// Signed count of independent vertex sets, including the empty set, by
/// enumeration. Throws std::invalid_argument above kNaiveVertexLimit vertices.
Integer f_naive(const Graph& g);

/// Same value via the duplication, multiplication and recursion laws.
Integer f_reduced(const Graph& g);

Graph path(int n);
Graph cycle(int n);
RootedGraph hexagon();
/// Path rooted at an extreme vertex.
RootedGraph rooted_path(int n);

/// Disjoint union of both graphs plus an edge between the roots. Vertices of
/// g1 keep their numbers; g2's are shifted by |V(g1)|.
Graph star_join(const RootedGraph& g1, const RootedGraph& g2);

struct BrickType {
  Integer n;
  Integer k;
  friend bool operator==(const BrickType&, const BrickType&) = default;
};

/// (f(G), f(G - root)).
BrickType brick_type(const RootedGraph& g);

/// Star-joins a fresh hexagon at its vertex w to the root; the new root is a
/// hexagon vertex adjacent to w. Maps a brick (n, k) to (n + k, k).
RootedGraph attach_hexagon(const RootedGraph& g);

/// Star-joins L_3 at an extreme vertex to the root; f changes sign.
Graph negate(const RootedGraph& g);

/// G_1 = hexagon, G_{r+1} = attach_hexagon(G_r); f(G_r) = r + 1.
RootedGraph family_G(int r);

/// Hexagon chain whose attachments map (n, k) to (n + k, n): f runs through
/// 2, 3, 5, 8, 13, ...
RootedGraph family_F(int r);

/// Hexagon vertex used as the new root in family_F, relative to the attaching
/// vertex (0) around the cycle.
inline constexpr int kFibonacciRootOffset = 3;

struct Building {
  Graph graph;
  int center = 0;
  std::vector<int> roots;          // v_i
  std::vector<int> intermediates;  // w_i (complicated buildings only)
};

/// Central vertex w joined to the root of every brick.
Building building_simple(const std::vector<RootedGraph>& bricks);
/// Like building_simple, with an intermediate vertex w_i subdividing each
/// edge w - v_i.
Building building_complicated(const std::vector<RootedGraph>& bricks);

inline constexpr int kBrickSearchMaxVertices = 10;

/// Smallest rooted graph (by vertex count, then generation order) of the
/// given brick type. Enumerates graphs up to isomorphism; nullopt if none
/// exists within max_vertices.
std::optional<RootedGraph> brick_search(const Integer& n, const Integer& k, int max_vertices);

inline constexpr int kRealizeMaxVertices = 24;

/// A chord diagram, every chord on a single circle, whose interlacement graph
/// is g with chord i <-> vertex i. nullopt if the bounded search fails (the
/// graph may not be a circle graph).
std::optional<ChordDiagram> realize_as_chord_diagram(const Graph& g, int max_circles = 1);

/// Brute-force isomorphism with degree pruning; fine up to ~12 vertices.
bool isomorphic(const Graph& g1, const Graph& g2);

/// Bipartite check; a one-circle realization is planar exactly when its
/// interlacement graph is bipartite.
bool is_bipartite(const Graph& g);

/// Text edge list: optional `vertices: n` header, then `u v` per line. Blank
/// lines and `#` comments are skipped.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

}  // namespace kbracket
