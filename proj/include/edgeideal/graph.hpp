#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "edgeideal/config.hpp"
#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

/// Unordered edge, normalized so that u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr VertexSet ends() const { return VertexSet::of({u, v}); }

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64).
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws InputError on loops, duplicate edges or out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  /// Sorted ascending.
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet vertices() const { return VertexSet::full(n_); }

  /// Unchecked open neighborhood; see neighbors() for the validating form.
  VertexSet adjacency(Vertex x) const { return adj_[static_cast<std::size_t>(x)]; }
  bool adjacent(Vertex a, Vertex b) const { return adjacency(a).contains(b); }
  bool has_edge(const Edge& e) const;
  bool is_vertex(Vertex x) const { return x >= 0 && x < n_; }

  /// Union of open neighborhoods of the members of s.
  VertexSet neighborhood_of(VertexSet s) const;
  bool has_isolated_vertex() const;
  /// True iff no edge has both ends in s.
  bool is_independent(VertexSet s) const;
  /// Edges with both ends inside s.
  bool has_edge_within(VertexSet s) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
};

VertexSet neighbors(const Graph& g, Vertex x);
VertexSet closed_neighborhood(const Graph& g, Vertex x);

/// Induced subgraph together with the ascending relabeling used to build it:
/// local vertex i corresponds to host vertex original[i].
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;

  /// Map a local vertex set back to host ids.
  VertexSet lift(VertexSet local) const;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);
InducedSubgraph delete_vertex(const Graph& g, Vertex x);
InducedSubgraph delete_closed_neighborhood(const Graph& g, Vertex x);

/// All inclusion-maximal independent sets of g, ascending by bitmask.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Limits& limits = {});
/// Maximal independent sets of the induced subgraph g[within], in host labels.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within,
                                                const Limits& limits = {});
/// Complements of the maximal independent sets, in the same order.
std::vector<VertexSet> minimal_vertex_covers(const Graph& g, const Limits& limits = {});

std::vector<VertexSet> connected_components(const Graph& g);

/// Throws InputError when x is not a vertex of g.
void require_vertex(const Graph& g, Vertex x);

}  // namespace edgeideal
