#include "edgeideal/graph.hpp"

#include <algorithm>
#include <string>

#include "edgeideal/errors.hpp"

namespace edgeideal {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    throw InputError("vertex count must lie in [0, 64], got " + std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), VertexSet{});
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& raw : edges) {
    const Edge e(raw.u, raw.v);
    if (e.u < 0 || e.v >= n)
      throw InputError("edge {" + std::to_string(raw.u) + "," + std::to_string(raw.v) +
                       "} has an endpoint outside 0.." + std::to_string(n - 1));
    if (e.u == e.v) throw InputError("loop at vertex " + std::to_string(e.u));
    if (adj_[e.u].contains(e.v))
      throw InputError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    adj_[e.u] = adj_[e.u].with(e.v);
    adj_[e.v] = adj_[e.v].with(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph::Graph(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges)
    : Graph(n, [&] {
        std::vector<Edge> es;
        for (auto [a, b] : edges) {
          Edge e;
          e.u = a;
          e.v = b;
          es.push_back(e);
        }
        return es;
      }()) {}

bool Graph::has_edge(const Edge& e) const {
  return is_vertex(e.u) && is_vertex(e.v) && adj_[e.u].contains(e.v);
}

VertexSet Graph::neighborhood_of(VertexSet s) const {
  VertexSet out;
  for (Vertex v : s) out |= adj_[v];
  return out;
}

bool Graph::has_isolated_vertex() const {
  return std::any_of(adj_.begin(), adj_.end(), [](VertexSet a) { return a.empty(); });
}

bool Graph::is_independent(VertexSet s) const {
  for (Vertex v : s)
    if (adj_[v].intersects(s)) return false;
  return true;
}

bool Graph::has_edge_within(VertexSet s) const { return !is_independent(s); }

void require_vertex(const Graph& g, Vertex x) {
  if (!g.is_vertex(x))
    throw InputError("vertex " + std::to_string(x) + " is not in 0.." + std::to_string(g.order() - 1));
}

VertexSet neighbors(const Graph& g, Vertex x) {
  require_vertex(g, x);
  return g.adjacency(x);
}

VertexSet closed_neighborhood(const Graph& g, Vertex x) { return neighbors(g, x).with(x); }

VertexSet InducedSubgraph::lift(VertexSet local) const {
  VertexSet out;
  for (Vertex v : local) out = out.with(original[static_cast<std::size_t>(v)]);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
  if (!w.subset_of(g.vertices())) throw InputError("vertex set is not contained in the graph");
  InducedSubgraph out;
  out.original = w.members();
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) local[out.original[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (w.contains(e.u) && w.contains(e.v)) edges.emplace_back(local[e.u], local[e.v]);
  out.graph = Graph(w.size(), edges);
  return out;
}

InducedSubgraph delete_vertex(const Graph& g, Vertex x) {
  require_vertex(g, x);
  return induced_subgraph(g, g.vertices().without(x));
}

InducedSubgraph delete_closed_neighborhood(const Graph& g, Vertex x) {
  return induced_subgraph(g, g.vertices() - closed_neighborhood(g, x));
}

namespace {

// Bron-Kerbosch with pivoting on the complement graph restricted to `within`:
// cliques of the complement are independent sets of g.
struct MisEnumerator {
  const Graph& g;
  VertexSet within;
  std::vector<VertexSet>& out;

  VertexSet non_neighbors(Vertex v) const { return within - g.adjacency(v).with(v); }

  void run(VertexSet r, VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      return;
    }
    Vertex pivot = -1;
    int best = -1;
    for (Vertex u : p | x) {
      const int score = (p & non_neighbors(u)).size();
      if (score > best) {
        best = score;
        pivot = u;
      }
    }
    for (Vertex v : p - non_neighbors(pivot)) {
      const VertexSet nv = non_neighbors(v);
      run(r.with(v), p & nv, x & nv);
      p = p.without(v);
      x = x.with(v);
    }
  }
};

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet within, const Limits& limits) {
  if (!within.subset_of(g.vertices())) throw InputError("vertex set is not contained in the graph");
  if (within.size() > limits.enumeration_cutoff)
    throw ResourceError("maximal independent set enumeration on " + std::to_string(within.size()) +
                        " vertices exceeds the cutoff " + std::to_string(limits.enumeration_cutoff));
  std::vector<VertexSet> out;
  MisEnumerator{g, within, out}.run(VertexSet{}, within, VertexSet{});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g, const Limits& limits) {
  return maximal_independent_sets(g, g.vertices(), limits);
}

std::vector<VertexSet> minimal_vertex_covers(const Graph& g, const Limits& limits) {
  auto sets = maximal_independent_sets(g, limits);
  for (VertexSet& s : sets) s = g.vertices() - s;
  return sets;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (seen.contains(v)) continue;
    VertexSet comp = VertexSet::single(v);
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      const VertexSet next = g.neighborhood_of(frontier) - comp;
      comp |= next;
      frontier = next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

}  // namespace edgeideal
