#include "edgeideal/decomposability.hpp"

#include <string>
#include <unordered_map>

#include "edgeideal/errors.hpp"

namespace edgeideal {

bool is_shedding_vertex(const Graph& g, VertexSet within, Vertex x, const Limits& limits) {
  require_vertex(g, x);
  if (!within.contains(x)) throw InputError("shedding candidate outside the induced support");
  const VertexSet nbrs = g.adjacency(x) & within;
  const VertexSet link = within - nbrs.with(x);
  // F is maximal in G - x iff no neighbor of x extends it.
  for (VertexSet f : maximal_independent_sets(g, link, limits)) {
    bool extends = false;
    for (Vertex y : nbrs)
      if (!g.adjacency(y).intersects(f)) {
        extends = true;
        break;
      }
    if (!extends) return false;
  }
  return true;
}

bool is_shedding_vertex(const Graph& g, Vertex x, const Limits& limits) {
  return is_shedding_vertex(g, g.vertices(), x, limits);
}

namespace {

class Decomposer {
 public:
  Decomposer(const Graph& g, const Limits& limits, bool memoize)
      : g_(g), limits_(limits), memoize_(memoize) {}

  // Returns the shedding vertex chosen for `w`, -1 for an edgeless leaf, or
  // nullopt when w is not vertex decomposable.
  std::optional<int> solve(VertexSet w) {
    if (!g_.has_edge_within(w)) return -1;
    if (memoize_) {
      if (auto it = memo_.find(w.bits()); it != memo_.end()) return it->second;
    }
    std::optional<int> answer;
    for (Vertex x : w) {
      if (!(g_.adjacency(x) & w).empty() && is_shedding_vertex(g_, w, x, limits_) &&
          solve(w.without(x)) && solve(w - (g_.adjacency(x) & w).with(x))) {
        answer = x;
        break;
      }
    }
    if (memoize_) memo_.emplace(w.bits(), answer);
    return answer;
  }

  int build(VertexSet w, DecompositionCertificate& cert) {
    const int index = static_cast<int>(cert.steps.size());
    cert.steps.push_back({w, std::nullopt, -1, -1});
    const int x = *solve(w);
    if (x < 0) return index;
    const int del = build(w.without(x), cert);
    const int lnk = build(w - (g_.adjacency(x) & w).with(x), cert);
    cert.steps[static_cast<std::size_t>(index)].shedding = x;
    cert.steps[static_cast<std::size_t>(index)].deletion = del;
    cert.steps[static_cast<std::size_t>(index)].link = lnk;
    return index;
  }

 private:
  const Graph& g_;
  const Limits& limits_;
  bool memoize_;
  std::unordered_map<std::uint64_t, std::optional<int>> memo_;
};

}  // namespace

DecomposabilityResult is_vertex_decomposable(const Graph& g, const Limits& limits,
                                             DecomposabilityOptions options) {
  if (g.order() > limits.decomposition_cutoff)
    throw ResourceError("vertex decomposability on " + std::to_string(g.order()) +
                        " vertices exceeds the cutoff " + std::to_string(limits.decomposition_cutoff));
  Decomposer d(g, limits, options.memoize);
  DecomposabilityResult result;
  if (!d.solve(g.vertices())) return result;
  result.decomposable = true;
  result.certificate.emplace();
  d.build(g.vertices(), *result.certificate);
  return result;
}

bool replay_certificate(const Graph& g, const DecompositionCertificate& cert, const Limits& limits) {
  if (cert.steps.empty() || cert.steps[0].support != g.vertices()) return false;
  const auto count = static_cast<int>(cert.steps.size());
  std::vector<bool> visited(cert.steps.size(), false);
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int at = stack.back();
    stack.pop_back();
    if (at < 0 || at >= count || visited[static_cast<std::size_t>(at)]) return false;
    visited[static_cast<std::size_t>(at)] = true;
    const DecompositionStep& s = cert.steps[static_cast<std::size_t>(at)];
    if (!s.support.subset_of(g.vertices())) return false;
    if (!s.shedding) {
      if (g.has_edge_within(s.support)) return false;
      continue;
    }
    const Vertex x = *s.shedding;
    if (!g.is_vertex(x) || !s.support.contains(x)) return false;
    if (!is_shedding_vertex(g, s.support, x, limits)) return false;
    if (s.deletion < 0 || s.link < 0 || s.deletion >= count || s.link >= count) return false;
    const VertexSet closed = (g.adjacency(x) & s.support).with(x);
    if (cert.steps[static_cast<std::size_t>(s.deletion)].support != s.support.without(x)) return false;
    if (cert.steps[static_cast<std::size_t>(s.link)].support != s.support - closed) return false;
    stack.push_back(s.deletion);
    stack.push_back(s.link);
  }
  return true;
}

C5Result is_c5_free(const Graph& g, C5Mode mode) {
  const int n = g.order();
  // Search cycles a-b-c-d-e-a with a the smallest vertex and b < e to avoid
  // revisiting rotations and reflections.
  for (Vertex a = 0; a < n; ++a) {
    if (g.adjacency(a).size() < 2) continue;
    const VertexSet above = VertexSet::full(n) - VertexSet::full(a + 1);
    for (Vertex b : g.adjacency(a) & above)
      for (Vertex c : g.adjacency(b) & above) {
        if (c == b) continue;
        if (mode == C5Mode::induced && g.adjacent(a, c)) continue;
        for (Vertex d : g.adjacency(c) & above) {
          if (d == b) continue;
          if (mode == C5Mode::induced && (g.adjacent(a, d) || g.adjacent(b, d))) continue;
          for (Vertex e : g.adjacency(d) & g.adjacency(a) & above) {
            if (e == b || e == c || e <= b) continue;
            if (mode == C5Mode::induced && (g.adjacent(b, e) || g.adjacent(c, e))) continue;
            return {false, std::array<Vertex, 5>{a, b, c, d, e}};
          }
        }
      }
  }
  return {};
}

bool is_chordal(const Graph& g) {
  // Maximum cardinality search, then check that every vertex's earlier-visited
  // neighbors form a clique (perfect elimination ordering in reverse).
  const int n = g.order();
  std::vector<int> weight(static_cast<std::size_t>(n), 0);
  VertexSet visited;
  std::vector<Vertex> order;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    for (Vertex v : g.vertices() - visited)
      if (pick < 0 || weight[v] > weight[pick]) pick = v;
    for (Vertex u : g.adjacency(pick) - visited) ++weight[u];
    visited = visited.with(pick);
    order.push_back(pick);
  }
  VertexSet before;
  for (Vertex v : order) {
    const VertexSet earlier = g.adjacency(v) & before;
    for (Vertex u : earlier)
      if (!(earlier.without(u)).subset_of(g.adjacency(u))) return false;
    before = before.with(v);
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  VertexSet side[2];
  VertexSet seen;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet frontier = VertexSet::single(s);
    int parity = 0;
    while (!frontier.empty()) {
      side[parity] |= frontier;
      seen |= frontier;
      frontier = g.neighborhood_of(frontier) - seen;
      parity ^= 1;
    }
  }
  for (const Edge& e : g.edges())
    if (side[0].contains(e.u) == side[0].contains(e.v)) return false;
  return true;
}

bool is_forest(const Graph& g) {
  return g.size() + connected_components(g).size() == static_cast<std::size_t>(g.order());
}

std::optional<Vertex> dominated_neighbor(const Graph& g, Vertex x) {
  const VertexSet closed = closed_neighborhood(g, x);
  for (Vertex y : g.adjacency(x))
    if (g.adjacency(y).with(y).subset_of(closed)) return y;
  return std::nullopt;
}

}  // namespace edgeideal
