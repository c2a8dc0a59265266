#include "edgeideal/generators.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "edgeideal/decomposability.hpp"
#include "edgeideal/errors.hpp"

namespace edgeideal {
namespace {

constexpr std::array<std::pair<Family, std::string_view>, 9> kNames{{
    {Family::path, "path"},
    {Family::cycle, "cycle"},
    {Family::star, "star"},
    {Family::complete, "complete"},
    {Family::tree, "tree"},
    {Family::forest, "forest"},
    {Family::chordal, "chordal"},
    {Family::bipartite_vd, "bipartite_vd"},
    {Family::gnp, "gnp"},
}};

constexpr std::string_view kWhiskerPrefix = "whisker-of:";

constexpr int kBipartiteAttempts = 2000;

Graph random_chordal(int n, Rng& rng) {
  if (n <= 1) return Graph(n);
  const Graph host = random_tree(n, rng);
  const int max_size = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(std::max(1, n / 2))));
  std::vector<VertexSet> subtree;
  for (int v = 0; v < n; ++v) {
    VertexSet s = VertexSet::single(static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n))));
    const int target = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_size)));
    while (s.size() < target) {
      const std::vector<Vertex> frontier = (host.neighborhood_of(s) - s).members();
      if (frontier.empty()) break;
      s = s.with(frontier[uniform_below(rng, frontier.size())]);
    }
    subtree.push_back(s);
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (subtree[u].intersects(subtree[v])) edges.emplace_back(u, v);
  Graph g(n, edges);
  if (!is_chordal(g)) throw std::logic_error("subtree intersection graph failed the chordality check");
  return g;
}

Graph random_bipartite_vd(int n, Rng& rng, const Limits& limits) {
  for (int attempt = 0; attempt < kBipartiteAttempts; ++attempt) {
    const double p = 0.15 + 0.5 * uniform_unit(rng);
    Graph g = random_bipartite(n, p, rng);
    if (is_vertex_decomposable(g, limits).decomposable) return g;
  }
  throw ResourceError("bipartite_vd rejection sampling gave up after " + std::to_string(kBipartiteAttempts) +
                      " attempts");
}

}  // namespace

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& [f, s] : kNames)
    if (s == name) return f;
  return std::nullopt;
}

std::string family_name(Family f) {
  for (const auto& [g, s] : kNames)
    if (g == f) return std::string(s);
  return "?";
}

std::optional<GeneratorSpec> parse_generator(std::string_view name, int n, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.n = n;
  spec.seed = seed;
  if (name.starts_with(kWhiskerPrefix)) {
    spec.whisker = true;
    name.remove_prefix(kWhiskerPrefix.size());
  }
  const auto f = family_from_name(name);
  if (!f) return std::nullopt;
  spec.family = *f;
  return spec;
}

std::string generator_name(const GeneratorSpec& spec) {
  return (spec.whisker ? std::string(kWhiskerPrefix) : std::string()) + family_name(spec.family);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

double uniform_unit(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph(n, e);
}

Graph star_graph(int n) {
  std::vector<Edge> e;
  for (int v = 1; v < n; ++v) e.emplace_back(0, v);
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph whisker(const Graph& base) {
  const int n = base.order();
  if (2 * n > kMaxVertices) throw InputError("whiskered graph would exceed 64 vertices");
  std::vector<Edge> e(base.edges().begin(), base.edges().end());
  for (int v = 0; v < n; ++v) e.emplace_back(v, n + v);
  return Graph(2 * n, e);
}

Graph random_tree(int n, Rng& rng) {
  if (n <= 1) return Graph(n);
  if (n == 2) return Graph(2, {{0, 1}});
  std::vector<int> pruefer(static_cast<std::size_t>(n - 2));
  for (int& x : pruefer) x = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int x : pruefer) ++degree[x];
  std::vector<Edge> edges;
  for (int x : pruefer) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, x);
    --degree[leaf];
    --degree[x];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1) (a < 0 ? a : b) = v;
  edges.emplace_back(a, b);
  return Graph(n, edges);
}

Graph random_gnp(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph random_bipartite(int n, double p, Rng& rng) {
  VertexSet left;
  for (int v = 0; v < n; ++v)
    if (rng() & 1u) left = left.with(v);
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (left.contains(u) != left.contains(v) && uniform_unit(rng) < p) e.emplace_back(u, v);
  return Graph(n, e);
}

Graph generate(const GeneratorSpec& spec, const Limits& limits) {
  if (spec.n < 0 || spec.n > kMaxVertices) throw InputError("generator size must lie in [0, 64]");
  Rng rng(spec.seed);
  Graph base;
  switch (spec.family) {
    case Family::path: base = path_graph(spec.n); break;
    case Family::cycle: base = cycle_graph(spec.n); break;
    case Family::star: base = star_graph(spec.n); break;
    case Family::complete: base = complete_graph(spec.n); break;
    case Family::tree: base = random_tree(spec.n, rng); break;
    case Family::forest: {
      if (spec.n >= kMaxVertices) throw InputError("forest size must be below 64");
      const Graph t = random_tree(spec.n + 1, rng);
      base = induced_subgraph(t, VertexSet::full(spec.n)).graph;
      break;
    }
    case Family::chordal: base = random_chordal(spec.n, rng); break;
    case Family::bipartite_vd: base = random_bipartite_vd(spec.n, rng, limits); break;
    case Family::gnp: base = random_gnp(spec.n, 0.1 + 0.6 * uniform_unit(rng), rng); break;
  }
  return spec.whisker ? whisker(base) : base;
}

}  // namespace edgeideal
