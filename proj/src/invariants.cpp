#include "edgeideal/invariants.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <string>

#include "edgeideal/errors.hpp"
#include "edgeideal/max_clique.hpp"

namespace edgeideal {

VertexSet BouquetFamily::roots() const {
  VertexSet r;
  for (const Bouquet& b : bouquets) r = r.with(b.root);
  return r;
}

VertexSet BouquetFamily::flowers() const {
  VertexSet f;
  for (const Bouquet& b : bouquets) f |= b.flowers;
  return f;
}

std::vector<Edge> BouquetFamily::stems() const {
  std::vector<Edge> out;
  for (const Bouquet& b : bouquets)
    for (Vertex w : b.flowers) out.emplace_back(b.root, w);
  std::sort(out.begin(), out.end());
  return out;
}

bool three_disjoint(const Graph& g, const Edge& e, const Edge& f) {
  if (!g.has_edge(e) || !g.has_edge(f)) throw InputError("3-disjointness is only defined for edges");
  if (e.ends().intersects(f.ends())) return false;
  return !g.neighborhood_of(e.ends()).intersects(f.ends());
}

bool is_pairwise_three_disjoint(const Graph& g, std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j)
      if (!three_disjoint(g, edges[i], edges[j])) return false;
  return true;
}

EdgeSetOptimum c_number(const Graph& g, const Limits& limits) {
  const auto& edges = g.edges();
  const std::size_t m = edges.size();
  std::vector<std::vector<bool>> compatible(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      compatible[i][j] = compatible[j][i] = three_disjoint(g, edges[i], edges[j]);
  EdgeSetOptimum out;
  for (int k : maximum_clique(compatible, limits.search_node_budget))
    out.witness.push_back(edges[static_cast<std::size_t>(k)]);
  out.value = static_cast<int>(out.witness.size());
  return out;
}

bool is_bouquet_family(const Graph& g, const BouquetFamily& family) {
  VertexSet used;
  for (const Bouquet& b : family.bouquets) {
    if (!g.is_vertex(b.root) || b.flowers.empty() || b.flowers.contains(b.root)) return false;
    if (!b.flowers.subset_of(g.adjacency(b.root))) return false;
    const VertexSet span = b.flowers.with(b.root);
    if (span.intersects(used)) return false;
    used |= span;
  }
  return true;
}

bool is_semi_strongly_disjoint(const Graph& g, const BouquetFamily& family) {
  return is_bouquet_family(g, family) && g.is_independent(family.roots());
}

std::optional<std::vector<Edge>> strong_stem_system(const Graph& g, const BouquetFamily& family) {
  if (!is_bouquet_family(g, family)) return std::nullopt;
  std::vector<Edge> chosen;
  std::function<bool(std::size_t)> pick = [&](std::size_t k) {
    if (k == family.bouquets.size()) return true;
    const Bouquet& b = family.bouquets[k];
    for (Vertex w : b.flowers) {
      const Edge stem(b.root, w);
      const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                  [&](const Edge& e) { return three_disjoint(g, e, stem); });
      if (!ok) continue;
      chosen.push_back(stem);
      if (pick(k + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!pick(0)) return std::nullopt;
  return chosen;
}

bool is_strongly_disjoint(const Graph& g, const BouquetFamily& family) {
  return strong_stem_system(g, family).has_value();
}

namespace {

void charge(std::uint64_t& nodes, const Limits& limits, const char* what) {
  if (++nodes > limits.search_node_budget)
    throw ResourceError(std::string(what) + " exceeded the search node budget");
}

bool better(int value, VertexSet roots, VertexSet flowers, const BouquetOptimum& best, bool have) {
  if (!have) return true;
  if (value != best.value) return value > best.value;
  const VertexSet br = best.witness.roots(), bf = best.witness.flowers();
  if (roots != br) return roots < br;
  return flowers < bf;
}

// Bouquets rooted at Z, stem flower stem_of[z] for each root, remaining vertices
// of N(Z) given to their smallest adjacent root.
BouquetFamily assemble(const Graph& g, VertexSet roots, const std::array<Vertex, kMaxVertices>& stem_of) {
  BouquetFamily fam;
  std::array<VertexSet, kMaxVertices> flowers{};
  VertexSet stems;
  for (Vertex z : roots) {
    flowers[z] = VertexSet::single(stem_of[z]);
    stems = stems.with(stem_of[z]);
  }
  for (Vertex v : g.neighborhood_of(roots) - stems) {
    const Vertex z = (g.adjacency(v) & roots).min();
    flowers[z] = flowers[z].with(v);
  }
  for (Vertex z : roots) fam.bouquets.push_back({z, flowers[z]});
  return fam;
}

// Enumerates independent root sets Z in a pruned DFS; every feasible Z is
// worth |N(Z)|, and feasibility is inherited by subsets.
class RootSetSearch {
 public:
  using Feasible = std::function<bool(VertexSet, std::array<Vertex, kMaxVertices>&)>;

  RootSetSearch(const Graph& g, const Limits& limits, Feasible feasible, const char* what)
      : g_(g), limits_(limits), feasible_(std::move(feasible)), what_(what) {}

  BouquetOptimum run() {
    VertexSet candidates;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (!g_.adjacency(v).empty()) candidates = candidates.with(v);
    dfs(VertexSet{}, candidates);
    return best_;
  }

 private:
  void dfs(VertexSet z, VertexSet candidates) {
    charge(nodes_, limits_, what_);
    for (Vertex v : candidates) {
      candidates = candidates.without(v);
      const VertexSet grown = z.with(v);
      const VertexSet rest = candidates - g_.adjacency(v);
      if (have_ && g_.neighborhood_of(grown | rest).size() < best_.value) continue;
      std::array<Vertex, kMaxVertices> stem_of{};
      if (!feasible_(grown, stem_of)) continue;
      const VertexSet flowers = g_.neighborhood_of(grown);
      if (better(flowers.size(), grown, flowers, best_, have_)) {
        best_.value = flowers.size();
        best_.witness = assemble(g_, grown, stem_of);
        have_ = true;
      }
      dfs(grown, rest);
    }
  }

  const Graph& g_;
  const Limits& limits_;
  Feasible feasible_;
  const char* what_;
  BouquetOptimum best_;
  bool have_ = false;
  std::uint64_t nodes_ = 0;
};

// Z-saturating matching into N(Z) (Kuhn's augmenting paths).
bool saturating_matching(const Graph& g, VertexSet roots, std::array<Vertex, kMaxVertices>& stem_of) {
  std::array<Vertex, kMaxVertices> owner;
  owner.fill(-1);
  std::function<bool(Vertex, VertexSet&)> augment = [&](Vertex z, VertexSet& seen) {
    for (Vertex w : g.adjacency(z) - seen) {
      seen = seen.with(w);
      if (owner[w] < 0 || augment(owner[w], seen)) {
        owner[w] = z;
        return true;
      }
    }
    return false;
  };
  for (Vertex z : roots) {
    VertexSet seen;
    if (!augment(z, seen)) return false;
  }
  for (Vertex w = 0; w < g.order(); ++w)
    if (owner[w] >= 0) stem_of[owner[w]] = w;
  return true;
}

// Stems {z, w} for independent Z are pairwise 3-disjoint iff each w is a
// private neighbor of its root and the chosen w's are pairwise non-adjacent.
bool three_disjoint_stems(const Graph& g, VertexSet roots, std::array<Vertex, kMaxVertices>& stem_of) {
  std::vector<Vertex> rs = roots.members();
  std::vector<VertexSet> priv;
  for (Vertex z : rs) priv.push_back(g.adjacency(z) - g.neighborhood_of(roots.without(z)));
  std::function<bool(std::size_t, VertexSet)> pick = [&](std::size_t k, VertexSet chosen) {
    if (k == rs.size()) return true;
    for (Vertex w : priv[k] - g.neighborhood_of(chosen)) {
      stem_of[rs[k]] = w;
      if (pick(k + 1, chosen.with(w))) return true;
    }
    return false;
  };
  return pick(0, VertexSet{});
}

// Literal enumeration: every root set, every assignment of the other vertices
// to "unused" or to an adjacent root; `accept` judges each complete family.
BouquetOptimum enumerate_families(const Graph& g, const Limits& limits, bool independent_roots_only,
                                  const std::function<bool(const BouquetFamily&)>& accept,
                                  const char* what) {
  if (g.order() > 12) throw ResourceError(std::string(what) + " is limited to 12 vertices");
  BouquetOptimum best;
  bool have = false;
  std::uint64_t nodes = 0;
  const int n = g.order();
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    const VertexSet roots(bits);
    if (independent_roots_only && !g.is_independent(roots)) continue;
    const std::vector<Vertex> others = (g.vertices() - roots).members();
    std::array<VertexSet, kMaxVertices> flowers{};
    std::function<void(std::size_t)> assign = [&](std::size_t k) {
      charge(nodes, limits, what);
      if (k == others.size()) {
        BouquetFamily fam;
        VertexSet all;
        for (Vertex z : roots) {
          if (flowers[z].empty()) return;
          fam.bouquets.push_back({z, flowers[z]});
          all |= flowers[z];
        }
        if (!accept(fam)) return;
        if (better(all.size(), roots, all, best, have)) {
          best.value = all.size();
          best.witness = fam;
          have = true;
        }
        return;
      }
      // A root that can no longer receive a flower dooms the branch.
      VertexSet remaining;
      for (std::size_t t = k; t < others.size(); ++t) remaining = remaining.with(others[t]);
      for (Vertex z : roots)
        if (flowers[z].empty() && !g.adjacency(z).intersects(remaining)) return;
      const Vertex v = others[k];
      assign(k + 1);
      for (Vertex z : g.adjacency(v) & roots) {
        flowers[z] = flowers[z].with(v);
        assign(k + 1);
        flowers[z] = flowers[z].without(v);
      }
    };
    assign(0);
  }
  return best;
}

}  // namespace

BouquetOptimum d_number(const Graph& g, const Limits& limits) {
  return RootSetSearch(g, limits, [&](VertexSet z, auto& stems) { return three_disjoint_stems(g, z, stems); },
                       "d_G search")
      .run();
}

BouquetOptimum d_prime_number(const Graph& g, const Limits& limits, DPrimeEngine engine) {
  if (engine == DPrimeEngine::brute_force)
    return enumerate_families(
        g, limits, true, [](const BouquetFamily&) { return true; }, "d'_G brute force");
  return RootSetSearch(g, limits, [&](VertexSet z, auto& stems) { return saturating_matching(g, z, stems); },
                       "d'_G search")
      .run();
}

BouquetOptimum d_number_brute_force(const Graph& g, const Limits& limits) {
  // Adjacent roots can never carry 3-disjoint stems, so only independent root
  // sets are enumerated; the stem clause itself is checked literally.
  return enumerate_families(
      g, limits, true, [&](const BouquetFamily& fam) { return is_strongly_disjoint(g, fam); },
      "d_G brute force");
}

int bight(const Graph& g, const Limits& limits) {
  return g.order() - min_max_maximal_independent(g, limits).first;
}

bool is_vertex_cover(const Graph& g, VertexSet c) {
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) { return e.ends().intersects(c); });
}

bool is_minimal_vertex_cover(const Graph& g, VertexSet c) {
  if (!c.subset_of(g.vertices()) || !is_vertex_cover(g, c)) return false;
  for (Vertex v : c)
    if (is_vertex_cover(g, c.without(v))) return false;
  return true;
}

bool is_dominating_set(const Graph& g, VertexSet a) {
  return (a | g.neighborhood_of(a)) == g.vertices();
}

int domination_number(const Graph& g, const Limits& limits) {
  std::uint64_t nodes = 0;
  std::function<bool(int, VertexSet)> reach = [&](int budget, VertexSet dominated) {
    charge(nodes, limits, "domination number");
    if (dominated == g.vertices()) return true;
    if (budget == 0) return false;
    const Vertex u = (g.vertices() - dominated).min();
    for (Vertex v : g.adjacency(u).with(u))
      if (reach(budget - 1, dominated | g.adjacency(v).with(v))) return true;
    return false;
  };
  for (int k = 0;; ++k)
    if (reach(k, VertexSet{})) return k;
}

namespace {

VertexSet edge_reach(const Graph& g, const Edge& e, EdgewiseReading reading) {
  VertexSet r = g.adjacency(e.u) | g.adjacency(e.v);
  if (reading == EdgewiseReading::closed) r |= e.ends();
  return r;
}

}  // namespace

bool is_edgewise_dominant(const Graph& g, std::span<const Edge> edges, EdgewiseReading reading) {
  VertexSet covered;
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) throw InputError("edgewise domination takes edges of the graph");
    covered |= edge_reach(g, e, reading);
  }
  return covered == g.vertices();
}

int edgewise_domination_number(const Graph& g, const Limits& limits, EdgewiseReading reading) {
  if (g.has_isolated_vertex()) throw DomainError("edgewise domination is undefined with isolated vertices");
  const auto& edges = g.edges();
  std::vector<VertexSet> reach;
  for (const Edge& e : edges) reach.push_back(edge_reach(g, e, reading));
  std::uint64_t nodes = 0;
  std::function<bool(int, VertexSet)> go = [&](int budget, VertexSet dominated) {
    charge(nodes, limits, "edgewise domination number");
    if (dominated == g.vertices()) return true;
    if (budget == 0) return false;
    const Vertex u = (g.vertices() - dominated).min();
    for (std::size_t k = 0; k < edges.size(); ++k)
      if (reach[k].contains(u) && go(budget - 1, dominated | reach[k])) return true;
    return false;
  };
  for (int k = 0;; ++k)
    if (go(k, VertexSet{})) return k;
}

std::pair<int, int> min_max_maximal_independent(const Graph& g, const Limits& limits) {
  const auto sets = maximal_independent_sets(g, limits);
  int lo = g.order(), hi = 0;
  for (VertexSet s : sets) {
    lo = std::min(lo, s.size());
    hi = std::max(hi, s.size());
  }
  return {lo, hi};
}

bool is_unmixed(const Graph& g, const Limits& limits) {
  const auto [lo, hi] = min_max_maximal_independent(g, limits);
  return lo == hi;
}

}  // namespace edgeideal
