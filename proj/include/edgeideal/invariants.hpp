#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "edgeideal/config.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

/// A star subgraph: root z joined to each flower.
struct Bouquet {
  Vertex root = 0;
  VertexSet flowers;

  friend bool operator==(const Bouquet&, const Bouquet&) = default;
};

/// A set of bouquets inside a host graph, ascending by root.
struct BouquetFamily {
  std::vector<Bouquet> bouquets;

  VertexSet roots() const;    // R(B)
  VertexSet flowers() const;  // F(B)
  std::vector<Edge> stems() const;  // S(B), sorted

  friend bool operator==(const BouquetFamily&, const BouquetFamily&) = default;
};

struct BouquetOptimum {
  int value = 0;
  BouquetFamily witness;
};

struct EdgeSetOptimum {
  int value = 0;
  std::vector<Edge> witness;
};

/// Edges e, f are 3-disjoint when they share no vertex and the subgraph induced
/// on their four ends has only e and f. Throws InputError if either is not an edge.
bool three_disjoint(const Graph& g, const Edge& e, const Edge& f);
bool is_pairwise_three_disjoint(const Graph& g, std::span<const Edge> edges);

/// c_G: maximum pairwise 3-disjoint edge set, as a maximum clique of the
/// 3-disjointness relation on E(G).
EdgeSetOptimum c_number(const Graph& g, const Limits& limits = {});

/// Roots nonempty-flowered, flowers adjacent to their root, vertex sets disjoint.
bool is_bouquet_family(const Graph& g, const BouquetFamily& family);
/// Bouquet family whose root set is independent.
bool is_semi_strongly_disjoint(const Graph& g, const BouquetFamily& family);
/// A choice of one stem per bouquet, pairwise 3-disjoint, if one exists.
std::optional<std::vector<Edge>> strong_stem_system(const Graph& g, const BouquetFamily& family);
bool is_strongly_disjoint(const Graph& g, const BouquetFamily& family);

// The optimum families below are tie-broken to the smallest (roots bitmask,
// flowers bitmask).

/// d_G: best strongly disjoint family. Searches independent root sets Z that
/// admit a 3-disjoint stem system; such a Z supports every vertex of N(Z).
BouquetOptimum d_number(const Graph& g, const Limits& limits = {});

enum class DPrimeEngine {
  matching,     ///< independent roots Z with a Z-saturating matching into N(Z)
  brute_force,  ///< literal enumeration of bouquet families
};

/// d'_G: best semi-strongly disjoint family.
BouquetOptimum d_prime_number(const Graph& g, const Limits& limits = {},
                              DPrimeEngine engine = DPrimeEngine::matching);

/// Literal enumeration of root sets and flower assignments, checking the
/// strongly disjoint clauses directly.
BouquetOptimum d_number_brute_force(const Graph& g, const Limits& limits = {});

/// Largest minimal vertex cover.
int bight(const Graph& g, const Limits& limits = {});

bool is_vertex_cover(const Graph& g, VertexSet c);
bool is_minimal_vertex_cover(const Graph& g, VertexSet c);
bool is_dominating_set(const Graph& g, VertexSet a);

/// gamma(G). The edgeless graph on n vertices has gamma = n.
int domination_number(const Graph& g, const Limits& limits = {});

/// How a vertex counts as dominated by an edge set F.
enum class EdgewiseReading {
  open,    ///< v has a neighbor among the endpoints of F
  closed,  ///< v is an endpoint of F or has a neighbor among them
};

bool is_edgewise_dominant(const Graph& g, std::span<const Edge> edges,
                          EdgewiseReading reading = EdgewiseReading::open);
/// epsilon(G). Throws DomainError when g has an isolated vertex.
int edgewise_domination_number(const Graph& g, const Limits& limits = {},
                               EdgewiseReading reading = EdgewiseReading::open);

bool is_unmixed(const Graph& g, const Limits& limits = {});
/// (smallest, largest) maximal independent set size.
std::pair<int, int> min_max_maximal_independent(const Graph& g, const Limits& limits = {});

}  // namespace edgeideal
