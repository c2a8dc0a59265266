#pragma once

#include <array>
#include <optional>
#include <vector>

#include "edgeideal/config.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

/// One node of a vertex-decomposition tree. `support` is a vertex subset of
/// the host graph; internal nodes name the shedding vertex and the indices of
/// the children for support - {x} and support - N[x]. Leaves have no edges.
struct DecompositionStep {
  VertexSet support;
  std::optional<Vertex> shedding;
  int deletion = -1;
  int link = -1;
};

/// Tree rooted at steps[0].
struct DecompositionCertificate {
  std::vector<DecompositionStep> steps;
};

struct DecomposabilityResult {
  bool decomposable = false;
  std::optional<DecompositionCertificate> certificate;
};

struct DecomposabilityOptions {
  bool memoize = true;
};

bool is_shedding_vertex(const Graph& g, Vertex x, const Limits& limits = {});
/// Shedding test on the induced subgraph g[within], host labels throughout.
bool is_shedding_vertex(const Graph& g, VertexSet within, Vertex x, const Limits& limits = {});

/// Recursive vertex decomposability; candidates are tried in ascending id and
/// the first success is recorded. Subproblems are keyed by their host vertex
/// subset. Throws ResourceError past limits.decomposition_cutoff.
DecomposabilityResult is_vertex_decomposable(const Graph& g, const Limits& limits = {},
                                             DecomposabilityOptions options = {});

/// Re-checks every shedding condition and every leaf of a certificate without
/// consulting the search that produced it.
bool replay_certificate(const Graph& g, const DecompositionCertificate& cert, const Limits& limits = {});

/// Which graphs count as containing a pentagon. The regularity and
/// projective-dimension equalities for vertex decomposable graphs need the
/// stronger hypothesis (no 5-cycle at all); with only induced pentagons
/// excluded they already fail on six vertices.
enum class C5Mode {
  subgraph,  ///< any 5-cycle, chords allowed
  induced,   ///< an induced 5-cycle
};

struct C5Result {
  bool free = true;
  /// Cycle order of the first pentagon found when !free.
  std::optional<std::array<Vertex, 5>> witness;
};

C5Result is_c5_free(const Graph& g, C5Mode mode = C5Mode::subgraph);

bool is_chordal(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_forest(const Graph& g);

/// Smallest y in N(x) with N[y] contained in N[x], if any.
std::optional<Vertex> dominated_neighbor(const Graph& g, Vertex x);

}  // namespace edgeideal
