#pragma once

#include <vector>

#include "edgeideal/config.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/vertex_set.hpp"

namespace edgeideal {

/// Faces grouped by cardinality: layers[k] holds the faces with k vertices,
/// ascending by bitmask. layers[0] is {empty face} unless the complex is void.
using FaceLayers = std::vector<std::vector<VertexSet>>;

/// Simplicial complex on 0..n-1 given by its facets (an antichain, ascending by
/// bitmask). No facets at all is the void complex; a single empty facet is the
/// irrelevant complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps only the inclusion-maximal members of `faces`.
  SimplicialComplex(int n, std::vector<VertexSet> faces);

  int vertex_count() const { return n_; }
  const std::vector<VertexSet>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; -2 for the void complex.
  int dimension() const;
  bool contains_face(VertexSet f) const;

  /// Throws ResourceError when the face count would exceed limits.face_budget.
  FaceLayers faces(const Limits& limits = {}) const;
  SimplicialComplex induced(VertexSet w) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> facets_;
};

/// Squarefree monomial ideal in k[x_0..x_{n-1}], stored by the supports of its
/// minimal generators (an antichain, ascending by bitmask).
class SquarefreeMonomialIdeal {
 public:
  SquarefreeMonomialIdeal() = default;

  static SquarefreeMonomialIdeal zero(int n);
  static SquarefreeMonomialIdeal unit(int n);
  /// Minimalizes; an empty support among the inputs yields the unit ideal.
  static SquarefreeMonomialIdeal from_supports(int n, std::vector<VertexSet> supports);

  int variables() const { return n_; }
  /// Empty for both the zero and the unit ideal.
  const std::vector<VertexSet>& generators() const { return gens_; }
  /// Like generators(), but the unit ideal reports the single empty support.
  std::vector<VertexSet> supports() const;
  bool is_unit() const { return unit_; }
  bool is_zero() const { return !unit_ && gens_.empty(); }

  /// Membership of the squarefree monomial x^m.
  bool contains(VertexSet m) const;

  friend bool operator==(const SquarefreeMonomialIdeal&, const SquarefreeMonomialIdeal&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> gens_;
  bool unit_ = false;
};

/// Keep the inclusion-minimal members, dropping duplicates; result ascending.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);
/// Keep the inclusion-maximal members, dropping duplicates; result ascending.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets);

SquarefreeMonomialIdeal ideal_of_graph(const Graph& g);
SimplicialComplex independence_complex(const Graph& g, const Limits& limits = {});
/// Throws DomainError for the unit ideal (its complex is void).
SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal, const Limits& limits = {});

/// Faces of the Stanley-Reisner complex of `ideal` lying inside `within`.
FaceLayers stanley_reisner_faces(const SquarefreeMonomialIdeal& ideal, VertexSet within,
                                 const Limits& limits = {});

}  // namespace edgeideal
