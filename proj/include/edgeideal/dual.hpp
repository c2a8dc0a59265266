#pragma once

#include <vector>

#include "edgeideal/complex.hpp"
#include "edgeideal/config.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"

namespace edgeideal {

// Squarefree ideal arithmetic. Every result is minimalized, so ideal equality
// is equality of generator antichains.

SquarefreeMonomialIdeal ideal_sum(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b);
/// Generators are pairwise lcms (unions of supports).
SquarefreeMonomialIdeal ideal_intersection(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b);
/// x^m * I with supports unioned.
SquarefreeMonomialIdeal ideal_times_monomial(const SquarefreeMonomialIdeal& ideal, VertexSet m);
/// As ideal_times_monomial, but throws DomainError when m meets the support of a generator.
SquarefreeMonomialIdeal ideal_times_disjoint_monomial(const SquarefreeMonomialIdeal& ideal, VertexSet m);

/// Prime generated by the variables in c (the zero ideal for c empty).
SquarefreeMonomialIdeal prime_of(int n, VertexSet c);

/// I^vee: intersection over generators m of the prime on supp(m). The zero
/// ideal dualizes to the unit ideal and vice versa.
SquarefreeMonomialIdeal alexander_dual(const SquarefreeMonomialIdeal& ideal);

/// Re-express an ideal living on an induced subgraph in the host variables.
SquarefreeMonomialIdeal lift_ideal(const SquarefreeMonomialIdeal& local, const InducedSubgraph& sub, int host_n);

/// The cover ideal I(G)^vee; generator k is x^{covers[k]}.
struct CoverIdeal {
  SquarefreeMonomialIdeal ideal;
  std::vector<VertexSet> covers;
};

CoverIdeal alexander_dual_of_edge_ideal(const Graph& g, const Limits& limits = {});

/// Checks, with G' = G - x and G'' = G - N[x] and y = prod N(x):
///   I(G)^vee = x I(G')^vee + y I(G'')^vee   and
///   x y I(G'')^vee = x I(G')^vee  cap  y I(G'')^vee.
/// Throws DomainError for an isolated x.
bool decomposition_identity_check(const Graph& g, Vertex x, const Limits& limits = {});

/// Intersection of the primes P_C over the minimal covers C equals I(G).
bool primary_decomposition_check(const Graph& g, const Limits& limits = {});

/// (I(G)^vee)^vee = I(G).
bool double_dual_check(const Graph& g, const Limits& limits = {});

/// pd and reg of an ideal as a module. The unit ideal (R itself) has pd = reg = 0;
/// otherwise pd(I) = pd(R/I) - 1 and reg(I) = reg(R/I) + 1. The zero ideal is rejected.
int ideal_projective_dimension(const SquarefreeMonomialIdeal& ideal, Field field, const Limits& limits = {},
                               Execution exec = Execution::parallel);
int ideal_regularity(const SquarefreeMonomialIdeal& ideal, Field field, const Limits& limits = {},
                     Execution exec = Execution::parallel);

struct TeraiResult {
  int pd_dual = 0;        // pd(I(G)^vee)
  int reg_quotient = 0;   // reg(R/I(G))
  bool holds = false;
};

/// pd(I(G)^vee) = reg(R/I(G)), both sides from the Hochster oracle.
TeraiResult terai_check(const Graph& g, Field field, const Limits& limits = {},
                        Execution exec = Execution::parallel);

struct DualBoundsResult {
  int pd_dual = 0, pd_deletion = 0, pd_link = 0;
  int reg_dual = 0, reg_deletion = 0, reg_link = 0;
  int degree = 0;
  bool pd_bound = false;   // pd(I^vee) <= max(pd(I(G')^vee), pd(I(G'')^vee) + 1)
  bool reg_bound = false;  // reg(I^vee) <= max(reg(I(G')^vee) + 1, reg(I(G'')^vee) + t)
};

/// The pd/reg inequalities obtained from the short exact sequence at x.
DualBoundsResult dual_bounds_check(const Graph& g, Vertex x, Field field, const Limits& limits = {},
                                   Execution exec = Execution::parallel);

}  // namespace edgeideal
