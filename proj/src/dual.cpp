#include "edgeideal/dual.hpp"

#include <algorithm>

#include "edgeideal/errors.hpp"

namespace edgeideal {
namespace {

void same_ring(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b) {
  if (a.variables() != b.variables()) throw InputError("ideals live in different polynomial rings");
}

}  // namespace

SquarefreeMonomialIdeal ideal_sum(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b) {
  same_ring(a, b);
  std::vector<VertexSet> gens = a.supports();
  const auto more = b.supports();
  gens.insert(gens.end(), more.begin(), more.end());
  return SquarefreeMonomialIdeal::from_supports(a.variables(), std::move(gens));
}

SquarefreeMonomialIdeal ideal_intersection(const SquarefreeMonomialIdeal& a, const SquarefreeMonomialIdeal& b) {
  same_ring(a, b);
  std::vector<VertexSet> gens;
  for (VertexSet p : a.supports())
    for (VertexSet q : b.supports()) gens.push_back(p | q);
  return SquarefreeMonomialIdeal::from_supports(a.variables(), minimal_elements(std::move(gens)));
}

SquarefreeMonomialIdeal ideal_times_monomial(const SquarefreeMonomialIdeal& ideal, VertexSet m) {
  std::vector<VertexSet> gens;
  for (VertexSet p : ideal.supports()) gens.push_back(p | m);
  return SquarefreeMonomialIdeal::from_supports(ideal.variables(), std::move(gens));
}

SquarefreeMonomialIdeal ideal_times_disjoint_monomial(const SquarefreeMonomialIdeal& ideal, VertexSet m) {
  for (VertexSet p : ideal.generators())
    if (p.intersects(m)) throw DomainError("monomial shares variables with a generator");
  return ideal_times_monomial(ideal, m);
}

SquarefreeMonomialIdeal prime_of(int n, VertexSet c) {
  std::vector<VertexSet> gens;
  for (Vertex v : c) gens.push_back(VertexSet::single(v));
  return SquarefreeMonomialIdeal::from_supports(n, std::move(gens));
}

SquarefreeMonomialIdeal alexander_dual(const SquarefreeMonomialIdeal& ideal) {
  const int n = ideal.variables();
  SquarefreeMonomialIdeal acc = SquarefreeMonomialIdeal::unit(n);
  for (VertexSet g : ideal.supports()) acc = ideal_intersection(acc, prime_of(n, g));
  return acc;
}

SquarefreeMonomialIdeal lift_ideal(const SquarefreeMonomialIdeal& local, const InducedSubgraph& sub, int host_n) {
  if (local.is_unit()) return SquarefreeMonomialIdeal::unit(host_n);
  std::vector<VertexSet> gens;
  for (VertexSet g : local.generators()) gens.push_back(sub.lift(g));
  return SquarefreeMonomialIdeal::from_supports(host_n, std::move(gens));
}

CoverIdeal alexander_dual_of_edge_ideal(const Graph& g, const Limits& limits) {
  CoverIdeal out;
  out.covers = minimal_vertex_covers(g, limits);
  std::sort(out.covers.begin(), out.covers.end());
  out.ideal = SquarefreeMonomialIdeal::from_supports(g.order(), out.covers);
  return out;
}

bool decomposition_identity_check(const Graph& g, Vertex x, const Limits& limits) {
  const VertexSet nbrs = neighbors(g, x);
  if (nbrs.empty()) throw DomainError("decomposition identity needs a vertex with at least one neighbor");
  const int n = g.order();
  const InducedSubgraph deletion = delete_vertex(g, x);
  const InducedSubgraph link = delete_closed_neighborhood(g, x);
  const auto dual_g = alexander_dual_of_edge_ideal(g, limits).ideal;
  const auto dual_deletion = lift_ideal(alexander_dual_of_edge_ideal(deletion.graph, limits).ideal, deletion, n);
  const auto dual_link = lift_ideal(alexander_dual_of_edge_ideal(link.graph, limits).ideal, link, n);

  const VertexSet xs = VertexSet::single(x);
  const auto x_part = ideal_times_disjoint_monomial(dual_deletion, xs);
  const auto y_part = ideal_times_disjoint_monomial(dual_link, nbrs);
  const bool sum_holds = dual_g == ideal_sum(x_part, y_part);
  const auto xy_part = ideal_times_disjoint_monomial(dual_link, nbrs.with(x));
  const bool intersection_holds = xy_part == ideal_intersection(x_part, y_part);
  return sum_holds && intersection_holds;
}

bool primary_decomposition_check(const Graph& g, const Limits& limits) {
  const int n = g.order();
  SquarefreeMonomialIdeal acc = SquarefreeMonomialIdeal::unit(n);
  for (VertexSet c : minimal_vertex_covers(g, limits)) acc = ideal_intersection(acc, prime_of(n, c));
  return acc == ideal_of_graph(g);
}

bool double_dual_check(const Graph& g, const Limits& limits) {
  return alexander_dual(alexander_dual_of_edge_ideal(g, limits).ideal) == ideal_of_graph(g);
}

int ideal_projective_dimension(const SquarefreeMonomialIdeal& ideal, Field field, const Limits& limits,
                               Execution exec) {
  if (ideal.is_unit()) return 0;
  if (ideal.is_zero()) throw DomainError("projective dimension of the zero ideal");
  return hochster_betti_table(ideal, field, limits, exec).projective_dimension() - 1;
}

int ideal_regularity(const SquarefreeMonomialIdeal& ideal, Field field, const Limits& limits, Execution exec) {
  if (ideal.is_unit()) return 0;
  if (ideal.is_zero()) throw DomainError("regularity of the zero ideal");
  return hochster_betti_table(ideal, field, limits, exec).regularity() + 1;
}

TeraiResult terai_check(const Graph& g, Field field, const Limits& limits, Execution exec) {
  TeraiResult r;
  r.pd_dual = ideal_projective_dimension(alexander_dual_of_edge_ideal(g, limits).ideal, field, limits, exec);
  r.reg_quotient = hochster_betti_table(ideal_of_graph(g), field, limits, exec).regularity();
  r.holds = r.pd_dual == r.reg_quotient;
  return r;
}

DualBoundsResult dual_bounds_check(const Graph& g, Vertex x, Field field, const Limits& limits, Execution exec) {
  DualBoundsResult r;
  r.degree = neighbors(g, x).size();
  const int n = g.order();
  const InducedSubgraph deletion = delete_vertex(g, x);
  const InducedSubgraph link = delete_closed_neighborhood(g, x);
  const auto dual = alexander_dual_of_edge_ideal(g, limits).ideal;
  const auto dual_deletion = lift_ideal(alexander_dual_of_edge_ideal(deletion.graph, limits).ideal, deletion, n);
  const auto dual_link = lift_ideal(alexander_dual_of_edge_ideal(link.graph, limits).ideal, link, n);
  r.pd_dual = ideal_projective_dimension(dual, field, limits, exec);
  r.pd_deletion = ideal_projective_dimension(dual_deletion, field, limits, exec);
  r.pd_link = ideal_projective_dimension(dual_link, field, limits, exec);
  r.reg_dual = ideal_regularity(dual, field, limits, exec);
  r.reg_deletion = ideal_regularity(dual_deletion, field, limits, exec);
  r.reg_link = ideal_regularity(dual_link, field, limits, exec);
  r.pd_bound = r.pd_dual <= std::max(r.pd_deletion, r.pd_link + 1);
  r.reg_bound = r.reg_dual <= std::max(r.reg_deletion + 1, r.reg_link + r.degree);
  return r;
}

}  // namespace edgeideal
