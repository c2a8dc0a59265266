#include <doctest.h>

#include <random>

#include "edgeideal/dual.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/generators.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

const Field QQ = Field::rationals();
const Graph kK2(2, {{0, 1}});
const Graph kP4 = path_graph(4);
const Graph kStar = star_graph(4);
const Graph kC3 = cycle_graph(3);
const Graph kC5 = cycle_graph(5);

SquarefreeMonomialIdeal ideal(int n, std::initializer_list<std::initializer_list<Vertex>> gens) {
  std::vector<VertexSet> s;
  for (auto g : gens) s.push_back(VertexSet::of(g));
  return SquarefreeMonomialIdeal::from_supports(n, s);
}

}  // namespace

TEST_CASE("ideal arithmetic") {
  const auto a = ideal(3, {{0}}), b = ideal(3, {{1}});
  CHECK(ideal_sum(a, b) == ideal(3, {{0}, {1}}));
  CHECK(ideal_intersection(a, b) == ideal(3, {{0, 1}}));
  CHECK(ideal_times_monomial(b, VertexSet::of({0})) == ideal(3, {{0, 1}}));
  CHECK_THROWS_AS(ideal_times_disjoint_monomial(b, VertexSet::of({1})), DomainError);
  CHECK(ideal_sum(SquarefreeMonomialIdeal::zero(3), a) == a);
  CHECK(ideal_intersection(SquarefreeMonomialIdeal::unit(3), a) == a);
  CHECK(ideal_intersection(SquarefreeMonomialIdeal::zero(3), a).is_zero());
  CHECK(prime_of(3, VertexSet::of({0, 2})) == ideal(3, {{0}, {2}}));
  CHECK(prime_of(3, VertexSet{}).is_zero());
  CHECK(alexander_dual(SquarefreeMonomialIdeal::zero(2)).is_unit());
  CHECK(alexander_dual(SquarefreeMonomialIdeal::unit(2)).is_zero());
  CHECK(alexander_dual(ideal(2, {{0, 1}})) == ideal(2, {{0}, {1}}));
}

TEST_CASE("cover ideals") {
  CHECK(alexander_dual_of_edge_ideal(kK2).ideal == ideal(2, {{0}, {1}}));
  CHECK(alexander_dual_of_edge_ideal(kP4).ideal == ideal(4, {{1, 3}, {1, 2}, {0, 2}}));
  CHECK(alexander_dual_of_edge_ideal(kStar).ideal == ideal(4, {{0}, {1, 2, 3}}));
  const auto edgeless = alexander_dual_of_edge_ideal(Graph(3));
  CHECK(edgeless.ideal.is_unit());
  CHECK(edgeless.covers == std::vector<VertexSet>{VertexSet{}});
  const auto p4 = alexander_dual_of_edge_ideal(kP4);
  CHECK(p4.covers.size() == p4.ideal.generators().size());
}

TEST_CASE("decomposition identity, primary decomposition, double dual") {
  CHECK(decomposition_identity_check(kK2, 0));
  CHECK(decomposition_identity_check(kP4, 1));
  CHECK(decomposition_identity_check(kC5, 0));
  CHECK_THROWS_AS(decomposition_identity_check(Graph(3, {{0, 1}}), 2), DomainError);
  CHECK(primary_decomposition_check(kK2));
  CHECK(primary_decomposition_check(kC3));
  CHECK(primary_decomposition_check(kP4));
  CHECK(double_dual_check(kC5));
  CHECK(double_dual_check(Graph(2)));
}

TEST_CASE("Terai duality examples") {
  const auto k2 = terai_check(kK2, QQ);
  CHECK(k2.pd_dual == 1);
  CHECK(k2.reg_quotient == 1);
  CHECK(k2.holds);
  const auto c5 = terai_check(kC5, QQ);
  CHECK(c5.pd_dual == 2);
  CHECK(c5.reg_quotient == 2);
  CHECK(c5.holds);
  const auto edgeless = terai_check(Graph(2), QQ);
  CHECK(edgeless.pd_dual == 0);
  CHECK(edgeless.reg_quotient == 0);
  CHECK(edgeless.holds);
  CHECK(ideal_projective_dimension(SquarefreeMonomialIdeal::unit(2), QQ) == 0);
  CHECK(ideal_regularity(SquarefreeMonomialIdeal::unit(2), QQ) == 0);
  CHECK(ideal_regularity(ideal(2, {{0}, {1}}), QQ) == 1);
  CHECK_THROWS_AS(ideal_regularity(SquarefreeMonomialIdeal::zero(2), QQ), DomainError);
}

TEST_CASE("property: dual identities on every graph up to 5 vertices and seeded graphs up to 8") {
  auto check = [](const Graph& g, Field f) {
    for (Vertex x : g.vertices()) {
      if (neighbors(g, x).empty()) continue;
      CHECK(decomposition_identity_check(g, x));
    }
    CHECK(primary_decomposition_check(g));
    CHECK(double_dual_check(g));
    const auto t = terai_check(g, f);
    CHECK(t.holds);
    const auto cover = alexander_dual_of_edge_ideal(g).ideal;
    const auto quotient = hochster_betti_table(ideal_of_graph(g), f);
    CHECK(quotient.projective_dimension() == ideal_regularity(cover, f));
    if (!cover.is_unit()) {
      const auto dual_table = hochster_betti_table(cover, f);
      CHECK(ideal_projective_dimension(cover, f) == dual_table.projective_dimension() - 1);
    }
    for (Vertex x : g.vertices()) {
      const auto b = dual_bounds_check(g, x, f);
      CHECK(b.pd_bound);
      CHECK(b.reg_bound);
    }
    // the cover ideal's generators are exactly the brute-force minimal covers
    std::vector<std::uint64_t> gens;
    for (VertexSet c : alexander_dual_of_edge_ideal(g).covers) gens.push_back(c.bits());
    std::sort(gens.begin(), gens.end());
    CHECK(gens == oracle::minimal_covers(g));
  };
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
      check(oracle::from_mask(n, mask), QQ);
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(6 + trial % 3, 0.3, rng);
    check(g, trial % 2 ? QQ : Field::of_characteristic(2));
  }
}
