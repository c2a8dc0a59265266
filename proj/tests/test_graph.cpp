#include <doctest.h>

#include <random>
#include <sstream>

#include "edgeideal/edge_list.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/graph.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

std::vector<std::uint64_t> bits_of(const std::vector<VertexSet>& sets) {
  std::vector<std::uint64_t> out;
  for (VertexSet s : sets) out.push_back(s.bits());
  return out;
}

const Graph kK2(2, {{0, 1}});
const Graph kP3(3, {{0, 1}, {1, 2}});
const Graph kP4 = path_graph(4);
const Graph kStar = star_graph(4);
const Graph kC4 = cycle_graph(4);
const Graph kC5 = cycle_graph(5);

}  // namespace

TEST_CASE("vertex sets behave like bitsets") {
  VertexSet s = VertexSet::of({3, 1, 5});
  CHECK(s.size() == 3);
  CHECK(s.min() == 1);
  CHECK(s.max() == 5);
  CHECK(s.members() == std::vector<Vertex>{1, 3, 5});
  CHECK((s - VertexSet::single(3)) == VertexSet::of({1, 5}));
  CHECK(VertexSet::of({1, 5}).subset_of(s));
  CHECK_FALSE(s.subset_of(VertexSet::of({1, 5})));
  CHECK(VertexSet::full(64).size() == 64);
  CHECK(VertexSet::full(0).empty());
}

TEST_CASE("graph construction validates edges") {
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InputError);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InputError);
  CHECK_THROWS_AS(Graph(65), InputError);
  const Graph g(3, {{2, 0}});
  REQUIRE(g.size() == 1);
  CHECK(g.edges()[0].u == 0);
  CHECK(g.edges()[0].v == 2);
}

TEST_CASE("neighborhoods") {
  CHECK(neighbors(kP3, 1) == VertexSet::of({0, 2}));
  CHECK(neighbors(kK2, 0) == VertexSet::of({1}));
  CHECK(neighbors(kStar, 0) == VertexSet::of({1, 2, 3}));
  CHECK(closed_neighborhood(kK2, 0) == VertexSet::of({0, 1}));
  CHECK(closed_neighborhood(Graph(3), 2) == VertexSet::of({2}));
  CHECK(closed_neighborhood(kC4, 0) == VertexSet::of({0, 1, 3}));
  CHECK_THROWS_AS(neighbors(kK2, 2), InputError);
  CHECK_THROWS_AS(closed_neighborhood(kK2, -1), InputError);
}

TEST_CASE("induced subgraphs relabel in ascending order") {
  const InducedSubgraph sub = induced_subgraph(kC5, VertexSet::of({0, 1, 3}));
  CHECK(sub.original == std::vector<Vertex>{0, 1, 3});
  CHECK(sub.graph.order() == 3);
  CHECK(sub.graph.edges() == std::vector<Edge>{Edge(0, 1)});
  CHECK(sub.lift(VertexSet::of({2})) == VertexSet::of({3}));

  const InducedSubgraph all = induced_subgraph(kC5, VertexSet::full(5));
  CHECK(all.graph == kC5);
  CHECK(all.original == std::vector<Vertex>{0, 1, 2, 3, 4});

  CHECK(induced_subgraph(kP4, VertexSet::of({0, 3})).graph == Graph(2));
}

TEST_CASE("vertex and closed-neighborhood deletion") {
  CHECK(delete_vertex(kC5, 0).graph == kP4);
  CHECK(delete_vertex(kK2, 1).graph == Graph(1));
  CHECK(delete_vertex(kStar, 0).graph == Graph(3));
  CHECK(delete_closed_neighborhood(kC5, 0).graph == kK2);
  CHECK(delete_closed_neighborhood(kC5, 0).original == std::vector<Vertex>{2, 3});
  CHECK(delete_closed_neighborhood(kC4, 0).graph == Graph(1));
  CHECK(delete_closed_neighborhood(kK2, 0).graph == Graph(0));
  CHECK_THROWS_AS(delete_vertex(kK2, 5), InputError);
}

TEST_CASE("maximal independent sets and minimal vertex covers") {
  CHECK(bits_of(maximal_independent_sets(kK2)) == std::vector<std::uint64_t>{0b01, 0b10});
  CHECK(bits_of(maximal_independent_sets(kP4)) == std::vector<std::uint64_t>{0b0101, 0b1001, 0b1010});
  CHECK(bits_of(maximal_independent_sets(Graph(3))) == std::vector<std::uint64_t>{0b111});
  CHECK(bits_of(maximal_independent_sets(Graph(0))) == std::vector<std::uint64_t>{0});

  CHECK(bits_of(minimal_vertex_covers(kK2)) == std::vector<std::uint64_t>{0b10, 0b01});  // complements, in MIS order
  CHECK(bits_of(minimal_vertex_covers(kP4)) == std::vector<std::uint64_t>{0b1010, 0b0110, 0b0101});
  const auto p4 = minimal_vertex_covers(kP4);
  CHECK(p4.size() == 3);
  for (VertexSet c : {VertexSet::of({1, 3}), VertexSet::of({1, 2}), VertexSet::of({0, 2})})
    CHECK(std::find(p4.begin(), p4.end(), c) != p4.end());
  const auto star = minimal_vertex_covers(kStar);
  CHECK(star.size() == 2);
  CHECK(std::find(star.begin(), star.end(), VertexSet::of({0})) != star.end());
  CHECK(std::find(star.begin(), star.end(), VertexSet::of({1, 2, 3})) != star.end());
}

TEST_CASE("enumeration cutoff") {
  Limits tight;
  tight.enumeration_cutoff = 4;
  CHECK_THROWS_AS(maximal_independent_sets(kC5, tight), ResourceError);
  CHECK_NOTHROW(maximal_independent_sets(kP4, tight));
}

TEST_CASE("connected components") {
  const Graph two(4, {{0, 1}, {2, 3}});
  CHECK(connected_components(two) == std::vector<VertexSet>{VertexSet::of({0, 1}), VertexSet::of({2, 3})});
  CHECK(connected_components(kC5) == std::vector<VertexSet>{VertexSet::full(5)});
  CHECK(connected_components(Graph(2)) == std::vector<VertexSet>{VertexSet::of({0}), VertexSet::of({1})});
  CHECK(connected_components(Graph(0)).empty());
}

TEST_CASE("property: enumeration agrees with subset scans") {
  std::mt19937_64 rng(11);
  auto check = [](const Graph& g) {
    const auto mis = maximal_independent_sets(g);
    CHECK(bits_of(mis) == oracle::maximal_independent(g));
    std::vector<std::uint64_t> covers = bits_of(minimal_vertex_covers(g));
    std::sort(covers.begin(), covers.end());
    CHECK(covers == oracle::minimal_covers(g));
    // complement duality
    for (VertexSet f : mis) {
      CHECK(g.is_independent(f));
      for (Vertex v : (g.vertices() - f)) CHECK_FALSE(g.is_independent(f.with(v)));
      const VertexSet c = g.vertices() - f;
      CHECK(std::binary_search(covers.begin(), covers.end(), c.bits()));
    }
    for (Vertex x : g.vertices()) {
      CHECK(delete_closed_neighborhood(g, x).graph ==
            induced_subgraph(g, g.vertices() - closed_neighborhood(g, x)).graph);
      CHECK(delete_vertex(g, x).graph == induced_subgraph(g, g.vertices().without(x)).graph);
    }
    CHECK(induced_subgraph(g, g.vertices()).graph == g);
  };
  for (int n = 0; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask)
      check(oracle::from_mask(n, mask));
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 6 + trial % 3;
    check(oracle::random_graph(n, 0.2 + 0.1 * (trial % 6), rng));
  }
}

TEST_CASE("edge-list parsing") {
  CHECK(parse_edge_list("2\n0 1\n") == kK2);
  CHECK(parse_edge_list("# comment\n\n3\n# another\n1 2\n0 1\n") == kP3);
  CHECK(parse_edge_list("0\n") == Graph(0));

  auto line_of = [](std::string_view text) -> std::size_t {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("2\n0 0\n") == 2);
  CHECK(line_of("2\n0 1\n0 1\n") == 3);
  CHECK(line_of("2\n0 1\n1 0\n") == 3);
  CHECK(line_of("2\n0 2\n") == 2);
  CHECK(line_of("# x\n2\n0 -1\n") == 3);
  CHECK(line_of("2\n0 x\n") == 2);
  CHECK(line_of("2\n0 1 2\n") == 2);
  CHECK(line_of("two\n") == 1);
  CHECK(line_of("") != 0);
  CHECK(line_of("# only comments\n") != 0);
  CHECK(line_of("65\n") == 1);
}

TEST_CASE("edge-list round trip is bit exact") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.3, rng);
    const std::string text = format_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(format_edge_list(parse_edge_list(text)) == text);
  }
  CHECK(format_edge_list(kP3) == "3\n0 1\n1 2\n");
}
