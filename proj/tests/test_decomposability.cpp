#include <doctest.h>

#include <random>

#include "edgeideal/decomposability.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/generators.hpp"
#include "oracles.hpp"

using namespace edgeideal;

namespace {

const Graph kK2(2, {{0, 1}});
const Graph kStar = star_graph(4);
const Graph kC4 = cycle_graph(4);
const Graph kC5 = cycle_graph(5);
const Graph kP4 = path_graph(4);

}  // namespace

TEST_CASE("shedding vertices") {
  CHECK(is_shedding_vertex(kK2, 0));
  CHECK(is_shedding_vertex(kStar, 0));
  CHECK_FALSE(is_shedding_vertex(kStar, 1));
  for (Vertex x = 0; x < 4; ++x) CHECK_FALSE(is_shedding_vertex(kC4, x));
  CHECK(is_shedding_vertex(kC5, 0));
  CHECK_THROWS_AS(is_shedding_vertex(kK2, 3), InputError);
}

TEST_CASE("vertex decomposability with certificates") {
  const auto edgeless = is_vertex_decomposable(Graph(4));
  CHECK(edgeless.decomposable);
  REQUIRE(edgeless.certificate.has_value());
  CHECK(edgeless.certificate->steps.size() == 1);
  CHECK_FALSE(edgeless.certificate->steps[0].shedding.has_value());

  const auto c5 = is_vertex_decomposable(kC5);
  CHECK(c5.decomposable);
  REQUIRE(c5.certificate.has_value());
  const DecompositionStep& root = c5.certificate->steps[0];
  CHECK(root.support == VertexSet::full(5));
  CHECK(root.shedding == 0);
  CHECK(c5.certificate->steps[static_cast<std::size_t>(root.deletion)].support == VertexSet::of({1, 2, 3, 4}));
  CHECK(c5.certificate->steps[static_cast<std::size_t>(root.link)].support == VertexSet::of({2, 3}));
  CHECK(replay_certificate(kC5, *c5.certificate));

  const auto c4 = is_vertex_decomposable(kC4);
  CHECK_FALSE(c4.decomposable);
  CHECK_FALSE(c4.certificate.has_value());

  Limits tight;
  tight.decomposition_cutoff = 4;
  CHECK_THROWS_AS(is_vertex_decomposable(kC5, tight), ResourceError);
}

TEST_CASE("tampered certificates fail replay") {
  auto cert = *is_vertex_decomposable(kC5).certificate;
  cert.steps[0].shedding = 1;  // children no longer match G - 1 and G - N[1]
  CHECK_FALSE(replay_certificate(kC5, cert));
  auto leaf = *is_vertex_decomposable(kP4).certificate;
  leaf.steps.resize(1);
  leaf.steps[0].shedding.reset();
  CHECK_FALSE(replay_certificate(kP4, leaf));
}

TEST_CASE("pentagon detection") {
  const auto c5 = is_c5_free(kC5);
  CHECK_FALSE(c5.free);
  REQUIRE(c5.witness.has_value());
  auto w = *c5.witness;
  std::sort(w.begin(), w.end());
  CHECK(w == std::array<Vertex, 5>{0, 1, 2, 3, 4});
  CHECK_FALSE(is_c5_free(kC5, C5Mode::induced).free);
  CHECK(is_c5_free(whisker(kC4)).free);
  CHECK(is_c5_free(whisker(kC4), C5Mode::induced).free);
  CHECK(is_c5_free(complete_graph(4)).free);
  // The house: a 5-cycle with one chord has a pentagon subgraph but no induced one.
  const Graph house(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {1, 4}});
  CHECK_FALSE(is_c5_free(house).free);
  CHECK(is_c5_free(house, C5Mode::induced).free);
}

TEST_CASE("chordal, bipartite, forest") {
  CHECK(is_chordal(path_graph(6)));
  CHECK(is_chordal(star_graph(5)));
  CHECK_FALSE(is_chordal(kC4));
  CHECK_FALSE(is_chordal(kC5));
  CHECK(is_chordal(complete_graph(5)));
  CHECK(is_bipartite(kP4));
  CHECK_FALSE(is_bipartite(kC5));
  CHECK(is_bipartite(kStar));
  CHECK(is_bipartite(Graph(0)));
  CHECK(is_forest(Graph(3, {{0, 1}})));
  CHECK_FALSE(is_forest(cycle_graph(3)));
}

TEST_CASE("dominated neighbors") {
  CHECK(dominated_neighbor(kStar, 0) == 1);
  CHECK_FALSE(dominated_neighbor(kC4, 0).has_value());
  CHECK(dominated_neighbor(kK2, 0) == 1);
  CHECK_THROWS_AS(dominated_neighbor(kK2, 2), InputError);
}

TEST_CASE("property: classifiers match definition-literal oracles on all graphs up to 6 vertices") {
  for (int n = 0; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      const auto vd = is_vertex_decomposable(g);
      if (n <= 5 || mask % 5 == 0) CHECK(vd.decomposable == oracle::vertex_decomposable(g));
      if (vd.decomposable) CHECK(replay_certificate(g, *vd.certificate));
      CHECK(is_c5_free(g, C5Mode::induced).free == oracle::induced_c5_free(g));
      CHECK(is_c5_free(g, C5Mode::subgraph).free == oracle::c5_subgraph_free(g));
      CHECK(is_chordal(g) == oracle::chordal(g));
      CHECK(is_bipartite(g) == oracle::bipartite(g));
      if (is_chordal(g)) CHECK(vd.decomposable);
      if (is_bipartite(g)) CHECK(is_c5_free(g).free);
      for (Vertex x : g.vertices()) {
        const bool shed = is_shedding_vertex(g, x);
        CHECK(shed == oracle::shedding(g, g.vertices().bits(), x));
        if (shed && is_c5_free(g).free) CHECK(dominated_neighbor(g, x).has_value());
      }
    }
  }
}

TEST_CASE("property: memoization is transparent and the lemma holds on seeded graphs") {
  std::mt19937_64 rng(53);
  DecomposabilityOptions plain;
  plain.memoize = false;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 7 + trial % 3;
    const Graph g = oracle::random_graph(n, 0.15 + 0.05 * (trial % 6), rng);
    const auto memo = is_vertex_decomposable(g);
    if (n == 7) {
      const auto direct = is_vertex_decomposable(g, {}, plain);
      CHECK(memo.decomposable == direct.decomposable);
      if (memo.decomposable) CHECK(replay_certificate(g, *direct.certificate));
    }
    if (memo.decomposable) CHECK(replay_certificate(g, *memo.certificate));
    if (is_chordal(g)) CHECK(memo.decomposable);
    if (is_bipartite(g)) CHECK(is_c5_free(g).free);
    if (!is_c5_free(g).free) continue;
    for (Vertex x : g.vertices())
      if (is_shedding_vertex(g, x)) CHECK(dominated_neighbor(g, x).has_value());
  }
}
