#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "edgeideal/config.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

enum class Family {
  path,
  cycle,
  star,
  complete,
  tree,          // uniform labeled tree from a random Pruefer sequence
  forest,        // random tree on n + 1 vertices with the last vertex removed
  chordal,       // intersection graph of random subtrees of a random host tree
  bipartite_vd,  // random bipartite graphs, rejection-sampled for vertex decomposability
  gnp,           // Erdos-Renyi with a seed-chosen edge probability
};

/// A family plus size and seed; `whisker` hangs a pendant vertex off every
/// vertex of the generated base graph (the "whisker-of:<family>" form).
struct GeneratorSpec {
  Family family = Family::path;
  int n = 0;
  std::uint64_t seed = 0;
  bool whisker = false;
};

std::optional<Family> family_from_name(std::string_view name);
std::string family_name(Family f);
/// Accepts "<family>" or "whisker-of:<family>".
std::optional<GeneratorSpec> parse_generator(std::string_view name, int n, std::uint64_t seed);
std::string generator_name(const GeneratorSpec& spec);

/// Deterministic in (family, n, seed). Throws ResourceError when bipartite_vd
/// rejection sampling gives up, InputError for impossible sizes (cycle n < 3).
Graph generate(const GeneratorSpec& spec, const Limits& limits = {});

Graph whisker(const Graph& base);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);

/// Seeded engine used by every randomized generator and search.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) without relying on library distributions,
/// so outputs agree across standard libraries.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);
/// Uniform real in [0, 1) from the top 53 bits.
double uniform_unit(Rng& rng);
/// SplitMix64 finalizer, for deriving independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

Graph random_tree(int n, Rng& rng);
Graph random_gnp(int n, double p, Rng& rng);
Graph random_bipartite(int n, double p, Rng& rng);

}  // namespace edgeideal
