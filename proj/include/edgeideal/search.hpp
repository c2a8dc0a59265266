#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "edgeideal/config.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"

namespace edgeideal {

struct SearchOptions {
  int max_n = 9;
  /// Seeded random candidates; 0 disables the random phase and the exhaustive pass.
  std::uint64_t budget = 10'000;
  std::uint64_t seed = 1;
  /// Every labeled graph up to this order is tried before the random phase.
  int exhaustive_max_n = 6;
  Limits limits;
  Execution execution = Execution::parallel;
};

struct SearchCandidate {
  Graph graph;
  std::string origin;
  int d = 0;
  int d_prime = 0;
  std::optional<int> d_brute, d_prime_brute;
  /// Both brute-force recomputations ran and agree with the fast engines.
  bool reverified = false;
};

struct SearchOutcome {
  std::optional<SearchCandidate> counterexample;
  std::uint64_t exhaustive_examined = 0, exhaustive_qualified = 0;
  std::uint64_t random_examined = 0, random_qualified = 0;
};

/// Looks for a C5-free vertex decomposable graph with d_G != d'_G. Candidates
/// are examined in a fixed order (exhaustive pass by (n, mask), then random
/// index 0..budget-1) and the first hit in that order is returned, whatever
/// the thread count. Throws InputError if max_n exceeds the decomposition cutoff.
SearchOutcome search_d_question(const SearchOptions& options);

/// The graph examined as random candidate `index`.
Graph search_candidate(const SearchOptions& options, std::uint64_t index);

}  // namespace edgeideal
