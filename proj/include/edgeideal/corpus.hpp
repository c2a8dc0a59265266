#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "edgeideal/config.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

struct CorpusEntry {
  std::string id;  // unique; corpora are kept sorted by id
  Graph graph;
};

/// Graph number `mask` on n vertices: bit k of mask selects the k-th pair (u, v),
/// u < v, in lexicographic order.
Graph labeled_graph(int n, std::uint64_t mask);
/// All 2^(n choose 2) labeled graphs on n vertices, n <= 6. Larger orders
/// should stream through labeled_graph.
std::vector<CorpusEntry> labeled_graphs(int n);

struct BuiltinCorpusOptions {
  int labeled_max_n = 5;
  int sampled_min_n = 6;
  int sampled_max_n = 9;
  /// Sampling stops once this many samples are C5-free and vertex decomposable.
  std::size_t qualified_target = 500;
  std::uint64_t seed = 2024;
  Limits limits;
};

/// All labeled graphs up to labeled_max_n, then seeded samples from the tree,
/// forest, chordal, bipartite_vd, whiskered and G(n, p) families until the
/// qualified target is met. Deterministic in the options.
std::vector<CorpusEntry> builtin_corpus(const BuiltinCorpusOptions& options = {});

/// Every regular file in `dir` ending in ".edges" or ".txt", sorted by file name;
/// ids are the file names. Parse errors carry the file name.
std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir);

}  // namespace edgeideal
