#include "edgeideal/corpus.hpp"

#include <algorithm>
#include <array>
#include <cstdio>

#include "edgeideal/decomposability.hpp"
#include "edgeideal/edge_list.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/generators.hpp"

namespace edgeideal {
namespace {

std::string padded(std::uint64_t value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return s;
}

int pair_count(int n) { return n * (n - 1) / 2; }

struct SampleRecipe {
  std::string_view name;
  GeneratorSpec spec;
};

// Returns nothing when the recipe does not fit order n.
std::optional<Graph> sample(std::size_t k, int n, std::uint64_t seed, const Limits& limits, std::string& label) {
  static constexpr std::array<std::string_view, 7> kRecipes = {
      "tree", "forest", "chordal", "bipartite_vd", "whisker-of:gnp", "whisker-of:tree", "gnp"};
  const std::string_view recipe = kRecipes[k % kRecipes.size()];
  auto spec = parse_generator(recipe, n, seed);
  if (spec->whisker) {
    if (n % 2 != 0) return std::nullopt;
    spec->n = n / 2;
  }
  label = std::string(recipe);
  std::replace(label.begin(), label.end(), ':', '-');
  if (spec->family == Family::gnp && !spec->whisker) {
    // Sparse random graphs, so that the hypothesis region is hit often.
    Rng rng(seed);
    return random_gnp(n, 0.1 + 0.25 * uniform_unit(rng), rng);
  }
  return generate(*spec, limits);
}

}  // namespace

Graph labeled_graph(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++k)
      if (mask >> k & 1u) e.emplace_back(u, v);
  return Graph(n, e);
}

std::vector<CorpusEntry> labeled_graphs(int n) {
  if (n < 0 || n > 6) throw InputError("labeled_graphs supports 0 <= n <= 6");
  const int pairs = pair_count(n);
  const std::uint64_t count = std::uint64_t{1} << pairs;
  const int width = static_cast<int>(std::to_string(count - 1).size());
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::uint64_t mask = 0; mask < count; ++mask)
    out.push_back({"labeled-n" + std::to_string(n) + "-" + padded(mask, width), labeled_graph(n, mask)});
  return out;
}

std::vector<CorpusEntry> builtin_corpus(const BuiltinCorpusOptions& options) {
  std::vector<CorpusEntry> out;
  for (int n = 0; n <= options.labeled_max_n; ++n) {
    auto layer = labeled_graphs(n);
    std::move(layer.begin(), layer.end(), std::back_inserter(out));
  }
  const int span = options.sampled_max_n - options.sampled_min_n + 1;
  if (span <= 0) return out;
  std::size_t qualified = 0;
  for (std::size_t k = 0; qualified < options.qualified_target; ++k) {
    const int n = options.sampled_min_n + static_cast<int>(k % static_cast<std::size_t>(span));
    const std::uint64_t seed = mix_seed(options.seed, k);
    std::string label;
    const auto g = sample(k / static_cast<std::size_t>(span), n, seed, options.limits, label);
    if (!g) continue;
    if (is_c5_free(*g).free && is_vertex_decomposable(*g, options.limits).decomposable) ++qualified;
    out.push_back({"sample-" + padded(k, 6) + "-n" + std::to_string(g->order()) + "-" + label, *g});
  }
  std::sort(out.begin(), out.end(), [](const CorpusEntry& a, const CorpusEntry& b) { return a.id < b.id; });
  return out;
}

std::vector<CorpusEntry> load_corpus_dir(const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError(dir.string() + " is not a directory");
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto ext = entry.path().extension();
    if (entry.is_regular_file() && (ext == ".edges" || ext == ".txt")) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (const auto& f : files) {
    try {
      out.push_back({f.filename().string(), read_graph(f)});
    } catch (const ParseError& e) {
      throw ParseError(e.line(), e.detail(), f.filename().string());
    }
  }
  return out;
}

}  // namespace edgeideal
