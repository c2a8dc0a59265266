#include "edgeideal/search.hpp"

#include <algorithm>
#include <exception>
#include <vector>

#include "edgeideal/corpus.hpp"
#include "edgeideal/decomposability.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/invariants.hpp"

namespace edgeideal {
namespace {

struct Examined {
  bool qualified = false;
  bool counterexample = false;
  int d = 0, d_prime = 0;
};

Examined examine(const Graph& g, const Limits& limits) {
  Examined e;
  if (!is_c5_free(g).free) return e;
  if (!is_vertex_decomposable(g, limits).decomposable) return e;
  e.qualified = true;
  e.d = d_number(g, limits).value;
  e.d_prime = d_prime_number(g, limits).value;
  e.counterexample = e.d != e.d_prime;
  return e;
}

struct Phase {
  std::uint64_t examined = 0, qualified = 0;
  std::optional<std::uint64_t> hit;
  Examined at_hit;
};

/// Examines items 0..count-1 and reports the smallest counterexample index.
template <typename Make>
Phase run_phase(std::uint64_t count, const Limits& limits, Execution exec, Make make) {
  std::vector<Examined> results(count);
  std::exception_ptr failure;
  const auto total = static_cast<long long>(count);
#pragma omp parallel for schedule(dynamic, 16) if (exec == Execution::parallel)
  for (long long i = 0; i < total; ++i) {
    try {
      results[static_cast<std::size_t>(i)] = examine(make(static_cast<std::uint64_t>(i)), limits);
    } catch (...) {
#pragma omp critical(edgeideal_search_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  Phase p;
  for (std::uint64_t i = 0; i < count; ++i) {
    ++p.examined;
    if (results[i].qualified) ++p.qualified;
    if (results[i].counterexample) {
      p.hit = i;
      p.at_hit = results[i];
      break;
    }
  }
  return p;
}

SearchCandidate reverify(const Graph& g, std::string origin, const Examined& e, const Limits& limits) {
  SearchCandidate c;
  c.graph = g;
  c.origin = std::move(origin);
  c.d = e.d;
  c.d_prime = e.d_prime;
  try {
    c.d_brute = d_number_brute_force(g, limits).value;
    c.d_prime_brute = d_prime_number(g, limits, DPrimeEngine::brute_force).value;
  } catch (const ResourceError&) {
  }
  c.reverified = c.d_brute == c.d && c.d_prime_brute == c.d_prime;
  return c;
}

}  // namespace

Graph search_candidate(const SearchOptions& options, std::uint64_t index) {
  Rng rng(mix_seed(options.seed, index));
  const int lo = options.exhaustive_max_n < options.max_n ? std::max(1, options.exhaustive_max_n + 1) : 1;
  const int n = lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(options.max_n - lo + 1)));
  switch (uniform_below(rng, 4)) {
    case 0: return random_bipartite(n, 0.2 + 0.5 * uniform_unit(rng), rng);
    case 1: return random_gnp(n, 0.1 + 0.3 * uniform_unit(rng), rng);
    case 2: {
      const Graph t = random_tree(n, rng);
      std::vector<Edge> e(t.edges().begin(), t.edges().end());
      const auto extra = uniform_below(rng, 3);
      for (std::uint64_t k = 0; k < extra && n >= 2; ++k) {
        const auto u = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        const auto v = static_cast<Vertex>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        const Edge cand(u, v);
        if (u != v && std::find(e.begin(), e.end(), cand) == e.end()) e.push_back(cand);
      }
      return Graph(n, e);
    }
    default: {
      const int base = std::max(1, n / 2);
      return whisker(random_gnp(base, 0.2 + 0.5 * uniform_unit(rng), rng));
    }
  }
}

SearchOutcome search_d_question(const SearchOptions& options) {
  if (options.max_n < 1) throw InputError("max_n must be positive");
  if (options.max_n > options.limits.decomposition_cutoff)
    throw InputError("max_n exceeds the decomposition cutoff (" +
                     std::to_string(options.limits.decomposition_cutoff) + ")");
  if (options.exhaustive_max_n > 7) throw InputError("the exhaustive pass supports orders up to 7");
  SearchOutcome out;
  if (options.budget == 0) return out;

  const int exhaustive_n = std::min(options.exhaustive_max_n, options.max_n);
  for (int n = 1; n <= exhaustive_n; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    const Phase p = run_phase(count, options.limits, options.execution,
                              [n](std::uint64_t mask) { return labeled_graph(n, mask); });
    out.exhaustive_examined += p.examined;
    out.exhaustive_qualified += p.qualified;
    if (p.hit) {
      out.counterexample = reverify(labeled_graph(n, *p.hit), "labeled n=" + std::to_string(n) +
                                    " mask=" + std::to_string(*p.hit), p.at_hit, options.limits);
      return out;
    }
  }

  const Phase p = run_phase(options.budget, options.limits, options.execution,
                            [&](std::uint64_t i) { return search_candidate(options, i); });
  out.random_examined = p.examined;
  out.random_qualified = p.qualified;
  if (p.hit)
    out.counterexample = reverify(search_candidate(options, *p.hit), "random index=" + std::to_string(*p.hit),
                                  p.at_hit, options.limits);
  return out;
}

}  // namespace edgeideal
