// Acceptance suite: one PASS/FAIL line per criterion. Arguments select a
// subset of criteria by number; no arguments runs all ten.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "edgeideal/corpus.hpp"
#include "edgeideal/decomposability.hpp"
#include "edgeideal/dual.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/search.hpp"
#include "edgeideal/suite.hpp"

using namespace edgeideal;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct CorpusRun {
  std::vector<CorpusEntry> entries;
  std::vector<VerificationReport> reports;
};

const CorpusRun& corpus_run() {
  static const CorpusRun run = [] {
    CorpusRun r;
    r.entries = builtin_corpus();
    VerifyOptions options;
    options.dual_checks = false;
    r.reports = verify_corpus(r.entries, options);
    return r;
  }();
  return run;
}

bool in_hypothesis(const VerificationReport& r) { return r.flags.c5_free && r.flags.vertex_decomposable == true; }

bool sampled(const CorpusEntry& e) { return e.id.starts_with("sample-"); }

/// Applies `ok` to every corpus graph inside the hypothesis. Fails on any
/// violation, on missing values, or when fewer than 500 sampled graphs qualify.
Outcome over_hypothesis_corpus(const std::function<bool(const VerificationReport&)>& ok) {
  const CorpusRun& run = corpus_run();
  std::size_t labeled = 0, samples = 0, bad = 0;
  std::string first_bad;
  for (std::size_t k = 0; k < run.entries.size(); ++k) {
    const VerificationReport& r = run.reports[k];
    if (!in_hypothesis(r)) continue;
    (sampled(run.entries[k]) ? samples : labeled)++;
    if (!ok(r)) {
      if (bad++ == 0) first_bad = run.entries[k].id;
    }
  }
  Outcome o;
  o.pass = bad == 0 && samples >= 500;
  o.detail = std::to_string(labeled) + " labeled + " + std::to_string(samples) +
             " sampled C5-free vertex decomposable graphs, " + std::to_string(bad) + " violations";
  if (bad) o.detail += " (first: " + first_bad + ")";
  return o;
}

template <typename T>
bool known(const std::optional<T>& v) {
  return v.has_value();
}

Outcome criterion1() {
  return over_hypothesis_corpus([](const VerificationReport& r) {
    const auto& o = r.oracle[0];
    return known(o.reg) && known(r.invariants.c) && *o.reg == r.invariants.c->value;
  });
}

Outcome criterion2() {
  return over_hypothesis_corpus([](const VerificationReport& r) {
    const auto& o = r.oracle[0];
    return known(o.pd) && known(r.invariants.bight) && known(r.invariants.d_prime) && *o.pd == *r.invariants.bight &&
           *r.invariants.bight == r.invariants.d_prime->value;
  });
}

Outcome criterion3() {
  return over_hypothesis_corpus([](const VerificationReport& r) {
    const auto& o = r.oracle[0];
    const auto& inv = r.invariants;
    if (!known(o.depth) || !known(inv.min_maximal_independent) || !known(inv.dim) || !known(r.flags.unmixed))
      return false;
    const bool cm = *o.depth == *inv.dim;
    return *o.depth == *inv.min_maximal_independent && cm == *r.flags.unmixed;
  });
}

Outcome criterion4() {
  const CorpusRun& run = corpus_run();
  std::size_t checked = 0, isolated_free = 0, bad = 0;
  std::string first_bad;
  for (std::size_t k = 0; k < run.entries.size(); ++k) {
    const VerificationReport& r = run.reports[k];
    const auto& inv = r.invariants;
    const auto& o = r.oracle[0];
    ++checked;
    bool ok = known(inv.c) && known(inv.d) && known(inv.d_prime) && known(inv.bight) && known(o.pd);
    if (ok) {
      ok = inv.c->value <= inv.d->value && inv.d->value <= inv.d_prime->value &&
           inv.d_prime->value <= *inv.bight && *inv.bight <= *o.pd;
    }
    if (ok && !r.flags.has_isolated) {
      ++isolated_free;
      ok = known(inv.epsilon) && known(inv.gamma) && *o.pd <= r.graph.order() - *inv.epsilon &&
           std::max(*inv.epsilon, *inv.gamma) <= inv.d_prime->value;
    }
    if (!ok && bad++ == 0) first_bad = run.entries[k].id;
  }
  Outcome out;
  out.pass = bad == 0;
  out.detail = std::to_string(checked) + " graphs (" + std::to_string(isolated_free) +
               " without isolated vertices), " + std::to_string(bad) + " violations";
  if (bad) out.detail += " (first: " + first_bad + ")";
  return out;
}

Outcome criterion5() {
  constexpr int kGraphs = 250;
  int bad = 0, with_edges = 0;
  for (int k = 0; k < kGraphs; ++k) {
    GeneratorSpec spec;
    spec.family = Family::chordal;
    spec.n = 1 + k % 10;
    spec.seed = mix_seed(5, static_cast<std::uint64_t>(k));
    const Graph g = generate(spec);
    if (!is_chordal(g)) ++bad;
    if (g.size() > 0) ++with_edges;
    if (d_number(g).value != d_prime_number(g).value) ++bad;
  }
  return {bad == 0, std::to_string(kGraphs) + " seeded chordal graphs on 1..10 vertices (" +
                        std::to_string(with_edges) + " with edges), " + std::to_string(bad) + " violations"};
}

Outcome criterion6() {
  long long graphs = 0, identity_checks = 0, failures = 0;
  for (int n = 0; n <= 6; ++n) {
    const auto count = static_cast<long long>(std::uint64_t{1} << (n * (n - 1) / 2));
    long long local_fail = 0, local_identity = 0;
#pragma omp parallel for schedule(dynamic, 64) reduction(+ : local_fail, local_identity)
    for (long long mask = 0; mask < count; ++mask) {
      const Graph g = labeled_graph(n, static_cast<std::uint64_t>(mask));
      bool ok = terai_check(g, Field::rationals(), {}, Execution::serial).holds && primary_decomposition_check(g) &&
                double_dual_check(g);
      for (Vertex x : g.vertices()) {
        if (neighbors(g, x).empty()) continue;
        ++local_identity;
        ok = decomposition_identity_check(g, x) && ok;
      }
      if (!ok) ++local_fail;
    }
    graphs += count;
    identity_checks += local_identity;
    failures += local_fail;
  }
  return {failures == 0, std::to_string(graphs) + " labeled graphs on 0..6 vertices, " +
                             std::to_string(identity_checks) + " decomposition identities, " +
                             std::to_string(failures) + " failing graphs"};
}

Outcome criterion7() {
  const Graph c5 = cycle_graph(5);
  const int reg = hochster_betti_table(ideal_of_graph(c5), Field::rationals()).regularity();
  const int c = c_number(c5).value;
  const bool vd = is_vertex_decomposable(c5).decomposable;
  const bool free_subgraph = is_c5_free(c5, C5Mode::subgraph).free;
  const bool free_induced = is_c5_free(c5, C5Mode::induced).free;
  const bool pass = reg == 2 && c == 1 && vd && !free_subgraph && !free_induced;
  return {pass, "C5: reg " + std::to_string(reg) + ", c " + std::to_string(c) + ", vertex decomposable " +
                    (vd ? "true" : "false") + ", C5-free " + (free_subgraph || free_induced ? "true" : "false")};
}

Outcome criterion8() {
  std::vector<std::string> wrong;
  auto expect = [&wrong](const std::string& what, long long got, long long want) {
    if (got != want) wrong.push_back(what + " = " + std::to_string(got) + " (want " + std::to_string(want) + ")");
  };
  auto table = [](const Graph& g) { return hochster_betti_table(ideal_of_graph(g), Field::rationals()); };
  const Graph k2(2, {{0, 1}});
  const auto tk2 = table(k2);
  expect("K2 reg", tk2.regularity(), 1);
  expect("K2 pd", tk2.projective_dimension(), 1);
  expect("K2 depth", tk2.depth(), 1);
  const Graph p4 = path_graph(4);
  const auto tp4 = table(p4);
  expect("P4 c", c_number(p4).value, 1);
  expect("P4 bight", bight(p4), 2);
  expect("P4 pd", tp4.projective_dimension(), 2);
  expect("P4 depth", tp4.depth(), 2);
  expect("P4 unmixed", is_unmixed(p4), 1);
  const Graph p5 = path_graph(5);
  expect("P5 c", c_number(p5).value, 2);
  expect("P5 reg", table(p5).regularity(), 2);
  const Graph star = star_graph(4);
  const auto tstar = table(star);
  expect("K13 bight", bight(star), 3);
  expect("K13 pd", tstar.projective_dimension(), 3);
  expect("K13 depth", tstar.depth(), 1);
  expect("K13 d", d_number(star).value, 3);
  expect("K13 d'", d_prime_number(star).value, 3);
  expect("K13 unmixed", is_unmixed(star), 0);
  const auto tc3 = table(cycle_graph(3));
  expect("C3 pd", tc3.projective_dimension(), 2);
  expect("C3 reg", tc3.regularity(), 1);
  expect("C4 vertex decomposable", is_vertex_decomposable(cycle_graph(4)).decomposable, 0);
  std::string detail = "K2, P4, P5, K13, C3, C4 golden values";
  for (const auto& w : wrong) detail += "; " + w;
  return {wrong.empty(), detail};
}

Outcome criterion9() {
  SearchOptions options;
  options.max_n = 9;
  options.exhaustive_max_n = 6;
  options.budget = 10'000;
  options.seed = 2024;
  const SearchOutcome s = search_d_question(options);
  std::string detail = "exhaustive n<=6: " + std::to_string(s.exhaustive_examined) + " examined, " +
                       std::to_string(s.exhaustive_qualified) + " C5-free vertex decomposable; random n<=9: " +
                       std::to_string(s.random_examined) + " examined, " + std::to_string(s.random_qualified) +
                       " qualified; ";
  if (!s.counterexample) return {true, detail + "no counterexample"};
  const SearchCandidate& c = *s.counterexample;
  detail += "counterexample at " + c.origin + " with d = " + std::to_string(c.d) + ", d' = " +
            std::to_string(c.d_prime) + (c.reverified ? ", re-verified by brute force" : ", NOT re-verified");
  return {c.reverified, detail};
}

Outcome criterion10() {
  long long graphs = 0, mismatches = 0;
  for (int n = 0; n <= 7; ++n) {
    const auto count = static_cast<long long>(std::uint64_t{1} << (n * (n - 1) / 2));
    long long local = 0;
#pragma omp parallel for schedule(dynamic, 256) reduction(+ : local)
    for (long long mask = 0; mask < count; ++mask) {
      const Graph g = labeled_graph(n, static_cast<std::uint64_t>(mask));
      if (d_prime_number(g, {}, DPrimeEngine::matching).value !=
          d_prime_number(g, {}, DPrimeEngine::brute_force).value)
        ++local;
    }
    graphs += count;
    mismatches += local;
  }
  return {mismatches == 0, std::to_string(graphs) + " labeled graphs on 0..7 vertices, " +
                               std::to_string(mismatches) + " mismatches"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"reg = c on C5-free vertex decomposable graphs", criterion1},
      {"pd = bight = d' on C5-free vertex decomposable graphs", criterion2},
      {"depth = min maximal independent, CM iff unmixed", criterion3},
      {"chain c <= d <= d' <= bight <= pd <= n - eps, max(eps, gamma) <= d'", criterion4},
      {"d = d' on chordal graphs", criterion5},
      {"Terai, decomposition identity, primary decomposition, double dual", criterion6},
      {"hypothesis necessity on C5", criterion7},
      {"golden values", criterion8},
      {"open-question search", criterion9},
      {"matching d' agrees with brute force", criterion10},
  };
  std::set<int> selected;
  for (int k = 1; k < argc; ++k) selected.insert(std::atoi(argv[k]));

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!selected.empty() && !selected.contains(id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s: %s [%s] (%.1fs)\n", id, o.pass ? "PASS" : "FAIL", criteria[k].first.c_str(),
                o.detail.c_str(), secs);
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
