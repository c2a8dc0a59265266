#include "edgeideal/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>

#include "edgeideal/corpus.hpp"
#include "edgeideal/edge_list.hpp"
#include "edgeideal/errors.hpp"
#include "edgeideal/generators.hpp"
#include "edgeideal/report.hpp"
#include "edgeideal/search.hpp"
#include "edgeideal/suite.hpp"

namespace edgeideal {
namespace {

using nlohmann::json;

std::vector<Field> fields_of(const std::vector<std::uint64_t>& chars) {
  std::vector<Field> out;
  for (std::uint64_t p : chars) {
    const Field f = Field::of_characteristic(p);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  if (out.empty()) out.push_back(Field::rationals());
  return out;
}

void emit(std::ostream& out, const std::string& text, const std::string& path) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open " + path + " for writing");
  file << text;
  if (!file) throw InputError("failed writing " + path);
}

json search_json(const SearchOutcome& s, const SearchOptions& o) {
  json cx = nullptr;
  if (s.counterexample) {
    const SearchCandidate& c = *s.counterexample;
    cx = {{"graph", to_json(c.graph)},
          {"origin", c.origin},
          {"d", c.d},
          {"d_prime", c.d_prime},
          {"d_brute", c.d_brute ? json(*c.d_brute) : json(nullptr)},
          {"d_prime_brute", c.d_prime_brute ? json(*c.d_prime_brute) : json(nullptr)},
          {"reverified", c.reverified}};
  }
  return {
      {"question", "d = d' on C5-free vertex decomposable graphs"},
      {"counterexample", cx},
      {"exhaustive", {{"max_n", std::min(o.exhaustive_max_n, o.max_n)},
                      {"examined", s.exhaustive_examined},
                      {"qualified", s.exhaustive_qualified}}},
      {"random", {{"budget", o.budget}, {"examined", s.random_examined}, {"qualified", s.random_qualified}}},
      {"meta", {{"version", std::string(kVersion)}, {"seed", o.seed}, {"max_n", o.max_n}}},
  };
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge ideal invariants, Betti tables and theorem verification", "edgeideal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string file, out_path, family, corpus, question, json_path;
  std::vector<std::uint64_t> chars;
  int n = 0, max_n = 9, exhaustive_n = 6;
  std::uint64_t seed = 0, budget = 10'000;
  bool no_dual = false;

  auto* invariants_cmd = app.add_subcommand("invariants", "Invariant bundle of a graph as JSON");
  invariants_cmd->add_option("file", file, "Edge-list file")->required();

  auto* betti_cmd = app.add_subcommand("betti", "Graded Betti table of R/I(G), lines 'i j beta'");
  betti_cmd->add_option("file", file, "Edge-list file")->required();
  betti_cmd->add_option("--char", chars, "Field characteristic, 0 or a prime")->expected(1);

  auto* classify_cmd = app.add_subcommand("classify", "Class flags and decomposition certificate as JSON");
  classify_cmd->add_option("file", file, "Edge-list file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Verification report as JSON; exit 1 on a failed claim");
  verify_cmd->add_option("file", file, "Edge-list file")->required();
  verify_cmd->add_option("--char", chars, "Field characteristic, 0 or a prime (repeatable)");
  verify_cmd->add_option("--out", out_path, "Write the report here instead of stdout");
  verify_cmd->add_option("--seed", seed, "Seed recorded in the report");
  verify_cmd->add_flag("--no-dual", no_dual, "Skip the Alexander-dual claims");

  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph in edge-list format");
  gen_cmd->add_option("family", family, "path|cycle|star|complete|tree|forest|chordal|bipartite_vd|gnp, "
                                        "optionally prefixed by whisker-of:")
      ->required();
  gen_cmd->add_option("--n", n, "Order (the base order for whisker-of:)")->required();
  gen_cmd->add_option("--seed", seed, "Seed")->required();
  gen_cmd->add_option("--out", out_path, "Write here instead of stdout");

  auto* search_cmd = app.add_subcommand("search", "Counterexample search for an open question");
  search_cmd->add_option("question", question, "Question id")->required()->check(CLI::IsMember({"dq"}));
  search_cmd->add_option("--max-n", max_n, "Largest order of random candidates")->required();
  search_cmd->add_option("--budget", budget, "Number of random candidates")->required();
  search_cmd->add_option("--seed", seed, "Seed")->required();
  search_cmd->add_option("--exhaustive-n", exhaustive_n, "Exhaustive pass up to this order (at most 7)");

  auto* suite_cmd = app.add_subcommand("suite", "Batch verification with a summary table; exit 1 on failures");
  suite_cmd->add_option("--corpus", corpus, "Directory of edge-list files, or 'builtin'")->required();
  suite_cmd->add_option("--char", chars, "Field characteristic, 0 or a prime (repeatable)");
  suite_cmd->add_option("--json", json_path, "Also write per-graph reports as a JSON object keyed by id");
  suite_cmd->add_flag("--no-dual", no_dual, "Skip the Alexander-dual claims");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Limits limits = Limits::from_env();
    if (*invariants_cmd) {
      const Graph g = read_graph(file);
      out << canonical_json({{"graph", to_json(g)}, {"invariants", to_json(compute_invariants(g, limits))}});
    } else if (*betti_cmd) {
      const Graph g = read_graph(file);
      out << hochster_betti_table(ideal_of_graph(g), fields_of(chars).front(), limits).to_text();
    } else if (*classify_cmd) {
      const Graph g = read_graph(file);
      out << canonical_json({{"graph", to_json(g)}, {"flags", to_json(classify(g, limits))}});
    } else if (*verify_cmd) {
      VerifyOptions options;
      options.fields = fields_of(chars);
      options.limits = limits;
      options.dual_checks = !no_dual;
      options.seed = seed;
      const VerificationReport report = verify_theorems(read_graph(file), options);
      emit(out, canonical_json(to_json(report)), out_path);
      return report.failures().empty() ? kExitOk : kExitVerificationFailure;
    } else if (*gen_cmd) {
      const auto spec = parse_generator(family, n, seed);
      if (!spec) throw InputError("unknown family '" + family + "'");
      emit(out, format_edge_list(generate(*spec, limits)), out_path);
    } else if (*search_cmd) {
      SearchOptions options;
      options.max_n = max_n;
      options.budget = budget;
      options.seed = seed;
      options.exhaustive_max_n = exhaustive_n;
      options.limits = limits;
      const SearchOutcome outcome = search_d_question(options);
      out << canonical_json(search_json(outcome, options));
    } else if (*suite_cmd) {
      BuiltinCorpusOptions corpus_options;
      corpus_options.limits = limits;
      const std::vector<CorpusEntry> entries =
          corpus == "builtin" ? builtin_corpus(corpus_options) : load_corpus_dir(corpus);
      VerifyOptions options;
      options.fields = fields_of(chars);
      options.limits = limits;
      options.dual_checks = !no_dual;
      const auto reports = verify_corpus(entries, options);
      const SuiteSummary summary = summarize(entries, reports);
      out << summary.to_text();
      if (!json_path.empty()) {
        json doc = json::object();
        for (std::size_t k = 0; k < entries.size(); ++k) doc[entries[k].id] = to_json(reports[k]);
        emit(out, canonical_json(doc), json_path);
      }
      return summary.failures.empty() ? kExitOk : kExitVerificationFailure;
    }
  } catch (const ResourceError& e) {
    err << "edgeideal: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "edgeideal: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace edgeideal
