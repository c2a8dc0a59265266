#include "edgeideal/suite.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace edgeideal {

std::vector<VerificationReport> verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options) {
  std::vector<VerificationReport> reports(corpus.size());
  VerifyOptions inner = options;
  const bool parallel = options.execution == Execution::parallel;
  if (parallel) inner.execution = Execution::serial;
  std::exception_ptr failure;
  const auto total = static_cast<long long>(corpus.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long long i = 0; i < total; ++i) {
    try {
      const auto k = static_cast<std::size_t>(i);
      reports[k] = verify_theorems(corpus[k].graph, inner);
    } catch (...) {
#pragma omp critical(edgeideal_suite_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return reports;
}

SuiteSummary summarize(const std::vector<CorpusEntry>& corpus, const std::vector<VerificationReport>& reports) {
  SuiteSummary s;
  s.graphs = reports.size();
  for (std::size_t k = 0; k < reports.size(); ++k) {
    const VerificationReport& r = reports[k];
    if (r.flags.c5_free && r.flags.vertex_decomposable == true) ++s.hypothesis_graphs;
    for (const Verdict& v : r.verdicts) {
      ClaimTally& t = s.tallies[{v.claim, v.field}];
      if (v.applicable) {
        ++t.applicable;
        if (v.pass) {
          ++t.passed;
        } else {
          ++t.failed;
          s.failures.push_back({corpus[k].id, v});
        }
      } else if (v.status == "not applicable") {
        ++t.not_applicable;
      } else {
        ++t.skipped;
      }
    }
    for (const std::string& note : r.meta.notes) s.notes.push_back(corpus[k].id + ": " + note);
  }
  return s;
}

SuiteSummary run_suite(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options) {
  return summarize(corpus, verify_corpus(corpus, options));
}

std::string SuiteSummary::to_text() const {
  std::size_t width = 5;
  for (const auto& [key, tally] : tallies) width = std::max(width, key.first.size() + (key.second.empty() ? 0 : key.second.size() + 3));
  std::ostringstream out;
  out << "graphs " << graphs << ", C5-free and vertex decomposable " << hypothesis_graphs << "\n";
  auto cell = [&out](const std::string& s, std::size_t w) {
    out << s << std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  cell("claim", width + 2);
  out << "applicable    passed    failed  n/a       skipped\n";
  for (const auto& [key, t] : tallies) {
    cell(key.second.empty() ? key.first : key.first + " [" + key.second + "]", width + 2);
    cell(std::to_string(t.applicable), 14);
    cell(std::to_string(t.passed), 10);
    cell(std::to_string(t.failed), 8);
    cell(std::to_string(t.not_applicable), 10);
    out << t.skipped << "\n";
  }
  out << "failures " << failures.size() << "\n";
  for (const SuiteFailure& f : failures)
    out << "  " << f.graph_id << " " << f.verdict.claim << (f.verdict.field.empty() ? "" : " [" + f.verdict.field + "]")
        << ": " << (f.verdict.lhs ? std::to_string(*f.verdict.lhs) : "?") << " "
        << relation_symbol(f.verdict.relation) << " " << (f.verdict.rhs ? std::to_string(*f.verdict.rhs) : "?")
        << "\n";
  return out.str();
}

}  // namespace edgeideal
