#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "edgeideal/corpus.hpp"
#include "edgeideal/verify.hpp"

namespace edgeideal {

struct ClaimTally {
  std::size_t applicable = 0, passed = 0, failed = 0, not_applicable = 0, skipped = 0;
};

struct SuiteFailure {
  std::string graph_id;
  Verdict verdict;
};

struct SuiteSummary {
  std::size_t graphs = 0;
  std::size_t hypothesis_graphs = 0;  // C5-free and vertex decomposable
  /// Keyed by (claim, field).
  std::map<std::pair<std::string, std::string>, ClaimTally> tallies;
  std::vector<SuiteFailure> failures;  // ordered by graph id
  std::vector<std::string> notes;      // "<graph id>: <note>"

  /// Fixed-width table, one row per (claim, field).
  std::string to_text() const;
};

/// Verifies every entry; with Execution::parallel graphs are spread over
/// OpenMP threads (each graph's oracle then runs serially). Aggregation
/// follows the corpus order, so the summary does not depend on scheduling.
SuiteSummary run_suite(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options);

/// Every report, in corpus order.
std::vector<VerificationReport> verify_corpus(const std::vector<CorpusEntry>& corpus, const VerifyOptions& options);

SuiteSummary summarize(const std::vector<CorpusEntry>& corpus, const std::vector<VerificationReport>& reports);

}  // namespace edgeideal
