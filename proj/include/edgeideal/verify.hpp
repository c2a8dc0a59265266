#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edgeideal/config.hpp"
#include "edgeideal/decomposability.hpp"
#include "edgeideal/graph.hpp"
#include "edgeideal/homology.hpp"
#include "edgeideal/invariants.hpp"

namespace edgeideal {

inline constexpr std::string_view kVersion = "0.1.0";

/// Flags that can hit a resource cutoff are optional; absent means unknown.
struct ClassFlags {
  bool c5_free = false;          // no 5-cycle subgraph (the reading used for gating)
  bool induced_c5_free = false;  // no induced 5-cycle
  std::optional<bool> vertex_decomposable;
  bool chordal = false;
  bool bipartite = false;
  bool forest = false;
  std::optional<bool> unmixed;
  bool has_isolated = false;
  std::optional<std::array<Vertex, 5>> c5_witness;
  std::optional<DecompositionCertificate> certificate;
};

struct InvariantBundle {
  std::optional<EdgeSetOptimum> c;
  std::optional<BouquetOptimum> d;
  std::optional<BouquetOptimum> d_prime;
  std::optional<int> bight;
  std::optional<int> gamma;
  std::optional<int> epsilon;         // open reading
  std::optional<int> epsilon_closed;  // closed reading
  std::optional<int> min_maximal_independent;
  std::optional<int> max_maximal_independent;
  std::optional<int> dim;
  /// Invariant name to the reason it is absent.
  std::map<std::string, std::string> skipped;
};

struct OracleBundle {
  Field field;
  std::optional<BettiTable> betti;
  std::optional<int> reg, pd, depth;
  std::optional<std::string> skipped;
};

enum class Relation { eq, le, ge, iff };

std::string_view relation_symbol(Relation r);

struct Verdict {
  std::string claim;
  std::string field;  // empty for field-independent claims
  bool applicable = false;
  std::optional<long long> lhs, rhs;
  Relation relation = Relation::eq;
  bool pass = false;   // lhs relation rhs, false when a side is missing
  std::string status;  // "pass", "fail", "not applicable" or "skipped: resource"
};

struct ReportMeta {
  std::string version{kVersion};
  std::uint64_t seed = 0;
  std::vector<Field> fields;
  Limits limits;
  std::vector<std::string> notes;
};

struct VerificationReport {
  Graph graph;
  ClassFlags flags;
  InvariantBundle invariants;
  std::vector<OracleBundle> oracle;
  std::vector<Verdict> verdicts;
  ReportMeta meta;

  /// Applicable claims that failed.
  std::vector<Verdict> failures() const;
};

struct VerifyOptions {
  std::vector<Field> fields{Field::rationals()};
  Limits limits;
  Execution execution = Execution::parallel;
  /// Alexander-dual claims (Terai, decomposition identity, dual bounds, ...).
  bool dual_checks = true;
  /// Recorded in the report; verification itself is deterministic.
  std::uint64_t seed = 0;
};

ClassFlags classify(const Graph& g, const Limits& limits = {});
InvariantBundle compute_invariants(const Graph& g, const Limits& limits = {});
OracleBundle compute_oracle(const Graph& g, Field field, const Limits& limits = {},
                            Execution exec = Execution::parallel);

VerificationReport verify_theorems(const Graph& g, const VerifyOptions& options = {});

}  // namespace edgeideal
