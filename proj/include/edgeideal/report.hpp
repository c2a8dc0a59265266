#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "edgeideal/verify.hpp"

namespace edgeideal {

// Report documents use nlohmann::json, whose objects keep keys sorted, so a
// dump is canonical for a given report.

nlohmann::json to_json(const Graph& g);
nlohmann::json to_json(const BettiTable& table);
nlohmann::json to_json(const DecompositionCertificate& cert);
nlohmann::json to_json(const ClassFlags& flags);
nlohmann::json to_json(const InvariantBundle& bundle);
nlohmann::json to_json(const OracleBundle& oracle);
nlohmann::json to_json(const Verdict& verdict);
nlohmann::json to_json(const ReportMeta& meta);
/// Top-level keys: graph, flags, invariants, oracle, verdicts, meta.
nlohmann::json to_json(const VerificationReport& report);

/// Two-space indented JSON with a trailing newline.
std::string canonical_json(const nlohmann::json& doc);

void write_report(const VerificationReport& report, const std::filesystem::path& path);

}  // namespace edgeideal
