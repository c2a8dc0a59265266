#include "edgeideal/report.hpp"

#include <fstream>

#include "edgeideal/errors.hpp"

namespace edgeideal {
namespace {

using nlohmann::json;

json members(VertexSet s) { return s.members(); }

json edge_pair(const Edge& e) { return json::array({e.u, e.v}); }

json edges(std::span<const Edge> list) {
  json out = json::array();
  for (const Edge& e : list) out.push_back(edge_pair(e));
  return out;
}

template <typename T>
json optional_value(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

json certificate_node(const DecompositionCertificate& cert, int index) {
  const DecompositionStep& s = cert.steps[static_cast<std::size_t>(index)];
  json node = {{"support", members(s.support)}};
  if (s.shedding) {
    node["shedding"] = *s.shedding;
    node["deletion"] = certificate_node(cert, s.deletion);
    node["link"] = certificate_node(cert, s.link);
  }
  return node;
}

json bouquet_family(const BouquetFamily& family) {
  json out = json::array();
  for (const Bouquet& b : family.bouquets) out.push_back({{"root", b.root}, {"flowers", members(b.flowers)}});
  return out;
}

}  // namespace

json to_json(const Graph& g) { return {{"n", g.order()}, {"m", g.size()}, {"edges", edges(g.edges())}}; }

json to_json(const BettiTable& table) {
  json out = json::array();
  for (const auto& [ij, beta] : table.entries()) out.push_back(json::array({ij.first, ij.second, beta}));
  return out;
}

json to_json(const DecompositionCertificate& cert) {
  if (cert.steps.empty()) return nullptr;
  return certificate_node(cert, 0);
}

json to_json(const ClassFlags& f) {
  json out = {
      {"c5_free", f.c5_free},
      {"induced_c5_free", f.induced_c5_free},
      {"vertex_decomposable", optional_value(f.vertex_decomposable)},
      {"chordal", f.chordal},
      {"bipartite", f.bipartite},
      {"forest", f.forest},
      {"unmixed", optional_value(f.unmixed)},
      {"has_isolated", f.has_isolated},
  };
  out["c5_witness"] = f.c5_witness ? json(*f.c5_witness) : json(nullptr);
  out["certificate"] = f.certificate ? to_json(*f.certificate) : json(nullptr);
  return out;
}

json to_json(const InvariantBundle& b) {
  json out;
  out["c"] = b.c ? json{{"value", b.c->value}, {"witness", edges(b.c->witness)}} : json(nullptr);
  auto bouquet = [](const std::optional<BouquetOptimum>& o) {
    return o ? json{{"value", o->value}, {"witness", bouquet_family(o->witness)}} : json(nullptr);
  };
  out["d"] = bouquet(b.d);
  out["d_prime"] = bouquet(b.d_prime);
  out["bight"] = optional_value(b.bight);
  out["gamma"] = optional_value(b.gamma);
  out["epsilon"] = optional_value(b.epsilon);
  out["epsilon_closed"] = optional_value(b.epsilon_closed);
  out["min_maximal_independent"] = optional_value(b.min_maximal_independent);
  out["max_maximal_independent"] = optional_value(b.max_maximal_independent);
  out["dim"] = optional_value(b.dim);
  out["skipped"] = b.skipped;
  return out;
}

json to_json(const OracleBundle& o) {
  return {
      {"field", o.field.name()},
      {"characteristic", o.field.characteristic()},
      {"betti", o.betti ? to_json(*o.betti) : json(nullptr)},
      {"reg", optional_value(o.reg)},
      {"pd", optional_value(o.pd)},
      {"depth", optional_value(o.depth)},
      {"skipped", optional_value(o.skipped)},
  };
}

json to_json(const Verdict& v) {
  return {
      {"claim", v.claim},
      {"field", v.field.empty() ? json(nullptr) : json(v.field)},
      {"applicable", v.applicable},
      {"lhs", optional_value(v.lhs)},
      {"rhs", optional_value(v.rhs)},
      {"relation", std::string(relation_symbol(v.relation))},
      {"pass", v.pass},
      {"status", v.status},
  };
}

json to_json(const ReportMeta& m) {
  json fields = json::array();
  for (const Field& f : m.fields) fields.push_back(f.characteristic());
  return {
      {"version", m.version},
      {"seed", m.seed},
      {"characteristics", fields},
      {"cutoffs",
       {
           {"enumeration", m.limits.enumeration_cutoff},
           {"oracle", m.limits.oracle_cutoff},
           {"decomposition", m.limits.decomposition_cutoff},
           {"face_budget", m.limits.face_budget},
           {"search_node_budget", m.limits.search_node_budget},
       }},
      {"c5_reading", "subgraph"},
      {"epsilon_reading", "open"},
      {"notes", m.notes},
  };
}

json to_json(const VerificationReport& r) {
  json oracle = json::array();
  for (const OracleBundle& o : r.oracle) oracle.push_back(to_json(o));
  json verdicts = json::array();
  for (const Verdict& v : r.verdicts) verdicts.push_back(to_json(v));
  return {
      {"graph", to_json(r.graph)},
      {"flags", to_json(r.flags)},
      {"invariants", to_json(r.invariants)},
      {"oracle", oracle},
      {"verdicts", verdicts},
      {"meta", to_json(r.meta)},
  };
}

std::string canonical_json(const json& doc) { return doc.dump(2) + "\n"; }

void write_report(const VerificationReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open " + path.string() + " for writing");
  out << canonical_json(to_json(report));
  if (!out) throw InputError("failed writing " + path.string());
}

}  // namespace edgeideal
