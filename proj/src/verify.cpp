#include "edgeideal/verify.hpp"

#include <algorithm>
#include <functional>
#include <type_traits>

#include "edgeideal/dual.hpp"
#include "edgeideal/errors.hpp"

namespace edgeideal {
namespace {

template <typename T>
struct Attempt {
  std::optional<T> value;
  std::string error;
};

template <typename F>
auto attempt(F&& f) -> Attempt<std::invoke_result_t<F>> {
  try {
    return {f(), {}};
  } catch (const ResourceError& e) {
    return {std::nullopt, e.what()};
  }
}

std::optional<long long> as_ll(const std::optional<int>& v) {
  if (!v) return std::nullopt;
  return *v;
}

std::optional<long long> as_ll(const std::optional<bool>& v) {
  if (!v) return std::nullopt;
  return *v ? 1 : 0;
}

std::optional<bool> both(std::optional<bool> a, std::optional<bool> b) {
  if (a && !*a) return false;
  if (b && !*b) return false;
  if (!a || !b) return std::nullopt;
  return true;
}

bool holds(long long lhs, Relation r, long long rhs) {
  switch (r) {
    case Relation::eq: return lhs == rhs;
    case Relation::le: return lhs <= rhs;
    case Relation::ge: return lhs >= rhs;
    case Relation::iff: return (lhs != 0) == (rhs != 0);
  }
  return false;
}

class Verdicts {
 public:
  explicit Verdicts(std::vector<Verdict>& out) : out_(out) {}

  void add(std::string claim, std::string field, std::optional<bool> gate, std::optional<long long> lhs,
           Relation relation, std::optional<long long> rhs) {
    Verdict v;
    v.claim = std::move(claim);
    v.field = std::move(field);
    v.lhs = lhs;
    v.rhs = rhs;
    v.relation = relation;
    v.pass = lhs && rhs && holds(*lhs, relation, *rhs);
    if (!gate) {
      v.status = "skipped: resource";
    } else if (!*gate) {
      v.status = "not applicable";
    } else if (!lhs || !rhs) {
      v.status = "skipped: resource";
    } else {
      v.applicable = true;
      v.status = v.pass ? "pass" : "fail";
    }
    out_.push_back(std::move(v));
  }

 private:
  std::vector<Verdict>& out_;
};

struct Count {
  long long passed = 0;
  long long checked = 0;
};

/// Runs check(x) for every vertex selected by `use`; absent on a resource error.
std::optional<Count> count_vertices(const Graph& g, const std::function<bool(Vertex)>& use,
                                    const std::function<bool(Vertex)>& check) {
  Count c;
  try {
    for (Vertex x : g.vertices()) {
      if (!use(x)) continue;
      ++c.checked;
      if (check(x)) ++c.passed;
    }
  } catch (const ResourceError&) {
    return std::nullopt;
  }
  return c;
}

std::optional<long long> passed(const std::optional<Count>& c) {
  if (!c) return std::nullopt;
  return c->passed;
}

std::optional<long long> checked(const std::optional<Count>& c) {
  if (!c) return std::nullopt;
  return c->checked;
}

std::string hypothesis_gap(const ClassFlags& flags) {
  if (!flags.c5_free && flags.vertex_decomposable == false) return "graph is neither C5-free nor vertex decomposable";
  if (!flags.c5_free) return "graph is not C5-free";
  return "graph is not vertex decomposable";
}

void note_difference(std::vector<std::string>& notes, const std::string& gap, const std::string& lname,
                     std::optional<int> lhs, const std::string& rname, std::optional<int> rhs) {
  if (!lhs || !rhs || *lhs == *rhs) return;
  notes.push_back("hypothesis necessity: " + lname + " = " + std::to_string(*lhs) + (*lhs > *rhs ? " > " : " < ") +
                  rname + " = " + std::to_string(*rhs) + " (" + gap + ")");
}

}  // namespace

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::eq: return "=";
    case Relation::le: return "<=";
    case Relation::ge: return ">=";
    case Relation::iff: return "<=>";
  }
  return "?";
}

std::vector<Verdict> VerificationReport::failures() const {
  std::vector<Verdict> out;
  for (const Verdict& v : verdicts)
    if (v.applicable && !v.pass) out.push_back(v);
  return out;
}

ClassFlags classify(const Graph& g, const Limits& limits) {
  ClassFlags f;
  const C5Result c5 = is_c5_free(g, C5Mode::subgraph);
  f.c5_free = c5.free;
  f.c5_witness = c5.witness;
  f.induced_c5_free = is_c5_free(g, C5Mode::induced).free;
  f.chordal = is_chordal(g);
  f.bipartite = is_bipartite(g);
  f.forest = is_forest(g);
  f.has_isolated = g.has_isolated_vertex();
  if (auto vd = attempt([&] { return is_vertex_decomposable(g, limits); }); vd.value) {
    f.vertex_decomposable = vd.value->decomposable;
    f.certificate = vd.value->certificate;
  }
  f.unmixed = attempt([&] { return is_unmixed(g, limits); }).value;
  return f;
}

InvariantBundle compute_invariants(const Graph& g, const Limits& limits) {
  InvariantBundle b;
  auto record = [&b](const std::string& name, auto&& slot, auto&& result) {
    slot = result.value;
    if (!result.value) b.skipped[name] = result.error;
  };
  record("c", b.c, attempt([&] { return c_number(g, limits); }));
  record("d", b.d, attempt([&] { return d_number(g, limits); }));
  record("d_prime", b.d_prime, attempt([&] { return d_prime_number(g, limits); }));
  record("bight", b.bight, attempt([&] { return bight(g, limits); }));
  record("gamma", b.gamma, attempt([&] { return domination_number(g, limits); }));
  if (g.has_isolated_vertex()) {
    b.skipped["epsilon"] = "undefined: isolated vertex";
    b.skipped["epsilon_closed"] = "undefined: isolated vertex";
  } else {
    record("epsilon", b.epsilon,
           attempt([&] { return edgewise_domination_number(g, limits, EdgewiseReading::open); }));
    record("epsilon_closed", b.epsilon_closed,
           attempt([&] { return edgewise_domination_number(g, limits, EdgewiseReading::closed); }));
  }
  if (auto mm = attempt([&] { return min_max_maximal_independent(g, limits); }); mm.value) {
    b.min_maximal_independent = mm.value->first;
    b.max_maximal_independent = mm.value->second;
    b.dim = mm.value->second;
  } else {
    b.skipped["min_maximal_independent"] = mm.error;
    b.skipped["max_maximal_independent"] = mm.error;
    b.skipped["dim"] = mm.error;
  }
  return b;
}

OracleBundle compute_oracle(const Graph& g, Field field, const Limits& limits, Execution exec) {
  OracleBundle o;
  o.field = field;
  auto table = attempt([&] { return hochster_betti_table(ideal_of_graph(g), field, limits, exec); });
  if (!table.value) {
    o.skipped = table.error;
    return o;
  }
  o.betti = std::move(table.value);
  o.reg = o.betti->regularity();
  o.pd = o.betti->projective_dimension();
  o.depth = o.betti->depth();
  return o;
}

VerificationReport verify_theorems(const Graph& g, const VerifyOptions& options) {
  const Limits& limits = options.limits;
  VerificationReport r;
  r.graph = g;
  r.meta.seed = options.seed;
  r.meta.fields = options.fields;
  r.meta.limits = limits;
  r.flags = classify(g, limits);
  r.invariants = compute_invariants(g, limits);
  for (const Field& field : options.fields) r.oracle.push_back(compute_oracle(g, field, limits, options.execution));

  const ClassFlags& fl = r.flags;
  const InvariantBundle& inv = r.invariants;
  const std::optional<bool> hypothesis = both(fl.c5_free, fl.vertex_decomposable);
  const bool no_isolated = !fl.has_isolated;
  const int n = g.order();

  std::optional<int> c, d, dp;
  if (inv.c) c = inv.c->value;
  if (inv.d) d = inv.d->value;
  if (inv.d_prime) dp = inv.d_prime->value;
  std::optional<int> max_eps_gamma;
  if (inv.epsilon && inv.gamma) max_eps_gamma = std::max(*inv.epsilon, *inv.gamma);

  Verdicts v(r.verdicts);

  // Graph-side claims.
  v.add("bight_eq_d_prime", "", hypothesis, as_ll(inv.bight), Relation::eq, as_ll(dp));
  v.add("chain_c_le_d", "", true, as_ll(c), Relation::le, as_ll(d));
  v.add("chain_d_le_d_prime", "", true, as_ll(d), Relation::le, as_ll(dp));
  v.add("chain_d_prime_le_bight", "", true, as_ll(dp), Relation::le, as_ll(inv.bight));
  v.add("max_epsilon_gamma_le_d_prime", "", no_isolated, as_ll(max_eps_gamma), Relation::le, as_ll(dp));
  v.add("chordal_d_eq_d_prime", "", fl.chordal, as_ll(d), Relation::eq, as_ll(dp));
  v.add("chordal_bight_eq_d", "", fl.chordal, as_ll(inv.bight), Relation::eq, as_ll(d));
  v.add("chordal_vertex_decomposable", "", fl.chordal, as_ll(fl.vertex_decomposable), Relation::eq, 1);
  v.add("forest_in_hypothesis", "", fl.forest, as_ll(hypothesis), Relation::eq, 1);
  v.add("bipartite_vd_in_hypothesis", "", both(fl.bipartite, fl.vertex_decomposable), fl.c5_free ? 1 : 0,
        Relation::eq, 1);

  const auto shedding = count_vertices(
      g, [&](Vertex x) { return is_shedding_vertex(g, x, limits); },
      [&](Vertex x) { return dominated_neighbor(g, x).has_value(); });
  v.add("shedding_dominated_neighbor", "", fl.c5_free, passed(shedding), Relation::eq, checked(shedding));

  std::optional<long long> flowers_cover, flowers_dominating, stems_dominant;
  if (inv.d_prime) {
    const BouquetFamily& w = inv.d_prime->witness;
    const std::vector<Edge> stems = w.stems();
    flowers_cover = is_minimal_vertex_cover(g, w.flowers()) ? 1 : 0;
    flowers_dominating = is_dominating_set(g, w.flowers()) ? 1 : 0;
    stems_dominant = is_edgewise_dominant(g, stems) ? 1 : 0;
  }
  v.add("cover_flowers_minimal_vertex_cover", "", true, flowers_cover, Relation::eq, 1);
  v.add("cover_flowers_dominating", "", no_isolated, flowers_dominating, Relation::eq, 1);
  v.add("cover_stems_edgewise_dominant", "", no_isolated, stems_dominant, Relation::eq, 1);

  if (options.dual_checks) {
    const auto identity = count_vertices(
        g, [&](Vertex x) { return !neighbors(g, x).empty(); },
        [&](Vertex x) { return decomposition_identity_check(g, x, limits); });
    v.add("dual_decomposition_identity", "", g.size() > 0, passed(identity), Relation::eq, checked(identity));
    const auto primary = attempt([&] { return primary_decomposition_check(g, limits); });
    v.add("primary_decomposition", "", true, as_ll(primary.value), Relation::eq, 1);
    const auto twice = attempt([&] { return double_dual_check(g, limits); });
    v.add("double_dual", "", true, as_ll(twice.value), Relation::eq, 1);
  }

  // Oracle-side claims, per field.
  const Execution exec = options.execution;
  for (const OracleBundle& o : r.oracle) {
    const std::string fname = o.field.name();
    std::optional<int> n_minus_eps;
    if (inv.epsilon) n_minus_eps = n - *inv.epsilon;
    std::optional<bool> cm;
    if (o.depth && inv.dim) cm = *o.depth == *inv.dim;

    v.add("reg_eq_c", fname, hypothesis, as_ll(o.reg), Relation::eq, as_ll(c));
    v.add("pd_eq_bight", fname, hypothesis, as_ll(o.pd), Relation::eq, as_ll(inv.bight));
    v.add("pd_eq_d_prime", fname, hypothesis, as_ll(o.pd), Relation::eq, as_ll(dp));
    v.add("depth_eq_min_maximal_independent", fname, hypothesis, as_ll(o.depth), Relation::eq,
          as_ll(inv.min_maximal_independent));
    v.add("cohen_macaulay_iff_unmixed", fname, hypothesis, as_ll(cm), Relation::iff, as_ll(fl.unmixed));
    v.add("chain_bight_le_pd", fname, true, as_ll(inv.bight), Relation::le, as_ll(o.pd));
    v.add("chain_pd_le_n_minus_epsilon", fname, no_isolated, as_ll(o.pd), Relation::le, as_ll(n_minus_eps));
    v.add("reg_ge_c", fname, true, as_ll(o.reg), Relation::ge, as_ll(c));
    v.add("pd_ge_d", fname, true, as_ll(o.pd), Relation::ge, as_ll(d));
    v.add("chordal_pd_eq_d", fname, fl.chordal, as_ll(o.pd), Relation::eq, as_ll(d));

    if (options.dual_checks) {
      const auto terai = attempt([&] { return terai_check(g, o.field, limits, exec); });
      std::optional<int> pd_dual, reg_dual;
      if (terai.value) pd_dual = terai.value->pd_dual;
      reg_dual = attempt([&] {
                   return ideal_regularity(alexander_dual_of_edge_ideal(g, limits).ideal, o.field, limits, exec);
                 }).value;
      v.add("terai_pd_dual_eq_reg", fname, true, as_ll(pd_dual), Relation::eq, as_ll(o.reg));
      v.add("pd_eq_reg_dual", fname, true, as_ll(o.pd), Relation::eq, as_ll(reg_dual));

      std::optional<Count> pd_bound, reg_bound;
      try {
        Count p, q;
        for (Vertex x : g.vertices()) {
          const DualBoundsResult b = dual_bounds_check(g, x, o.field, limits, exec);
          ++p.checked;
          ++q.checked;
          p.passed += b.pd_bound;
          q.passed += b.reg_bound;
        }
        pd_bound = p;
        reg_bound = q;
      } catch (const ResourceError&) {
      }
      v.add("dual_pd_bound", fname, true, passed(pd_bound), Relation::eq, checked(pd_bound));
      v.add("dual_reg_bound", fname, true, passed(reg_bound), Relation::eq, checked(reg_bound));
    }

    if (hypothesis == false) {
      const std::string gap = hypothesis_gap(fl) + ", " + fname;
      note_difference(r.meta.notes, gap, "reg", o.reg, "c", c);
      note_difference(r.meta.notes, gap, "pd", o.pd, "bight", inv.bight);
      note_difference(r.meta.notes, gap, "pd", o.pd, "d'", dp);
      note_difference(r.meta.notes, gap, "depth", o.depth, "min maximal independent", inv.min_maximal_independent);
    }
  }
  if (hypothesis == false)
    note_difference(r.meta.notes, hypothesis_gap(fl), "bight", inv.bight, "d'", dp);
  return r;
}

}  // namespace edgeideal
