#include "edgeideal/homology.hpp"

#include <algorithm>
#include <exception>
#include <vector>

#include <omp.h>

#include "edgeideal/errors.hpp"
#include "edgeideal/exact_rank.hpp"

namespace edgeideal {
namespace {

// Boundary map from k-vertex faces to (k-1)-vertex faces with the
// ascending-vertex orientation: d[v0..v_{k-1}] = sum_t (-1)^t [.. omit v_t ..].
IntMatrix boundary_matrix(const std::vector<VertexSet>& lower, const std::vector<VertexSet>& upper) {
  IntMatrix m(lower.size(), upper.size());
  for (std::size_t col = 0; col < upper.size(); ++col) {
    int t = 0;
    for (Vertex v : upper[col]) {
      const VertexSet facet = upper[col].without(v);
      const auto it = std::lower_bound(lower.begin(), lower.end(), facet);
      m(static_cast<std::size_t>(it - lower.begin()), col) = (t % 2 == 0) ? 1 : -1;
      ++t;
    }
  }
  return m;
}

void check_oracle_cutoff(const SquarefreeMonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_unit()) throw DomainError("Betti table of R/R requested (unit ideal)");
  if (ideal.variables() > limits.oracle_cutoff)
    throw ResourceError("Hochster oracle on " + std::to_string(ideal.variables()) +
                        " variables exceeds the cutoff " + std::to_string(limits.oracle_cutoff));
}

// Adds the contribution of one support W into a dense (i, j) accumulator.
void accumulate(const SquarefreeMonomialIdeal& ideal, VertexSet w, Field field, const Limits& limits,
                std::vector<std::uint64_t>& acc, int stride) {
  const FaceLayers layers = stanley_reisner_faces(ideal, w, limits);
  const auto ranks = reduced_homology_ranks(layers, field);
  const int j = w.size();
  for (const auto& [d, rank] : ranks) {
    if (rank == 0) continue;
    const int i = j - d - 1;
    acc[static_cast<std::size_t>(i * stride + j)] += rank;
  }
}

BettiTable to_table(const std::vector<std::uint64_t>& acc, int n, int stride, Field field) {
  BettiTable table(n, field);
  for (int i = 0; i < stride; ++i)
    for (int j = 0; j < stride; ++j)
      if (const auto v = acc[static_cast<std::size_t>(i * stride + j)]; v != 0) table.add(i, j, v);
  return table;
}

// All unions of generator supports, the empty union included.
std::vector<VertexSet> generator_unions(const SquarefreeMonomialIdeal& ideal, const Limits& limits) {
  std::vector<VertexSet> unions{VertexSet{}};
  for (VertexSet g : ideal.generators()) {
    const std::size_t before = unions.size();
    for (std::size_t k = 0; k < before; ++k) unions.push_back(unions[k] | g);
    std::sort(unions.begin(), unions.end());
    unions.erase(std::unique(unions.begin(), unions.end()), unions.end());
    if (unions.size() > limits.face_budget) throw ResourceError("lcm lattice exceeds the face budget");
  }
  std::stable_sort(unions.begin(), unions.end(),
                   [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  return unions;
}

}  // namespace

std::map<int, std::uint64_t> reduced_homology_ranks(const FaceLayers& layers, Field field) {
  std::map<int, std::uint64_t> out;
  if (layers.empty() || layers[0].empty()) return out;
  const std::size_t top = layers.size();  // cardinalities 0 .. top-1
  std::vector<std::uint64_t> rank(top + 1, 0);  // rank[k]: boundary out of k-vertex faces
  for (std::size_t k = 1; k < top; ++k)
    if (!layers[k].empty()) rank[k] = rank_over(boundary_matrix(layers[k - 1], layers[k]), field);
  for (std::size_t k = 0; k < top; ++k) {
    const std::uint64_t cycles = layers[k].size() - rank[k];
    out[static_cast<int>(k) - 1] = cycles - rank[k + 1];
  }
  return out;
}

std::map<int, std::uint64_t> reduced_homology_ranks(const SimplicialComplex& c, Field field,
                                                    const Limits& limits) {
  return reduced_homology_ranks(c.faces(limits), field);
}

void BettiTable::add(int i, int j, std::uint64_t count) {
  if (count == 0) return;
  entries_[{i, j}] += count;
}

std::uint64_t BettiTable::at(int i, int j) const {
  const auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

int BettiTable::regularity() const {
  int r = 0;
  for (const auto& [ij, v] : entries_) r = std::max(r, ij.second - ij.first);
  return r;
}

int BettiTable::projective_dimension() const {
  int p = 0;
  for (const auto& [ij, v] : entries_) p = std::max(p, ij.first);
  return p;
}

std::string BettiTable::to_text() const {
  std::string out;
  for (const auto& [ij, v] : entries_)
    out += std::to_string(ij.first) + " " + std::to_string(ij.second) + " " + std::to_string(v) + "\n";
  return out;
}

BettiTable hochster_betti_table(const SquarefreeMonomialIdeal& ideal, Field field, const Limits& limits,
                                Execution exec) {
  check_oracle_cutoff(ideal, limits);
  const int n = ideal.variables();
  const int stride = n + 2;
  const std::vector<VertexSet> supports = generator_unions(ideal, limits);
  const auto count = static_cast<std::int64_t>(supports.size());
  std::vector<std::uint64_t> total(static_cast<std::size_t>(stride * stride), 0);
  std::exception_ptr failure;

#pragma omp parallel if (exec == Execution::parallel && count > 1)
  {
    std::vector<std::uint64_t> local(total.size(), 0);
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t k = 0; k < count; ++k) {
      try {
        accumulate(ideal, supports[static_cast<std::size_t>(k)], field, limits, local, stride);
      } catch (...) {
#pragma omp critical(edgeideal_hochster_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(edgeideal_hochster_reduce)
    for (std::size_t t = 0; t < total.size(); ++t) total[t] += local[t];
  }
  if (failure) std::rethrow_exception(failure);
  return to_table(total, n, stride, field);
}

BettiTable hochster_betti_table_serial(const SquarefreeMonomialIdeal& ideal, Field field,
                                       const Limits& limits) {
  check_oracle_cutoff(ideal, limits);
  const int n = ideal.variables();
  const int stride = n + 2;
  std::vector<std::uint64_t> total(static_cast<std::size_t>(stride * stride), 0);
  std::vector<VertexSet> all;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) all.emplace_back(w);
  std::stable_sort(all.begin(), all.end(), [](VertexSet a, VertexSet b) { return a.size() < b.size(); });
  for (VertexSet w : all) accumulate(ideal, w, field, limits, total, stride);
  return to_table(total, n, stride, field);
}

int krull_dimension(const SquarefreeMonomialIdeal& ideal, const Limits& limits) {
  if (ideal.is_unit()) throw DomainError("R/R has no Krull dimension");
  return stanley_reisner_complex(ideal, limits).dimension() + 1;
}

int krull_dimension(const Graph& g, const Limits& limits) {
  int best = 0;
  for (VertexSet s : maximal_independent_sets(g, limits)) best = std::max(best, s.size());
  return best;
}

}  // namespace edgeideal
