#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "edgeideal/complex.hpp"
#include "edgeideal/config.hpp"
#include "edgeideal/graph.hpp"

namespace edgeideal {

enum class Execution { serial, parallel };

/// dim H~_d(c; k) for d = -1 .. dim(c), zeros included. Empty for the void complex.
std::map<int, std::uint64_t> reduced_homology_ranks(const SimplicialComplex& c, Field field,
                                                    const Limits& limits = {});
/// Same, for a complex given directly by its face layers.
std::map<int, std::uint64_t> reduced_homology_ranks(const FaceLayers& layers, Field field);

/// Graded Betti numbers beta_{i,j}(R/I) over a fixed field.
class BettiTable {
 public:
  BettiTable() = default;
  BettiTable(int n, Field field) : n_(n), field_(field) {}

  void add(int i, int j, std::uint64_t count);
  std::uint64_t at(int i, int j) const;
  const std::map<std::pair<int, int>, std::uint64_t>& entries() const { return entries_; }

  int variables() const { return n_; }
  Field field() const { return field_; }

  /// max(j - i) over nonzero entries.
  int regularity() const;
  /// max i over nonzero entries.
  int projective_dimension() const;
  /// Auslander-Buchsbaum: n - pd.
  int depth() const { return n_ - projective_dimension(); }

  /// Lines "i j beta", sorted by (i, j).
  std::string to_text() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  int n_ = 0;
  Field field_;
  std::map<std::pair<int, int>, std::uint64_t> entries_;
};

/// Hochster's formula: beta_{i,j}(R/I) = sum over |W| = j of dim H~_{j-i-1}(Delta|_W),
/// Delta the Stanley-Reisner complex of I. Only supports W that are unions of
/// generator supports can contribute (any other W has a cone point), and only
/// those are visited. The W loop runs under OpenMP for Execution::parallel.
///
/// Throws DomainError for the unit ideal, ResourceError past limits.oracle_cutoff.
BettiTable hochster_betti_table(const SquarefreeMonomialIdeal& ideal, Field field,
                                const Limits& limits = {}, Execution exec = Execution::parallel);

/// Reference evaluation kept for testing: every W in ascending popcount order,
/// no cone pruning, single thread.
BettiTable hochster_betti_table_serial(const SquarefreeMonomialIdeal& ideal, Field field,
                                       const Limits& limits = {});

/// Krull dimension of R/I: the largest face of the Stanley-Reisner complex.
int krull_dimension(const SquarefreeMonomialIdeal& ideal, const Limits& limits = {});
/// For edge ideals: the independence number, computed combinatorially.
int krull_dimension(const Graph& g, const Limits& limits = {});

}  // namespace edgeideal
