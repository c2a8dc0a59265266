#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace edgeideal {

/// Cutoffs and search budgets. Every exponential engine consults one of these
/// and throws ResourceError instead of running away.
///
/// Environment overrides (all optional, read by from_env()):
///   EDGEIDEAL_ENUM_CUTOFF      enumeration_cutoff
///   EDGEIDEAL_ORACLE_CUTOFF    oracle_cutoff
///   EDGEIDEAL_VD_CUTOFF        decomposition_cutoff
///   EDGEIDEAL_FACE_BUDGET      face_budget
///   EDGEIDEAL_SEARCH_BUDGET    search_node_budget
struct Limits {
  int enumeration_cutoff = 25;
  int oracle_cutoff = 16;
  int decomposition_cutoff = 20;
  std::size_t face_budget = std::size_t{1} << 20;
  std::uint64_t search_node_budget = 200'000'000;

  static Limits from_env();
};

/// Coefficient field for homology: characteristic 0 (rationals) or a prime p < 2^31.
class Field {
 public:
  constexpr Field() = default;

  static constexpr Field rationals() { return Field{}; }
  /// Throws InputError unless p is 0 or a prime below 2^31.
  static Field of_characteristic(std::uint64_t p);

  constexpr std::uint32_t characteristic() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }

  std::string name() const;

  friend constexpr bool operator==(Field, Field) = default;

 private:
  constexpr explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

}  // namespace edgeideal
