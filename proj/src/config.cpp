#include "edgeideal/config.hpp"

#include <cstdlib>
#include <string>

#include "edgeideal/errors.hpp"

namespace edgeideal {
namespace {

template <typename T>
void override_from(const char* name, T& slot) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return;
  try {
    std::size_t used = 0;
    const unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    slot = static_cast<T>(v);
  } catch (const std::exception&) {
    throw InputError(std::string("environment variable ") + name + " is not a nonnegative integer");
  }
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

Limits Limits::from_env() {
  Limits l;
  override_from("EDGEIDEAL_ENUM_CUTOFF", l.enumeration_cutoff);
  override_from("EDGEIDEAL_ORACLE_CUTOFF", l.oracle_cutoff);
  override_from("EDGEIDEAL_VD_CUTOFF", l.decomposition_cutoff);
  override_from("EDGEIDEAL_FACE_BUDGET", l.face_budget);
  override_from("EDGEIDEAL_SEARCH_BUDGET", l.search_node_budget);
  return l;
}

Field Field::of_characteristic(std::uint64_t p) {
  if (p == 0) return Field{};
  if (p >= (std::uint64_t{1} << 31) || !is_prime(p))
    throw InputError("field characteristic must be 0 or a prime below 2^31, got " + std::to_string(p));
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

}  // namespace edgeideal
