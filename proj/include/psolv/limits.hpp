#pragma once

#include <cstdint>

namespace psolv {

/// Resource limits for operations that enumerate elements or cosets.
/// Exceeding a limit raises capacity_error; nothing is ever silently truncated.
struct Limits {
  /// Max group order for exhaustive element enumeration (and everything
  /// built on it: normalizers, brute Sylow search, intersections).
  std::uint64_t enumeration_cap = 1'000'000;
  /// Max index |G:N| for coset actions and abelianization quotients.
  std::uint64_t quotient_degree_cap = 100'000;
  /// Max |N| for the homomorphism-counting oracle.
  std::uint64_t hom_oracle_cap = 5'000;
  /// Max |G| for normal-subgroup lattice enumeration.
  std::uint64_t normal_lattice_cap = 10'000;
  /// Max |G| for the exhaustive normal-series length search.
  std::uint64_t exhaustive_series_cap = 2'000;
};

inline const Limits& default_limits() {
  static const Limits limits{};
  return limits;
}

/// Permutation degrees are capped independently of any Limits instance.
inline constexpr unsigned kMaxDegree = 100'000;

}  // namespace psolv
