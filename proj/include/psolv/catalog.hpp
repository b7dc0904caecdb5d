#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "psolv/errors.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/permutation.hpp"

namespace psolv {

// ---------------------------------------------------------------------------
// Standard families
// ---------------------------------------------------------------------------

inline PermGroup symmetric_group(unsigned n) {
  if (n == 0) throw input_error("symmetric group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<unsigned> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  std::vector<unsigned> swap01(n);
  std::iota(swap01.begin(), swap01.end(), 0u);
  std::swap(swap01[0], swap01[1]);
  return PermGroup(n, {Permutation(swap01), Permutation(cycle)});
}

inline PermGroup alternating_group(unsigned n) {
  if (n == 0) throw input_error("alternating group needs n >= 1");
  if (n <= 2) return PermGroup::trivial(std::max(n, 1u));
  std::vector<Permutation> gens;
  for (unsigned i = 2; i < n; ++i) {
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 0u);
    images[0] = 1;
    images[1] = i;
    images[i] = 0;
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, gens);
}

inline PermGroup cyclic_group(unsigned n) {
  if (n == 0) throw input_error("cyclic group needs n >= 1");
  if (n == 1) return PermGroup::trivial(1);
  std::vector<unsigned> cycle(n);
  for (unsigned i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
  return PermGroup(n, {Permutation(cycle)});
}

/// Dihedral group of order 2n acting on the n vertices of a regular n-gon.
inline PermGroup dihedral_group(unsigned order) {
  if (order < 4 || order % 2 != 0) throw input_error("dihedral group needs even order >= 4");
  unsigned n = order / 2;
  std::vector<unsigned> rotation(n), reflection(n);
  for (unsigned i = 0; i < n; ++i) {
    rotation[i] = (i + 1) % n;
    reflection[i] = (n - i) % n;
  }
  return PermGroup(n, {Permutation(rotation), Permutation(reflection)});
}

/// Quaternion group on the 8 symbols {1, -1, i, -i, j, -j, k, -k} (in that
/// order) via right multiplication by i and j.
inline PermGroup quaternion_group() {
  std::vector<unsigned> by_i = {2, 3, 1, 0, 7, 6, 4, 5};
  std::vector<unsigned> by_j = {4, 5, 6, 7, 1, 0, 3, 2};
  return PermGroup(8, {Permutation(by_i), Permutation(by_j)});
}

inline PermGroup direct_product(const PermGroup& a, const PermGroup& b) {
  unsigned n = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& g : a.generators()) {
    std::vector<unsigned> images(n);
    for (unsigned i = 0; i < a.degree(); ++i) images[i] = g[i];
    for (unsigned i = a.degree(); i < n; ++i) images[i] = i;
    gens.emplace_back(std::move(images));
  }
  for (const auto& g : b.generators()) {
    std::vector<unsigned> images(n);
    std::iota(images.begin(), images.end(), 0u);
    for (unsigned i = 0; i < b.degree(); ++i) images[a.degree() + i] = a.degree() + g[i];
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, gens);
}

// ---------------------------------------------------------------------------
// 2x2 matrix groups over F_q, acting on the q^2 - 1 nonzero column vectors
// ---------------------------------------------------------------------------

struct Mat2 {
  // Row-major entries a b / c d, reduced mod q.
  std::uint64_t a, b, c, d;
  std::uint64_t q;

  std::uint64_t det() const { return (a * d % q + q - b * c % q) % q; }
};

/// The permutation of the nonzero vectors of F_q^2 induced by v -> M v.
/// Vectors are indexed in lexicographic (x, y) order, skipping (0, 0).
inline Permutation permutation_from_matrix(const Mat2& m) {
  std::uint64_t q = m.q;
  auto index_of = [q](std::uint64_t x, std::uint64_t y) {
    return static_cast<unsigned>(x * q + y - 1);
  };
  unsigned degree = static_cast<unsigned>(q * q - 1);
  std::vector<unsigned> images(degree);
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      std::uint64_t nx = (m.a * x + m.b * y) % q;
      std::uint64_t ny = (m.c * x + m.d * y) % q;
      if (nx == 0 && ny == 0) throw input_error("matrix is singular");
      images[index_of(x, y)] = index_of(nx, ny);
    }
  return Permutation(std::move(images));
}

/// SL(2, q) generated by the two elementary transvections.
inline PermGroup special_linear_2(std::uint64_t q) {
  Mat2 upper{1, 1, 0, 1, q};
  Mat2 lower{1, 0, 1, 1, q};
  return PermGroup(static_cast<unsigned>(q * q - 1),
                   {permutation_from_matrix(upper), permutation_from_matrix(lower)});
}

/// GL(2, q): SL(2, q) extended by diag(r, 1) for a primitive root r mod q.
inline PermGroup general_linear_2(std::uint64_t q, std::uint64_t primitive_root) {
  Mat2 upper{1, 1, 0, 1, q};
  Mat2 lower{1, 0, 1, 1, q};
  Mat2 diag{primitive_root % q, 0, 0, 1, q};
  return PermGroup(static_cast<unsigned>(q * q - 1),
                   {permutation_from_matrix(upper), permutation_from_matrix(lower),
                    permutation_from_matrix(diag)});
}

/// A Schur cover of S_5, order 240: the subgroup of SL(2, 25) generated by
/// SL(2, 5) and x = 2*sqrt(2) * diag(2, 1). Here x has determinant 1,
/// x^2 = diag(2, 3) lies in SL(2, 5), the center is {+-I}, and the central
/// quotient is PGL(2, 5) = S_5, so the extension is stem. The group acts
/// faithfully on the 48-vector orbit (F_5^2 \ 0) u 2*sqrt(2)*(F_5^2 \ 0);
/// on block/vector pairs only F_5 arithmetic is needed:
///   SL(2, 5) generators act blockwise, and
///   x: (0, v) -> (1, Dv), (1, w) -> (0, 3Dw)  with D = diag(2, 1),
/// since x^2 scales by (2*sqrt(2))^2 = 3. The Sylow 2-subgroup comes out as
/// Q_16, a Schur cover of D_8.
///
/// (The determinant-(+-1) subgroup of GL(2, 5) is NOT a double cover of S_5:
/// it contains the scalar 2I of determinant -1, so its center is C_4 and its
/// central quotient is A_5; that group is SL(2, 5) o C_4.)
inline PermGroup schur_cover_s5() {
  constexpr std::uint64_t q = 5;
  auto vector_index = [](std::uint64_t x, std::uint64_t y) {
    return static_cast<unsigned>(x * q + y - 1);
  };
  auto blockwise = [&](const Mat2& m) {
    std::vector<unsigned> images(48);
    for (std::uint64_t x = 0; x < q; ++x)
      for (std::uint64_t y = 0; y < q; ++y) {
        if (x == 0 && y == 0) continue;
        std::uint64_t nx = (m.a * x + m.b * y) % q;
        std::uint64_t ny = (m.c * x + m.d * y) % q;
        images[vector_index(x, y)] = vector_index(nx, ny);
        images[24 + vector_index(x, y)] = 24 + vector_index(nx, ny);
      }
    return Permutation(std::move(images));
  };
  std::vector<unsigned> twist(48);
  for (std::uint64_t x = 0; x < q; ++x)
    for (std::uint64_t y = 0; y < q; ++y) {
      if (x == 0 && y == 0) continue;
      std::uint64_t dx = 2 * x % q, dy = y;
      twist[vector_index(x, y)] = 24 + vector_index(dx, dy);
      twist[24 + vector_index(x, y)] = vector_index(3 * dx % q, 3 * dy % q);
    }
  return PermGroup(48, {blockwise({1, 1, 0, 1, q}), blockwise({1, 0, 1, 1, q}),
                        Permutation(std::move(twist))});
}

// ---------------------------------------------------------------------------
// Named catalog
// ---------------------------------------------------------------------------

struct CatalogEntry {
  std::string name;
  unsigned degree;
  std::uint64_t expected_order;
  PermGroup (*build)();
  std::string description;
};

inline const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"C2", 2, 2, [] { return cyclic_group(2); }, "cyclic group of order 2"},
      {"C3", 3, 3, [] { return cyclic_group(3); }, "cyclic group of order 3"},
      {"C6", 6, 6, [] { return cyclic_group(6); }, "cyclic group of order 6"},
      {"C15", 15, 15, [] { return cyclic_group(15); }, "cyclic group of order 15"},
      {"S3", 3, 6, [] { return symmetric_group(3); }, "symmetric group on 3 points"},
      {"S4", 4, 24, [] { return symmetric_group(4); }, "symmetric group on 4 points"},
      {"S5", 5, 120, [] { return symmetric_group(5); }, "symmetric group on 5 points"},
      {"A4", 4, 12, [] { return alternating_group(4); }, "alternating group on 4 points"},
      {"A5", 5, 60, [] { return alternating_group(5); }, "alternating group on 5 points"},
      {"D8", 4, 8, [] { return dihedral_group(8); }, "dihedral group of order 8"},
      {"Q8", 8, 8, [] { return quaternion_group(); }, "quaternion group of order 8"},
      {"SL(2,3)", 8, 24, [] { return special_linear_2(3); },
       "2x2 matrices of determinant 1 over F_3 on the 8 nonzero vectors"},
      {"GL(2,3)", 8, 48, [] { return general_linear_2(3, 2); },
       "all invertible 2x2 matrices over F_3 on the 8 nonzero vectors"},
      {"SL(2,5)", 24, 120, [] { return special_linear_2(5); },
       "2x2 matrices of determinant 1 over F_5 on the 24 nonzero vectors"},
      {"2.S5", 48, 240, [] { return schur_cover_s5(); },
       "Schur cover of S_5 inside SL(2,25), on a 48-vector orbit"},
      {"A5xC2", 7, 120, [] { return direct_product(alternating_group(5), cyclic_group(2)); },
       "direct product A5 x C2"},
      {"A5xA5", 10, 3600, [] { return direct_product(alternating_group(5), alternating_group(5)); },
       "direct product A5 x A5"},
      {"A5xS4", 9, 1440, [] { return direct_product(alternating_group(5), symmetric_group(4)); },
       "direct product A5 x S4"},
  };
  return entries;
}

inline std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& entry : catalog_entries()) names.push_back(entry.name);
  return names;
}

inline PermGroup catalog_get(const std::string& name) {
  for (const auto& entry : catalog_entries()) {
    if (entry.name != name) continue;
    PermGroup group = entry.build();
    if (group.degree() != entry.degree ||
        group.order() != static_cast<unsigned long>(entry.expected_order))
      throw internal_error("catalog entry " + name + " built with order " +
                           group.order().get_str() + ", expected " +
                           std::to_string(entry.expected_order));
    return group;
  }
  std::string known;
  for (const auto& entry : catalog_entries()) {
    if (!known.empty()) known += ", ";
    known += entry.name;
  }
  throw input_error("unknown group '" + name + "'; catalog: " + known);
}

}  // namespace psolv
