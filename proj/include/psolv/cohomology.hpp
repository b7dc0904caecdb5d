#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "psolv/errors.hpp"
#include "psolv/fp_matrix.hpp"
#include "psolv/limits.hpp"
#include "psolv/numeric.hpp"
#include "psolv/perm_group.hpp"
#include "psolv/subgroup_ops.hpp"
#include "psolv/sylow.hpp"

namespace psolv {

/// The F_p vector space V(N) = N / N^p[N,N], i.e. H_1(N, F_p), with a
/// homomorphic projection from group elements to coordinate vectors.
///
/// The kernel N^p[N,N] is generated by the derived subgroup together with the
/// p-th powers of N's generators. Coordinates are assigned by processing N's
/// generators in order: the first dim generators whose cosets are independent
/// become the basis, so projection is deterministic.
class ModPAbelianization {
public:
  ModPAbelianization(const PermGroup& source, std::uint64_t p,
                     const Limits& limits = default_limits())
      : source_(source), p_(p), kernel_(build_kernel(source, p)) {
    mpz_class index = source_.order() / kernel_.order();
    if (index > static_cast<unsigned long>(limits.quotient_degree_cap))
      throw capacity_error("mod-p abelianization index " + index.get_str() +
                           " exceeds quotient degree cap " +
                           std::to_string(limits.quotient_degree_cap));
    if (!is_power_of(index, p))
      throw internal_error("mod-p abelianization quotient is not a p-power");
    dim_ = log_base_p(index, p);

    // Coset representatives of the kernel in N, identity first.
    reps_.push_back(source_.identity());
    for (std::size_t head = 0; head < reps_.size(); ++head)
      for (const auto& g : source_.generators()) {
        Permutation t = reps_[head] * g;
        if (coset_of(t) == reps_.size()) reps_.push_back(std::move(t));
      }
    if (!index.fits_ulong_p() || reps_.size() != index.get_ui())
      throw internal_error("abelianization coset enumeration mismatch");

    // Label cosets with F_p^dim coordinates, extending one basis vector per
    // independent generator image.
    labels_.assign(reps_.size(), std::vector<std::uint64_t>(dim_, 0));
    std::vector<char> has_label(reps_.size(), 0);
    has_label[0] = 1;
    std::vector<std::size_t> labeled{0};
    unsigned next_basis = 0;
    for (const auto& g : source_.generators()) {
      std::size_t c = coset_of(g);
      if (has_label[c]) {
        generator_coords_.push_back(labels_[c]);
        continue;
      }
      if (next_basis >= dim_) throw internal_error("abelianization basis overflow");
      unsigned b = next_basis++;
      basis_elements_.push_back(g);
      std::vector<std::size_t> known = labeled;
      Permutation power = g;
      for (std::uint64_t j = 1; j < p_; ++j) {
        for (std::size_t idx : known) {
          Permutation t = reps_[idx] * power;
          std::size_t cj = coset_of(t);
          if (has_label[cj]) throw internal_error("abelianization label clash");
          labels_[cj] = labels_[idx];
          labels_[cj][b] = j;
          has_label[cj] = 1;
          labeled.push_back(cj);
        }
        power = power * g;
      }
      generator_coords_.push_back(labels_[c]);
    }
    if (next_basis != dim_ || labeled.size() != reps_.size())
      throw internal_error("abelianization labeling incomplete");
  }

  const PermGroup& source() const { return source_; }
  const PermGroup& kernel() const { return kernel_; }
  std::uint64_t prime() const { return p_; }
  unsigned dim() const { return dim_; }

  /// Elements of N whose images form the coordinate basis.
  const std::vector<Permutation>& basis_elements() const { return basis_elements_; }

  /// Coordinates of N's i-th generator.
  const std::vector<std::uint64_t>& generator_coords(std::size_t i) const {
    return generator_coords_[i];
  }

  /// Coordinate vector of an element of N in F_p^dim.
  std::vector<std::uint64_t> project(const Permutation& g) const {
    if (!source_.contains(g)) throw contract_error("project: element outside the source group");
    std::size_t c = coset_of(g);
    if (c == reps_.size()) throw internal_error("project: coset not found");
    return labels_[c];
  }

private:
  static PermGroup build_kernel(const PermGroup& source, std::uint64_t p) {
    require_prime(p);
    std::vector<Permutation> gens = derived_subgroup(source).generators();
    for (const auto& g : source.generators()) {
      Permutation gp = g.power(p);
      if (!gp.is_identity()) gens.push_back(std::move(gp));
    }
    return PermGroup(source.degree(), gens);
  }

  std::size_t coset_of(const Permutation& t) const {
    for (std::size_t j = 0; j < reps_.size(); ++j)
      if (kernel_.contains(t * reps_[j].inverse())) return j;
    return reps_.size();
  }

  PermGroup source_;
  std::uint64_t p_;
  PermGroup kernel_;
  unsigned dim_ = 0;
  std::vector<Permutation> reps_;
  std::vector<std::vector<std::uint64_t>> labels_;
  std::vector<Permutation> basis_elements_;
  std::vector<std::vector<std::uint64_t>> generator_coords_;
};

inline ModPAbelianization mod_p_abelianization(const PermGroup& group, std::uint64_t p,
                                               const Limits& limits = default_limits()) {
  return ModPAbelianization(group, p, limits);
}

/// dim_{F_p} H^1(G) = dim_{F_p} Hom(G, F_p) = dim of the mod-p abelianization.
inline unsigned h1_dim(const PermGroup& group, std::uint64_t p,
                       const Limits& limits = default_limits()) {
  return ModPAbelianization(group, p, limits).dim();
}

/// The conjugation action of P on V(N): one invertible matrix per P-generator,
/// satisfying project(x^{-1} g x) = project(g) * matrix(x) as row vectors.
class ConjugationAction {
public:
  ConjugationAction(const ModPAbelianization& module, const PermGroup& actor)
      : module_(&module), actor_(&actor) {
    for (const auto& x : actor.generators())
      for (const auto& n : module.source().generators())
        if (!module.source().contains(n.conjugated_by(x)))
          throw contract_error("conjugation action: actor does not normalize the module source");
    for (const auto& x : actor.generators()) {
      FpMatrix m(module.prime(), module.dim(), module.dim());
      for (unsigned i = 0; i < module.dim(); ++i)
        m.set_row(i, module.project(module.basis_elements()[i].conjugated_by(x)));
      if (!m.is_invertible())
        throw internal_error("conjugation action produced a singular matrix");
      matrices_.push_back(std::move(m));
    }
  }

  const std::vector<FpMatrix>& matrices() const { return matrices_; }
  const ModPAbelianization& module() const { return *module_; }

  /// Rows spanning the coinvariant relation subspace { v A_x - v }.
  FpMatrix relation_rows() const {
    std::uint64_t p = module_->prime();
    unsigned d = module_->dim();
    FpMatrix rows(p, matrices_.size() * d, d);
    for (std::size_t k = 0; k < matrices_.size(); ++k)
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
          std::uint64_t delta = i == j ? 1 : 0;
          rows.at(k * d + i, j) = (matrices_[k].at(i, j) + p - delta) % p;
        }
    return rows;
  }

private:
  const ModPAbelianization* module_;
  const PermGroup* actor_;
  std::vector<FpMatrix> matrices_;
};

inline ConjugationAction conjugation_action(const ModPAbelianization& module,
                                            const PermGroup& actor) {
  return ConjugationAction(module, actor);
}

/// dim H^1(N)^P, computed as the dimension of the coinvariant space
/// H_1(N)_P = V(N) / span{ v A_x - v }; the fixed-point dimension of the dual
/// action equals the coinvariant dimension.
inline unsigned h1_fixed_dim(const PermGroup& normal_subgroup, const PermGroup& actor,
                             std::uint64_t p, const Limits& limits = default_limits()) {
  ModPAbelianization module(normal_subgroup, p, limits);
  ConjugationAction action(module, actor);
  if (module.dim() == 0) return 0;
  return module.dim() - static_cast<unsigned>(action.relation_rows().rank());
}

/// Independent oracle for h1_fixed_dim: enumerates every map fixed by a value
/// assignment on N's generators, checks the homomorphism property over the
/// whole Cayley graph of N, filters by P-invariance, and returns log_p of the
/// number of fixed homomorphisms. Shares nothing with the coinvariant path.
inline unsigned h1_hom_oracle(const PermGroup& normal_subgroup, const PermGroup& actor,
                              std::uint64_t p, const Limits& limits = default_limits()) {
  require_prime(p);
  if (normal_subgroup.order() > static_cast<unsigned long>(limits.hom_oracle_cap))
    throw capacity_error("hom oracle needs |N| <= " + std::to_string(limits.hom_oracle_cap) +
                         ", got " + normal_subgroup.order().get_str());
  for (const auto& x : actor.generators())
    for (const auto& n : normal_subgroup.generators())
      if (!normal_subgroup.contains(n.conjugated_by(x)))
        throw contract_error("hom oracle: actor does not normalize N");

  Limits local = limits;
  local.enumeration_cap = std::max(local.enumeration_cap, limits.hom_oracle_cap);
  const std::vector<Permutation> elements = normal_subgroup.elements(local);
  std::unordered_map<Permutation, std::size_t, PermutationHash> index;
  index.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);

  const auto& gens = normal_subgroup.generators();
  const std::size_t k = gens.size();
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (assignments > (std::uint64_t{1} << 40) / p)
      throw capacity_error("hom oracle: too many candidate assignments");
    assignments *= p;
  }

  std::size_t id_index = index.at(normal_subgroup.identity());
  std::uint64_t fixed_count = 0;
  std::vector<std::int64_t> value(elements.size());
  std::vector<std::size_t> order;
  order.reserve(elements.size());
  for (std::uint64_t a = 0; a < assignments; ++a) {
    std::vector<std::uint64_t> phi(k);
    std::uint64_t rest = a;
    for (std::size_t i = 0; i < k; ++i) {
      phi[i] = rest % p;
      rest /= p;
    }
    // Propagate values over the Cayley graph; any clash means the assignment
    // does not define a homomorphism.
    std::fill(value.begin(), value.end(), -1);
    order.clear();
    value[id_index] = 0;
    order.push_back(id_index);
    bool consistent = true;
    for (std::size_t head = 0; head < order.size() && consistent; ++head) {
      std::size_t e = order[head];
      for (std::size_t i = 0; i < k && consistent; ++i) {
        std::size_t f = index.at(elements[e] * gens[i]);
        std::int64_t expected = static_cast<std::int64_t>(
            (static_cast<std::uint64_t>(value[e]) + phi[i]) % p);
        if (value[f] < 0) {
          value[f] = expected;
          order.push_back(f);
        } else if (value[f] != expected) {
          consistent = false;
        }
      }
    }
    if (!consistent || order.size() != elements.size()) {
      if (consistent) throw internal_error("hom oracle: Cayley graph not connected");
      continue;
    }
    // P-invariance: phi(x^{-1} g x) = phi(g) suffices on generators since both
    // sides are homomorphisms in g.
    bool invariant = true;
    for (const auto& x : actor.generators()) {
      for (std::size_t i = 0; i < k && invariant; ++i) {
        std::size_t conj = index.at(gens[i].conjugated_by(x));
        if (value[conj] != static_cast<std::int64_t>(phi[i])) invariant = false;
      }
      if (!invariant) break;
    }
    if (invariant) ++fixed_count;
  }

  mpz_class count(static_cast<unsigned long>(fixed_count));
  return log_base_p(count, p);
}

/// The dimension identity of the restriction sequence: with P a Sylow
/// p-subgroup of G, N normal in G with O^p(N) = N, and M = N \cap P,
///   dim H^1(P) = dim H^1(P/M) + dim H^1(M)^P.
inline bool lemma1_dims_check(const PermGroup& group, const PermGroup& normal_subgroup,
                              std::uint64_t p, const Limits& limits = default_limits()) {
  if (!is_normal(group, normal_subgroup))
    throw contract_error("lemma1_dims_check: N must be normal in G");
  if (!o_p(normal_subgroup, p, limits).same_group_as(normal_subgroup))
    throw contract_error("lemma1_dims_check: N must satisfy O^p(N) = N");
  PermGroup sylow = sylow_subgroup(group, p, limits);
  PermGroup m = intersection(normal_subgroup, sylow, limits);
  unsigned lhs = h1_dim(sylow, p, limits);
  unsigned quotient_dim = h1_dim(quotient_group(sylow, m, limits).image(), p, limits);
  unsigned fixed_dim = h1_fixed_dim(m, sylow, p, limits);
  return lhs == quotient_dim + fixed_dim;
}

}  // namespace psolv
