#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "psolv/errors.hpp"
#include "psolv/limits.hpp"
#include "psolv/numeric.hpp"
#include "psolv/permutation.hpp"

namespace psolv {

namespace detail {

/// Deterministic Schreier-Sims stabilizer chain (base + strong generating set).
///
/// Level i stabilizes base[0..i-1] pointwise. Transversals are stored as
/// Schreier vectors (parent point + generator index) and expanded on demand.
/// Construction is fully deterministic: generators keep their given order,
/// orbits grow in discovery order, and new base points are always the
/// smallest point moved by the offending element.
class StabilizerChain {
public:
  StabilizerChain() = default;

  StabilizerChain(unsigned degree, const std::vector<Permutation>& generators)
      : degree_(degree) {
    std::vector<Permutation> gens;
    for (const auto& g : generators) {
      if (g.degree() != degree) throw input_error("generator degree mismatch");
      if (!g.is_identity()) gens.push_back(g);
    }
    if (gens.empty()) return;

    // Initial base: repeatedly take the smallest point moved by a generator
    // that fixes every base point chosen so far.
    for (const auto& g : gens) {
      if (!fixes_base(g)) continue;
      append_level(static_cast<unsigned>(g.smallest_moved_point()));
    }
    for (const auto& g : gens)
      for (std::size_t i = 0; i < levels_.size(); ++i) {
        levels_[i].gens.push_back(g);
        if (g[levels_[i].base_point] != levels_[i].base_point) break;
      }

    for (auto& level : levels_) recompute_orbit(level);
    complete();
    order_ = 1;
    for (const auto& level : levels_) order_ *= static_cast<unsigned long>(level.orbit.size());
  }

  unsigned degree() const { return degree_; }

  const mpz_class& order() const { return order_; }

  bool contains(const Permutation& g) const {
    auto [residue, stop] = sift(g, 0);
    return stop == levels_.size() && residue.is_identity();
  }

  std::size_t num_levels() const { return levels_.size(); }

  std::size_t orbit_size(std::size_t level) const { return levels_[level].orbit.size(); }

  /// Transversal element u with base^(u) = point, for `point` in the orbit.
  Permutation transversal(std::size_t level, unsigned point) const {
    const Level& lv = levels_[level];
    Permutation u(degree_);
    unsigned x = point;
    while (x != lv.base_point) {
      const Permutation& g = lv.gens[static_cast<std::size_t>(lv.parent_gen[x])];
      u = g * u;
      x = g.inverse()[x];
    }
    return u;
  }

  /// All group elements in a fixed order; every element appears exactly once.
  std::vector<Permutation> elements() const {
    std::vector<Permutation> result{Permutation(degree_)};
    for (std::size_t level = levels_.size(); level-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(result.size() * levels_[level].orbit.size());
      for (const auto& q : result)
        for (unsigned point : levels_[level].orbit) next.push_back(q * transversal(level, point));
      result = std::move(next);
    }
    return result;
  }

private:
  struct Level {
    unsigned base_point = 0;
    std::vector<Permutation> gens;
    std::vector<unsigned> orbit;      // discovery order; orbit[0] == base_point
    std::vector<int> in_orbit;        // point -> 1 if in orbit
    std::vector<int> parent_gen;      // point -> index into gens reaching it
  };

  bool fixes_base(const Permutation& g) const {
    for (const auto& level : levels_)
      if (g[level.base_point] != level.base_point) return false;
    return true;
  }

  void append_level(unsigned base_point) {
    Level level;
    level.base_point = base_point;
    levels_.push_back(std::move(level));
  }

  void recompute_orbit(Level& level) const {
    level.orbit.assign(1, level.base_point);
    level.in_orbit.assign(degree_, 0);
    level.parent_gen.assign(degree_, -1);
    level.in_orbit[level.base_point] = 1;
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      unsigned x = level.orbit[head];
      for (std::size_t gi = 0; gi < level.gens.size(); ++gi) {
        unsigned y = level.gens[gi][x];
        if (!level.in_orbit[y]) {
          level.in_orbit[y] = 1;
          level.parent_gen[y] = static_cast<int>(gi);
          level.orbit.push_back(y);
        }
      }
    }
  }

  /// Sifts g through levels [start, end); returns the residue and the level
  /// index at which sifting stopped (== num_levels when fully sifted).
  std::pair<Permutation, std::size_t> sift(const Permutation& g, std::size_t start) const {
    Permutation residue = g;
    for (std::size_t i = start; i < levels_.size(); ++i) {
      unsigned x = residue[levels_[i].base_point];
      if (x == levels_[i].base_point) continue;
      if (!levels_[i].in_orbit[x]) return {residue, i};
      residue = residue * transversal(i, x).inverse();
    }
    return {residue, levels_.size()};
  }

  /// Verifies every Schreier generator of every level sifts to the identity,
  /// adding residues as strong generators until the chain is complete.
  /// Processes levels bottom-up; a failed sift at level `stop` extends levels
  /// i+1..stop and restarts verification from `stop`, so whenever the index
  /// decreases every deeper level is already certified.
  void complete() {
    std::size_t i = levels_.size() - 1;
    for (;;) {
      bool violation = false;
      for (std::size_t oi = 0; oi < levels_[i].orbit.size() && !violation; ++oi) {
        unsigned x = levels_[i].orbit[oi];
        Permutation ux = transversal(i, x);
        for (std::size_t gi = 0; gi < levels_[i].gens.size() && !violation; ++gi) {
          Permutation s = levels_[i].gens[gi];
          Permutation schreier = ux * s * transversal(i, s[x]).inverse();
          if (schreier.is_identity()) continue;
          auto [residue, stop] = sift(schreier, i + 1);
          if (residue.is_identity() && stop == levels_.size()) continue;
          if (stop == levels_.size())
            append_level(static_cast<unsigned>(residue.smallest_moved_point()));
          for (std::size_t k = i + 1; k <= stop; ++k) {
            levels_[k].gens.push_back(residue);
            recompute_orbit(levels_[k]);
          }
          i = stop;
          violation = true;
        }
      }
      if (violation) continue;
      if (i == 0) break;
      --i;
    }
  }

  unsigned degree_ = 1;
  std::vector<Level> levels_;
  mpz_class order_ = 1;
};

}  // namespace detail

/// A finitely generated permutation group with an eagerly built stabilizer
/// chain. Immutable after construction; safe to share across threads.
class PermGroup {
public:
  PermGroup(unsigned degree, const std::vector<Permutation>& generators)
      : degree_(degree) {
    if (degree == 0) throw input_error("group degree must be positive");
    if (degree > kMaxDegree)
      throw input_error("group degree exceeds " + std::to_string(kMaxDegree));
    for (const auto& g : generators) {
      if (g.degree() != degree)
        throw input_error("generator degree " + std::to_string(g.degree()) +
                          " does not match group degree " + std::to_string(degree));
      if (g.is_identity()) continue;
      bool duplicate = false;
      for (const auto& have : generators_)
        if (have == g) {
          duplicate = true;
          break;
        }
      if (!duplicate) generators_.push_back(g);
    }
    chain_ = detail::StabilizerChain(degree_, generators_);
  }

  static PermGroup trivial(unsigned degree) { return PermGroup(degree, {}); }

  unsigned degree() const { return degree_; }

  const std::vector<Permutation>& generators() const { return generators_; }

  const mpz_class& order() const { return chain_.order(); }

  bool is_trivial() const { return generators_.empty(); }

  Permutation identity() const { return Permutation(degree_); }

  bool contains(const Permutation& g) const {
    if (g.degree() != degree_)
      throw input_error("membership test: degree mismatch (" + std::to_string(g.degree()) +
                        " vs " + std::to_string(degree_) + ")");
    return chain_.contains(g);
  }

  /// True when every generator of H lies in this group.
  bool contains_group(const PermGroup& h) const {
    for (const auto& g : h.generators())
      if (!contains(g)) return false;
    return true;
  }

  /// Group equality as subsets of the symmetric group.
  bool same_group_as(const PermGroup& other) const {
    return degree_ == other.degree_ && order() == other.order() && contains_group(other);
  }

  std::vector<Permutation> elements(const Limits& limits = default_limits()) const {
    if (order() > static_cast<unsigned long>(limits.enumeration_cap))
      throw capacity_error("group order " + order().get_str() +
                           " exceeds enumeration cap " +
                           std::to_string(limits.enumeration_cap));
    return chain_.elements();
  }

  const detail::StabilizerChain& chain() const { return chain_; }

private:
  unsigned degree_;
  std::vector<Permutation> generators_;
  detail::StabilizerChain chain_;
};

/// Requires H <= G (generator membership); true iff conjugating every
/// H-generator by every G-generator stays inside H.
inline bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!g.contains_group(h))
    throw contract_error("is_normal: H is not a subgroup of G");
  for (const auto& x : g.generators())
    for (const auto& y : h.generators())
      if (!h.contains(y.conjugated_by(x))) return false;
  return true;
}

/// The action of G on the right cosets of a normal subgroup N, i.e. the
/// quotient map G -> G/N realized on |G:N| points. Coset 0 is N itself.
class CosetAction {
public:
  CosetAction(const PermGroup& group, const PermGroup& kernel,
              const Limits& limits = default_limits())
      : group_(group), kernel_(kernel) {
    if (!is_normal(group, kernel))
      throw contract_error("quotient requires a normal subgroup");
    mpz_class index = group.order() / kernel.order();
    if (index > static_cast<unsigned long>(limits.quotient_degree_cap))
      throw capacity_error("quotient index " + index.get_str() +
                           " exceeds quotient degree cap " +
                           std::to_string(limits.quotient_degree_cap));

    reps_.push_back(group.identity());
    for (std::size_t head = 0; head < reps_.size(); ++head)
      for (const auto& g : group.generators()) {
        Permutation t = reps_[head] * g;
        if (coset_of(t) == reps_.size()) reps_.push_back(std::move(t));
      }
    if (mpz_class(static_cast<unsigned long>(reps_.size())) != index)
      throw internal_error("coset enumeration found " + std::to_string(reps_.size()) +
                           " cosets, expected " + index.get_str());

    std::vector<Permutation> image_gens;
    image_gens.reserve(group.generators().size());
    for (const auto& g : group.generators()) image_gens.push_back(apply(g));
    image_.emplace(static_cast<unsigned>(reps_.size()), image_gens);
  }

  /// The induced permutation of cosets; the epimorphism G -> G/N.
  Permutation apply(const Permutation& g) const {
    std::vector<unsigned> images(reps_.size());
    for (std::size_t i = 0; i < reps_.size(); ++i) {
      std::size_t j = coset_of(reps_[i] * g);
      if (j == reps_.size()) throw contract_error("coset action applied to a non-member");
      images[i] = static_cast<unsigned>(j);
    }
    return Permutation(std::move(images));
  }

  const PermGroup& image() const { return *image_; }
  const std::vector<Permutation>& coset_representatives() const { return reps_; }
  const PermGroup& kernel_subgroup() const { return kernel_; }

private:
  std::size_t coset_of(const Permutation& t) const {
    for (std::size_t j = 0; j < reps_.size(); ++j)
      if (kernel_.contains(t * reps_[j].inverse())) return j;
    return reps_.size();
  }

  PermGroup group_;
  PermGroup kernel_;
  std::vector<Permutation> reps_;
  std::optional<PermGroup> image_;
};

/// G/N as a permutation group together with the quotient epimorphism.
inline CosetAction quotient_group(const PermGroup& group, const PermGroup& normal,
                                  const Limits& limits = default_limits()) {
  return CosetAction(group, normal, limits);
}

}  // namespace psolv
