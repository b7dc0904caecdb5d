#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "psolv/catalog.hpp"
#include "psolv/cohomology.hpp"
#include "psolv/normal_lattice.hpp"
#include "test_util.hpp"

using psolv::ModPAbelianization;
using psolv::PermGroup;
using psolv::Permutation;
using test_util::perm;

namespace {

PermGroup klein_in_s4() {
  return PermGroup(4, {perm("(1 2)(3 4)", 4), perm("(1 3)(2 4)", 4)});
}

/// Counts homomorphisms G -> F_p without any group machinery: tries every
/// value assignment on the generators and walks the multiplication table.
unsigned brute_hom_count(const PermGroup& group, std::uint64_t p) {
  unsigned count = 0;
  const std::size_t group_size = group.elements().size();
  const auto& gens = group.generators();
  std::uint64_t assignments = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) assignments *= p;
  for (std::uint64_t a = 0; a < assignments; ++a) {
    std::vector<std::uint64_t> phi(gens.size());
    std::uint64_t rest = a;
    for (std::size_t i = 0; i < gens.size(); ++i) {
      phi[i] = rest % p;
      rest /= p;
    }
    std::map<Permutation, std::uint64_t> value{{group.identity(), 0}};
    std::vector<Permutation> frontier{group.identity()};
    bool ok = true;
    for (std::size_t head = 0; head < frontier.size() && ok; ++head)
      for (std::size_t i = 0; i < gens.size() && ok; ++i) {
        Permutation next = frontier[head] * gens[i];
        std::uint64_t v = (value[frontier[head]] + phi[i]) % p;
        auto [it, inserted] = value.emplace(next, v);
        if (inserted)
          frontier.push_back(next);
        else if (it->second != v)
          ok = false;
      }
    if (ok && value.size() == group_size) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("mod-p abelianization dimensions") {
  CHECK(ModPAbelianization(klein_in_s4(), 2).dim() == 2);

  PermGroup a5 = psolv::alternating_group(5);
  for (std::uint64_t p : {2, 3, 5}) CHECK(ModPAbelianization(a5, p).dim() == 0);

  // Hom(S4, F_2) has 2 elements (trivial and sign), so the dimension is 1.
  PermGroup s4 = psolv::symmetric_group(4);
  CHECK(brute_hom_count(s4, 2) == 2);
  CHECK(ModPAbelianization(s4, 2).dim() == 1);
}

TEST_CASE("projection is a homomorphism killing p-th powers and commutators") {
  for (const auto& name : {"S4", "D8", "Q8", "SL(2,3)", "A4", "C6"}) {
    PermGroup g = psolv::catalog_get(name);
    for (std::uint64_t p : {2, 3}) {
      ModPAbelianization ab(g, p);
      CHECK(psolv::p_part(g.order() / ab.kernel().order(), p) ==
            g.order() / ab.kernel().order());
      auto sample = test_util::random_elements(g, 14, 29);
      auto add = [&](std::vector<std::uint64_t> a, const std::vector<std::uint64_t>& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] = (a[i] + b[i]) % p;
        return a;
      };
      for (std::size_t i = 0; i + 1 < sample.size(); i += 2) {
        const Permutation& x = sample[i];
        const Permutation& y = sample[i + 1];
        CHECK(ab.project(x * y) == add(ab.project(x), ab.project(y)));
        CHECK(ab.project(x.power(p)) == std::vector<std::uint64_t>(ab.dim(), 0));
        CHECK(ab.project(Permutation::commutator(x, y)) ==
              std::vector<std::uint64_t>(ab.dim(), 0));
      }
    }
  }
}

TEST_CASE("abelianization quotient cap") {
  psolv::Limits tight;
  tight.quotient_degree_cap = 2;
  CHECK_THROWS_AS(psolv::ModPAbelianization(psolv::dihedral_group(8), 2, tight),
                  psolv::capacity_error);
}

TEST_CASE("h1_dim worked values") {
  CHECK(psolv::h1_dim(psolv::cyclic_group(2), 2) == 1);
  CHECK(psolv::h1_dim(psolv::cyclic_group(3), 3) == 1);
  CHECK(psolv::h1_dim(psolv::symmetric_group(3), 2) == 1);
  CHECK(psolv::h1_dim(psolv::dihedral_group(8), 2) == 2);
  CHECK(psolv::h1_dim(psolv::quaternion_group(), 2) == 2);
  CHECK(psolv::h1_dim(psolv::symmetric_group(4), 2) == 1);
}

TEST_CASE("conjugation action") {
  SECTION("a group acting on its own abelianization acts trivially") {
    PermGroup d8 = psolv::dihedral_group(8);
    ModPAbelianization ab(d8, 2);
    psolv::ConjugationAction action(ab, d8);
    for (const auto& m : action.matrices())
      CHECK(m == psolv::FpMatrix::identity(2, ab.dim()));
  }
  SECTION("Sylow-2 of S4 acts on the Klein subgroup through a swap of order 2") {
    PermGroup s4 = psolv::symmetric_group(4);
    PermGroup v4 = klein_in_s4();
    PermGroup syl = psolv::sylow_subgroup(s4, 2);
    ModPAbelianization ab(v4, 2);
    psolv::ConjugationAction action(ab, syl);
    std::set<std::vector<std::uint64_t>> closure;
    std::vector<psolv::FpMatrix> frontier{psolv::FpMatrix::identity(2, ab.dim())};
    auto key = [&](const psolv::FpMatrix& m) {
      std::vector<std::uint64_t> k;
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) k.push_back(m.at(r, c));
      return k;
    };
    closure.insert(key(frontier[0]));
    for (std::size_t head = 0; head < frontier.size(); ++head)
      for (const auto& m : action.matrices()) {
        psolv::FpMatrix next = frontier[head] * m;
        if (closure.insert(key(next)).second) frontier.push_back(next);
      }
    CHECK(closure.size() == 2);
  }
  SECTION("trivial module gives a zero-dimensional action") {
    ModPAbelianization ab(PermGroup::trivial(4), 2);
    psolv::ConjugationAction action(ab, psolv::symmetric_group(4));
    CHECK(ab.dim() == 0);
  }
  SECTION("compatibility and invertibility on sampled elements") {
    PermGroup s4 = psolv::symmetric_group(4);
    PermGroup a4 = psolv::alternating_group(4);
    ModPAbelianization ab(a4, 3);
    psolv::ConjugationAction action(ab, s4);
    for (const auto& m : action.matrices()) CHECK(m.is_invertible());
    for (const auto& g : a4.elements())
      for (std::size_t i = 0; i < s4.generators().size(); ++i) {
        std::vector<std::uint64_t> lhs = ab.project(g.conjugated_by(s4.generators()[i]));
        psolv::FpMatrix row(3, 1, ab.dim());
        row.set_row(0, ab.project(g));
        psolv::FpMatrix mapped = row * action.matrices()[i];
        CHECK(lhs == mapped.row(0));
      }
  }
  SECTION("actor that does not normalize is a contract violation") {
    PermGroup c3(4, {perm("(1 2 3)", 4)});
    ModPAbelianization ab(c3, 3);
    CHECK_THROWS_AS(psolv::ConjugationAction(ab, PermGroup(4, {perm("(3 4)", 4)})),
                    psolv::contract_error);
  }
}

TEST_CASE("h1_fixed_dim worked values") {
  PermGroup s4 = psolv::symmetric_group(4);
  PermGroup syl = psolv::sylow_subgroup(s4, 2);

  PermGroup a5 = psolv::alternating_group(5);
  CHECK(psolv::h1_fixed_dim(a5, psolv::sylow_subgroup(a5, 2), 2) == 0);

  CHECK(psolv::h1_fixed_dim(s4, syl, 2) == 1);
  CHECK(psolv::h1_fixed_dim(klein_in_s4(), syl, 2) == 1);
}

TEST_CASE("hom-counting oracle") {
  CHECK(psolv::h1_hom_oracle(PermGroup::trivial(4), PermGroup::trivial(4), 2) == 0);
  PermGroup s4 = psolv::symmetric_group(4);
  PermGroup syl = psolv::sylow_subgroup(s4, 2);
  CHECK(psolv::h1_hom_oracle(klein_in_s4(), syl, 2) == 1);
  PermGroup q8 = psolv::quaternion_group();
  CHECK(psolv::h1_hom_oracle(q8, q8, 2) == 2);

  SECTION("capacity cap") {
    psolv::Limits tight;
    tight.hom_oracle_cap = 3;
    CHECK_THROWS_AS(psolv::h1_hom_oracle(s4, s4, 2, tight), psolv::capacity_error);
  }
}

TEST_CASE("fixed dims agree with the oracle on catalog normal pairs") {
  for (const auto& name : {"S4", "A4", "A5", "D8", "Q8", "SL(2,3)", "GL(2,3)", "A5xC2"}) {
    PermGroup g = psolv::catalog_get(name);
    for (std::uint64_t p : {2, 3}) {
      if (!psolv::divides(p, g.order())) continue;
      PermGroup syl = psolv::sylow_subgroup(g, p);
      for (const auto& n : psolv::normal_subgroups(g)) {
        INFO(name << " p=" << p << " |N|=" << n.order().get_str());
        CHECK(psolv::h1_fixed_dim(n, syl, p) == psolv::h1_hom_oracle(n, syl, p));
      }
    }
  }
}

TEST_CASE("dimension laws from restriction") {
  for (const auto& name : psolv::catalog_names()) {
    PermGroup g = psolv::catalog_get(name);
    for (std::uint64_t p : {2, 3, 5, 7}) {
      if (!psolv::divides(p, g.order())) continue;
      PermGroup syl = psolv::sylow_subgroup(g, p);
      INFO(name << " p=" << p);
      // Restriction to a Sylow subgroup is injective at the dimension level.
      CHECK(psolv::h1_dim(g, p) <= psolv::h1_dim(syl, p));
      // H^1 factors through the p-group quotient G / O^p(G).
      auto quotient = psolv::quotient_group(g, psolv::o_p(g, p));
      CHECK(psolv::h1_dim(g, p) == psolv::h1_dim(quotient.image(), p));
    }
  }
}

TEST_CASE("a p-group fixes a nonzero vector in a nontrivial p-group module") {
  PermGroup s4 = psolv::symmetric_group(4);
  PermGroup syl = psolv::sylow_subgroup(s4, 2);
  CHECK(psolv::h1_fixed_dim(klein_in_s4(), syl, 2) >= 1);
  PermGroup q8 = psolv::quaternion_group();
  PermGroup z(8, {perm("(1 2)(3 4)(5 6)(7 8)", 8)});  // center of Q8
  CHECK(psolv::h1_fixed_dim(z, q8, 2) >= 1);
}

TEST_CASE("trivial action degenerates to the full dimension") {
  PermGroup q8 = psolv::quaternion_group();
  ModPAbelianization ab(q8, 2);
  psolv::ConjugationAction action(ab, q8);
  for (const auto& m : action.matrices())
    CHECK(m == psolv::FpMatrix::identity(2, ab.dim()));
  CHECK(psolv::h1_fixed_dim(q8, q8, 2) == psolv::h1_dim(q8, 2));
}

TEST_CASE("lemma 2.1 dimension identity") {
  PermGroup s4 = psolv::symmetric_group(4);
  PermGroup a4 = psolv::alternating_group(4);

  SECTION("worked instance (S4, A4, 2): 2 = 1 + 1") {
    PermGroup syl = psolv::sylow_subgroup(s4, 2);
    PermGroup m = psolv::intersection(a4, syl);
    CHECK(psolv::h1_dim(syl, 2) == 2);
    CHECK(psolv::h1_dim(psolv::quotient_group(syl, m).image(), 2) == 1);
    CHECK(psolv::h1_fixed_dim(m, syl, 2) == 1);
    CHECK(psolv::lemma1_dims_check(s4, a4, 2));
  }
  SECTION("trivial N") {
    CHECK(psolv::lemma1_dims_check(s4, PermGroup::trivial(4), 2));
  }
  SECTION("G = N = A5 at p = 2: 2 = 0 + 2") {
    PermGroup a5 = psolv::alternating_group(5);
    CHECK(psolv::lemma1_dims_check(a5, a5, 2));
    PermGroup syl = psolv::sylow_subgroup(a5, 2);
    CHECK(psolv::h1_dim(syl, 2) == 2);
    CHECK(psolv::h1_fixed_dim(psolv::intersection(a5, syl), syl, 2) == 2);
  }
  SECTION("hypothesis violations are contract errors") {
    CHECK_THROWS_AS(psolv::lemma1_dims_check(s4, PermGroup(4, {perm("(1 2)", 4)}), 2),
                    psolv::contract_error);
    // V4 has O^2(V4) = 1 != V4.
    CHECK_THROWS_AS(psolv::lemma1_dims_check(s4, klein_in_s4(), 2), psolv::contract_error);
  }
}
