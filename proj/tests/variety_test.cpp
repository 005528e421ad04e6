#include "doctest.h"

#include <algorithm>

#include "esakia/constructions.hpp"
#include "esakia/duality.hpp"
#include "esakia/variety.hpp"
#include "oracles.hpp"

using namespace esakia;

namespace {

FinitePoset antichain(int n) {
  std::vector<PointSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = bit(i);
  return FinitePoset::from_up_rows(n, std::move(up));
}

FinitePoset chain_poset(int n) {
  std::vector<PointSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = full_set(n) & ~full_set(i);
  return FinitePoset::from_up_rows(n, std::move(up));
}

VarietyPresentation variety_of(const HeytingAlgebra& g) {
  return VarietyPresentation{{g}};
}

}  // namespace

TEST_CASE("fsi representatives of simple varieties") {
  // V(2): only the one-point space
  VarietyPresentation v2 = variety_of(bool2());
  REQUIRE(v2.fsi_representatives().size() == 1);
  CHECK(v2.fsi_representatives()[0].size() == 1);

  // V(2x2): the 2-antichain is not rooted and its merge quotient is a point
  VarietyPresentation vd = variety_of(diamond());
  REQUIRE(vd.fsi_representatives().size() == 1);
  CHECK(vd.fsi_representatives()[0].size() == 1);

  // V(3-chain algebra): point and 2-chain
  VarietyPresentation v3 = variety_of(chain_algebra(3));
  REQUIRE(v3.fsi_representatives().size() == 2);
  CHECK(v3.fsi_representatives()[0].size() == 1);
  CHECK(isomorphic(v3.fsi_representatives()[1], chain_poset(2)));
}

TEST_CASE("fsi representatives are sound and closed") {
  std::vector<HeytingAlgebra> gens{chain_algebra(4), alg_sum(diamond(), bool2()),
                                   dual_algebra(x_n_space(2))};
  for (const auto& g : gens) {
    VarietyPresentation v = variety_of(g);
    for (const auto& rep : v.fsi_representatives()) {
      CHECK(rep.rooted());
      // soundness: the representative's algebra is itself a member
      CHECK(contains(v, dual_algebra(rep)).member);
      auto mv = contains_dual(v, rep);
      CHECK(mv.member);
    }
  }
}

TEST_CASE("membership verdicts") {
  VarietyPresentation v3 = variety_of(chain_algebra(3));
  CHECK(contains(v3, chain_algebra(3)).member);
  CHECK(contains(v3, chain_algebra(2)).member);
  CHECK(contains(v3, diamond()).member);  // 2x2 embeds in 3-chain squared
  CHECK(!contains(v3, chain_algebra(4)).member);

  VarietyPresentation vd = variety_of(diamond());
  CHECK(!contains(vd, chain_algebra(3)).member);
  auto mv = contains(vd, chain_algebra(3));
  CHECK(mv.failing_point >= 0);

  // a sum generator contains the shorter sums
  VarietyPresentation vs = variety_of(alg_sum({bool2(), diamond(), bool2()}));
  CHECK(contains(vs, alg_sum(diamond(), bool2())).member);

  // every generator belongs to its own variety
  for (int n = 1; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      HeytingAlgebra g = dual_algebra(p);
      CHECK(contains(variety_of(g), g).member);
    }
}

TEST_CASE("epicness of the bounds inside the diamond's variety") {
  HeytingAlgebra b = diamond();
  VarietyPresentation v = variety_of(b);
  auto subs = enumerate_subalgebras(b);
  REQUIRE(subs.size() == 2);  // bounds and everything

  // the two-element subalgebra is not epic: two different maps into the
  // variety agree on it
  const SubalgebraHandle& bounds = subs[0];
  REQUIRE(bounds.members.size() == 2);
  EpicVerdict ev = is_epic(b, bounds, v);
  CHECK(!ev.epic);
  REQUIRE(ev.witness.has_value());
  const EpicWitness& w = *ev.witness;
  CHECK(w.space.size() == 1);
  CHECK(w.g != w.h);
  // replay: both maps are Esakia, pointwise related, and differ
  FinitePoset dual = canonical_dual(b).space;
  CHECK(is_esakia_morphism(w.g, w.space, dual).ok);
  CHECK(is_esakia_morphism(w.h, w.space, dual).ok);
  Partition r = subalgebra_to_partition(bounds);
  for (int p = 0; p < w.space.size(); ++p)
    CHECK(r.class_of[w.g[p]] == r.class_of[w.h[p]]);
  CHECK(w.differs_at >= 0);

  // the identity/swap pair on the full 2-antichain also separates: the
  // bounds cannot tell the two points apart
  std::vector<int> ident{0, 1}, swapm{1, 0};
  CHECK(is_esakia_morphism(ident, dual, dual).ok);
  CHECK(is_esakia_morphism(swapm, dual, dual).ok);
  for (int p = 0; p < 2; ++p) CHECK(r.class_of[ident[p]] == r.class_of[swapm[p]]);

  // the whole algebra is trivially epic in itself
  CHECK(is_epic(b, subs[1], v).epic);
}

TEST_CASE("es property on small varieties") {
  CHECK(es_property(variety_of(bool2())).es);
  CHECK(es_property(variety_of(chain_algebra(4))).es);

  EsVerdict v = es_property(variety_of(alg_sum(diamond(), diamond())));
  CHECK(v.es);
  CHECK(!v.log.empty());
  for (const auto& entry : v.log) {
    CHECK(!entry.verdict.epic);
    CHECK(entry.verdict.witness.has_value());
  }
}

TEST_CASE("es property exhaustively over tiny generators") {
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n)) {
      VarietyPresentation v = variety_of(dual_algebra(p));
      CHECK(es_property(v).es);
    }
}

TEST_CASE("epic witnesses re-validate across a pool") {
  std::vector<HeytingAlgebra> gens{chain_algebra(3), diamond(), alg_sum(diamond(), bool2())};
  for (const auto& g : gens) {
    VarietyPresentation v = variety_of(g);
    for (const auto& entry : es_property(v).log) {
      REQUIRE(entry.verdict.witness.has_value());
      const EpicWitness& w = *entry.verdict.witness;
      FinitePoset rep = v.fsi_representatives()[entry.rep_index];
      HeytingAlgebra b = dual_algebra(rep);
      FinitePoset dual = canonical_dual(b).space;
      CHECK(is_esakia_morphism(w.g, w.space, dual).ok);
      CHECK(is_esakia_morphism(w.h, w.space, dual).ok);
      SubalgebraHandle sub{&b, entry.sub_members};
      Partition r = subalgebra_to_partition(sub);
      bool related = true, differ = false;
      for (int p = 0; p < w.space.size(); ++p) {
        related &= r.class_of[w.g[p]] == r.class_of[w.h[p]];
        differ |= w.g[p] != w.h[p];
      }
      CHECK(related);
      CHECK(differ);
      CHECK(w.g[w.differs_at] != w.h[w.differs_at]);
    }
  }
}

TEST_CASE("kg certificates") {
  // V(3-chain) admits the level-1 sum diamond+2 (a Goedel algebra embedding
  // into the square of the 3-chain), so the certificate lands at level 2
  KgCertificate c3 = kg_es_certificate(variety_of(chain_algebra(3)), 2);
  REQUIRE(c3.level.has_value());
  CHECK(*c3.level == 2);
  CHECK(c3.table[0].member == std::vector<bool>{true, false});

  // the same variety is generated by diamond+2 itself
  KgCertificate cd = kg_es_certificate(variety_of(alg_sum(diamond(), bool2())), 3);
  REQUIRE(cd.level.has_value());
  CHECK(*cd.level == 2);

  // the Boolean variety excludes both level-1 sums outright
  KgCertificate cb = kg_es_certificate(variety_of(bool2()), 1);
  REQUIRE(cb.level.has_value());
  CHECK(*cb.level == 1);

  // a deep generator admits deeper sums before exclusion
  HeytingAlgebra deep = alg_sum({diamond(), diamond(), bool2()});
  KgCertificate c2 = kg_es_certificate(variety_of(deep), 3);
  REQUIRE(c2.level.has_value());
  CHECK(*c2.level == 3);
  CHECK(!c2.table[0].excluded);
  CHECK(!c2.table[1].excluded);

  // no certificate within the bound: report the table honestly
  KgCertificate none = kg_es_certificate(variety_of(deep), 2);
  CHECK(!none.level.has_value());
  CHECK(none.table.size() == 2);

  CHECK_THROWS_AS(kg_es_certificate(variety_of(bool2()), 5), cap_error);
}

TEST_CASE("hom counting links the two sides for variety-sized inputs") {
  FinitePoset vee = poset_sum(antichain(1), antichain(2));
  auto maps = enumerate_esakia_morphisms(vee, vee);
  auto homs = oracle::homomorphisms_bruteforce(dual_algebra(vee), dual_algebra(vee));
  CHECK(maps.size() == homs.size());
}
