#include "doctest.h"

#include <algorithm>
#include <set>

#include "esakia/constructions.hpp"
#include "esakia/duality.hpp"
#include "oracles.hpp"

using namespace esakia;

namespace {

FinitePoset antichain(int n) {
  std::vector<PointSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = bit(i);
  return FinitePoset::from_up_rows(n, std::move(up));
}

FinitePoset chain(int n) {
  std::vector<PointSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = full_set(n) & ~full_set(i);
  return FinitePoset::from_up_rows(n, std::move(up));
}

}  // namespace

TEST_CASE("prime filters of small algebras") {
  CHECK(prime_filters(bool2()).size() == 1);
  CHECK(isomorphic(prime_filters(diamond()), antichain(2)));
  CHECK(isomorphic(prime_filters(chain_algebra(3)), chain(2)));
  CHECK(prime_filters(from_upsets(FinitePoset{})).size() == 0);
}

TEST_CASE("duality round trips on all small posets and their algebras") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      HeytingAlgebra a = dual_algebra(p);
      CHECK(isomorphic(prime_filters(a), p));
      CHECK(algebras_isomorphic(dual_algebra(prime_filters(a)), a));
    }
}

TEST_CASE("esakia morphism verdicts") {
  FinitePoset c2 = chain(2);
  CHECK(is_esakia_morphism({0, 1}, c2, c2).ok);

  // constant onto the bottom of a 2-chain: the top is never covered
  auto v = is_esakia_morphism({0, 0}, c2, c2);
  CHECK(!v.ok);
  CHECK(v.reason == "back");

  // folding a 2-copy antichain tower onto one copy pointwise breaks order
  // preservation: cross-copy comparabilities collapse onto incomparable pairs
  FinitePoset t2 = tower({antichain(2), antichain(2)}, false);
  FinitePoset t1 = antichain(2);
  auto fold = is_esakia_morphism({0, 1, 0, 1}, t2, t1);
  CHECK(!fold.ok);
  CHECK(fold.reason == "order");
}

TEST_CASE("morphism enumeration with algebra-side counting oracle") {
  // a single point can only land where its image upset is a whole upset:
  // only the top of a 2-chain qualifies
  auto into_chain = enumerate_esakia_morphisms(antichain(1), chain(2));
  REQUIRE(into_chain.size() == 1);
  CHECK(into_chain[0] == std::vector<int>{1});
  CHECK(enumerate_esakia_morphisms(chain(2), antichain(1)).size() == 1);
  CHECK(enumerate_esakia_morphisms(antichain(2), antichain(2)).size() == 4);

  std::vector<FinitePoset> spaces;
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n)) spaces.push_back(p);
  spaces.push_back(poset_sum(antichain(1), antichain(2)));
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      auto maps = enumerate_esakia_morphisms(x, y);
      std::set<std::vector<int>> uniq(maps.begin(), maps.end());
      CHECK(uniq.size() == maps.size());
      for (const auto& f : maps) CHECK(is_esakia_morphism(f, x, y).ok);
      auto homs = oracle::homomorphisms_bruteforce(dual_algebra(y), dual_algebra(x));
      CHECK(maps.size() == homs.size());
    }
}

TEST_CASE("images of morphisms are upsets") {
  std::vector<FinitePoset> spaces;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n)) spaces.push_back(p);
  for (const auto& x : spaces)
    for (const auto& y : spaces)
      for (const auto& f : enumerate_esakia_morphisms(x, y)) {
        PointSet image = 0;
        for (int v : f) image |= bit(v);
        CHECK(y.is_upset(image));
      }
}

TEST_CASE("injective/surjective correspondence for dual maps") {
  // h : A -> B injective iff its dual surjective; surjective iff dual injective
  std::vector<FinitePoset> spaces;
  for (int n = 0; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n)) spaces.push_back(p);
  for (const auto& x : spaces)
    for (const auto& y : spaces) {
      HeytingAlgebra ax = dual_algebra(x), ay = dual_algebra(y);
      // Esakia maps x -> y dualize to homomorphisms ay -> ax by preimage
      for (const auto& f : enumerate_esakia_morphisms(x, y)) {
        std::vector<int> h(ay.size());
        for (int e = 0; e < ay.size(); ++e) {
          PointSet u = ay.upset_of(e), pre = 0;
          for (int p = 0; p < x.size(); ++p)
            if (test_bit(u, f[p])) pre |= bit(p);
          auto elem = ax.element_of_upset(pre);
          REQUIRE(elem.has_value());
          h[e] = *elem;
        }
        bool h_injective = [&] {
          std::set<int> vals(h.begin(), h.end());
          return (int)vals.size() == ay.size();
        }();
        bool h_surjective = [&] {
          std::set<int> vals(h.begin(), h.end());
          return (int)vals.size() == ax.size();
        }();
        bool f_surjective = [&] {
          std::set<int> vals(f.begin(), f.end());
          return (int)vals.size() == y.size();
        }();
        bool f_injective = [&] {
          std::set<int> vals(f.begin(), f.end());
          return (int)vals.size() == x.size();
        }();
        CHECK(h_injective == f_surjective);
        CHECK(h_surjective == f_injective);
      }
    }
}

TEST_CASE("correct partition verdicts and quotients") {
  FinitePoset c2 = chain(2);
  Partition ident = Partition::identity(2);
  CHECK(is_correct_partition(ident, c2).ok);
  CHECK(isomorphic(quotient_space(c2, ident).space, c2));

  // merging both points of a 2-chain is correct, quotient is a point
  Partition merge = Partition::from_classes(2, {{0, 1}});
  CHECK(is_correct_partition(merge, c2).ok);
  CHECK(quotient_space(c2, merge).space.size() == 1);

  // merging only the endpoints of a 3-chain violates the back condition
  FinitePoset c3 = chain(3);
  Partition ends = Partition::from_classes(3, {{0, 2}, {1}});
  auto v = is_correct_partition(ends, c3);
  CHECK(!v.ok);
}

TEST_CASE("subalgebra/partition correspondence on the diamond") {
  HeytingAlgebra d = diamond();
  SubalgebraHandle bounds{&d, {d.bottom(), d.top()}};
  std::sort(bounds.members.begin(), bounds.members.end());
  Partition r = subalgebra_to_partition(bounds);
  CHECK(r.num_classes == 1);  // both prime filters collapse

  auto back = partition_to_subalgebra(d, r);
  CHECK(back.members == bounds.members);

  // identity partition comes from the whole algebra
  SubalgebraHandle whole{&d, {0, 1, 2, 3}};
  CHECK(subalgebra_to_partition(whole).is_identity());
}

TEST_CASE("partition/subalgebra round trips exhaustively") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      HeytingAlgebra b = dual_algebra(p);
      FinitePoset dual = canonical_dual(b).space;
      auto subs = enumerate_subalgebras(b);
      auto parts = enumerate_correct_partitions(dual);
      CHECK(subs.size() == parts.size());
      for (const auto& sub : subs) {
        Partition r = subalgebra_to_partition(sub);
        CHECK(is_correct_partition(r, dual).ok);
        auto back = partition_to_subalgebra(b, r);
        CHECK(back.members == sub.members);
      }
      for (const auto& r : parts) {
        auto sub = partition_to_subalgebra(b, r);
        CHECK(subalgebra_to_partition(sub) == r);
      }
    }
}

TEST_CASE("subalgebra enumeration agrees with the subset-scanning oracle") {
  std::vector<HeytingAlgebra> pool{bool2(), chain_algebra(4), diamond(),
                                   alg_sum(diamond(), bool2()),
                                   dual_algebra(poset_sum(antichain(2), antichain(1)))};
  for (const auto& a : pool) {
    auto fast = enumerate_subalgebras(a);
    auto slow = oracle::subuniverses_bruteforce(a);
    CHECK(fast.size() == slow.size());
    std::set<std::vector<int>> fs, ss;
    for (const auto& h : fast) fs.insert(h.members);
    for (const auto& m : slow) ss.insert(m);
    CHECK(fs == ss);
  }
}

TEST_CASE("restrictions of correct partitions to upsets stay correct") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& x : enumerate_posets(n))
      for (const auto& r : enumerate_correct_partitions(x))
        for (PointSet u : x.all_upsets()) {
          std::vector<int> pts;
          FinitePoset sub = x.induced(u, &pts);
          std::vector<int> cls(sub.size());
          for (int i = 0; i < sub.size(); ++i) cls[i] = r.class_of[pts[i]];
          CHECK(is_correct_partition(Partition::from_class_of(cls), sub).ok);
        }
}

TEST_CASE("congruences via upsets match the operation-compatible partitions") {
  CHECK(congruences_via_upsets(diamond()).size() == 4);
  {
    auto list = congruences_via_upsets(diamond());
    std::multiset<int> sizes;
    for (auto& [u, q] : list) sizes.insert(q.size());
    CHECK(sizes == std::multiset<int>{1, 2, 2, 4});
  }
  std::vector<HeytingAlgebra> pool{bool2(), chain_algebra(3), diamond(),
                                   alg_sum(bool2(), diamond()), dual_algebra(antichain(3))};
  for (const auto& a : pool) {
    auto via_upsets = congruences_via_upsets(a);
    oracle::CongruenceOracle co(a);
    CHECK(via_upsets.size() == co.all().size());
    // the full dual gives back the algebra, the empty upset the one-element quotient
    CHECK(algebras_isomorphic(via_upsets.back().second, a));
    CHECK(via_upsets.front().second.size() == 1);
  }
}

TEST_CASE("trick width subposet extraction") {
  // identity on a rooted poset with a maximum: everything but the maximum
  FinitePoset rooted = poset_sum(poset_sum(antichain(1), antichain(2)), antichain(1));
  std::vector<int> ident(rooted.size());
  for (int i = 0; i < rooted.size(); ++i) ident[i] = i;
  auto res = trick_width_subposet(ident, rooted, rooted, 2);
  REQUIRE(res.ok);
  CHECK((int)res.z_points.size() == rooted.size() - 1);

  // identity on a rooted poset without a maximum keeps everything
  FinitePoset vee = poset_sum(antichain(1), antichain(2));
  std::vector<int> id3{0, 1, 2};
  auto res2 = trick_width_subposet(id3, vee, vee, 2);
  REQUIRE(res2.ok);
  CHECK((int)res2.z_points.size() == 3);

  // a fiber that is not a chain is reported with the incomparable pair:
  // collapse the middle antichain of a diamond onto the middle of a 3-chain
  FinitePoset y = poset_sum(antichain(1), poset_sum(antichain(2), antichain(1)));
  FinitePoset x = chain(3);
  std::vector<int> collapse{0, 1, 1, 2};
  REQUIRE(is_esakia_morphism(collapse, y, x).ok);
  auto res3 = trick_width_subposet(collapse, y, x, 1);
  CHECK(!res3.ok);
  CHECK(res3.error == "fiber is not a chain");
  REQUIRE(res3.error_witness.size() == 2);
  CHECK(y.incomparable(res3.error_witness[0], res3.error_witness[1]));

  // missing antichain hypothesis is reported (the 3-chain has no 2-antichain)
  auto res4 = trick_width_subposet(collapse, y, x, 2);
  CHECK(!res4.ok);
  CHECK(res4.error_witness == std::vector<int>{1});
}
