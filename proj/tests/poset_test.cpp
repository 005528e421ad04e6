#include "doctest.h"

#include <set>

#include "esakia/poset.hpp"
#include "oracles.hpp"

using namespace esakia;

namespace {

FinitePoset chain(int n) {
  std::vector<PointSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = full_set(n) & ~full_set(i);
  return FinitePoset::from_up_rows(n, std::move(up));
}

FinitePoset antichain(int n) {
  std::vector<PointSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = bit(i);
  return FinitePoset::from_up_rows(n, std::move(up));
}

FinitePoset x2() {
  // a1 < b2; a2 < b1, b2
  return FinitePoset::from_covers(4, {{0, 3}, {1, 2}, {1, 3}}, {"a1", "a2", "b1", "b2"});
}

}  // namespace

TEST_CASE("validation accepts partial orders and reports violations") {
  auto two_chain = FinitePoset::from_relation(2, {{true, true}, {false, true}});
  CHECK(two_chain.leq(0, 1));
  CHECK(two_chain.depth() == 2);

  CHECK_THROWS_WITH_AS(FinitePoset::from_relation(2, {{true, true}, {true, true}}),
                       doctest::Contains("antisymmetry"), validation_error);
  CHECK_THROWS_WITH_AS(FinitePoset::from_relation(2, {{false, false}, {false, true}}),
                       doctest::Contains("reflexivity"), validation_error);
  CHECK_THROWS_WITH_AS(
      FinitePoset::from_relation(3,
                                 {{true, true, false}, {false, true, true}, {false, false, true}}),
      doctest::Contains("transitivity"), validation_error);
  CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), validation_error);
}

TEST_CASE("x2 relation is a valid 4-point poset") {
  FinitePoset p = x2();
  CHECK(p.size() == 4);
  CHECK(p.lt(0, 3));
  CHECK(p.lt(1, 2));
  CHECK(p.lt(1, 3));
  CHECK(p.incomparable(0, 2));
  CHECK(p.incomparable(0, 1));
  CHECK(p.depth() == 2);
}

TEST_CASE("up and down closures") {
  FinitePoset c3 = chain(3);
  CHECK(c3.up_closure(bit(1)) == (bit(1) | bit(2)));
  CHECK(c3.down_closure(bit(1)) == (bit(0) | bit(1)));

  FinitePoset a2 = antichain(2);
  CHECK(a2.up_closure(bit(0)) == bit(0));

  // in x2, up of a2 is {a2, b1, b2}
  FinitePoset p = x2();
  CHECK(p.up_closure(bit(1)) == (bit(1) | bit(2) | bit(3)));
}

TEST_CASE("all_upsets is complete, duplicate-free and canonically ordered") {
  CHECK(FinitePoset{}.all_upsets() == std::vector<PointSet>{0});
  CHECK(antichain(2).all_upsets().size() == 4);
  CHECK(chain(2).all_upsets() == std::vector<PointSet>{0, bit(1), bit(0) | bit(1)});

  for (int n = 0; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      auto ups = p.all_upsets();
      CHECK((long long)ups.size() == oracle::upset_count_bruteforce(p));
      std::set<PointSet> uniq(ups.begin(), ups.end());
      CHECK(uniq.size() == ups.size());
      for (PointSet u : ups) CHECK(p.is_upset(u));
      for (size_t i = 1; i < ups.size(); ++i) {
        bool ordered = popcount(ups[i - 1]) < popcount(ups[i]) ||
                       (popcount(ups[i - 1]) == popcount(ups[i]) && ups[i - 1] < ups[i]);
        CHECK(ordered);
      }
    }
}

TEST_CASE("structural measures on fixed examples") {
  CHECK(chain(4).depth() == 4);
  CHECK(antichain(3).depth() == 1);
  CHECK(x2().depth() == 2);

  CHECK(FinitePoset{}.depth() == 0);
  CHECK(FinitePoset{}.width() == 0);
  CHECK(FinitePoset{}.incomparability_degree() == 0);

  CHECK(chain(5).width() == 1);
  CHECK(chain(5).incomparability_degree() == 0);

  // measures are local to principal upsets: a bare antichain has width 1,
  // but rooting it from below exposes the full antichain
  CHECK(antichain(3).width() == 1);
  FinitePoset rooted3 = poset_sum(chain(1), antichain(3));
  CHECK(rooted3.width() == 3);
  CHECK(antichain(3).incomparability_degree() == 0);
  CHECK(rooted3.incomparability_degree() == 2);
}

TEST_CASE("measures agree with subset-scanning oracles on all small posets") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : enumerate_posets(n)) {
      CHECK(p.depth() == oracle::depth_bruteforce(p));
      CHECK(p.width() == oracle::width_bruteforce(p));
      CHECK(p.incomparability_degree() == oracle::incomparability_bruteforce(p));
      CHECK(p.depth() <= p.size());
      CHECK(p.width() <= p.size());
      CHECK(p.incomparability_degree() <= std::max(0, p.size() - 1));
    }
}

TEST_CASE("poset sums and towers") {
  FinitePoset s = poset_sum(chain(1), chain(1));
  CHECK(isomorphic(s, chain(2)));

  FinitePoset d2 = antichain(2);
  FinitePoset t = tower({d2, d2}, true);
  CHECK(t.size() == 5);
  CHECK(t.maximum().has_value());
  for (int i = 0; i < 2; ++i)
    for (int j = 2; j < 4; ++j) CHECK(t.lt(i, j));

  for (int k = 1; k <= 4; ++k) {
    FinitePoset tk = tower(std::vector<FinitePoset>(k, d2), true);
    CHECK(tk.depth() == k + 1);
  }
}

TEST_CASE("poset sum is associative up to isomorphism") {
  std::vector<FinitePoset> pool;
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : enumerate_posets(n)) pool.push_back(p);
  for (const auto& p : pool)
    for (const auto& q : pool)
      for (const auto& r : pool) {
        FinitePoset lhs = poset_sum(poset_sum(p, q), r);
        FinitePoset rhs = poset_sum(p, poset_sum(q, r));
        CHECK(isomorphic(lhs, rhs));
      }
}

TEST_CASE("isomorphism search") {
  CHECK(find_isomorphism(chain(3), chain(3)) == std::vector<int>{0, 1, 2});
  CHECK(!find_isomorphism(chain(2), antichain(2)).has_value());

  // x2 against its mirror: swap the roles of the two legs
  FinitePoset mirror =
      FinitePoset::from_covers(4, {{1, 2}, {0, 3}, {0, 2}}, {"a1", "a2", "b1", "b2"});
  auto f = find_isomorphism(x2(), mirror);
  REQUIRE(f.has_value());
  FinitePoset p = x2();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(p.leq(i, j) == mirror.leq((*f)[i], (*f)[j]));
}

TEST_CASE("isomorphism is an equivalence and matches permutation scanning") {
  std::vector<FinitePoset> pool;
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) pool.push_back(p);
  // a handful of 5-point posets keeps the pairwise scan fast
  auto five = enumerate_posets(5);
  for (size_t i = 0; i < five.size(); i += 7) pool.push_back(five[i]);

  for (const auto& p : pool) REQUIRE(find_isomorphism(p, p).has_value());
  for (const auto& p : pool)
    for (const auto& q : pool) {
      bool fwd = isomorphic(p, q);
      CHECK(fwd == oracle::isomorphic_bruteforce(p, q));
      CHECK(fwd == isomorphic(q, p));
      if (auto f = find_isomorphism(p, q)) {
        // a found map inverts to a valid map
        std::vector<int> inv(q.size());
        for (int i = 0; i < p.size(); ++i) inv[(*f)[i]] = i;
        for (int i = 0; i < q.size(); ++i)
          for (int j = 0; j < q.size(); ++j) CHECK(q.leq(i, j) == p.leq(inv[i], inv[j]));
      }
    }
}

TEST_CASE("labeled poset enumeration counts and order") {
  CHECK(enumerate_labeled_posets(1).size() == 1);
  CHECK(enumerate_labeled_posets(2).size() == 3);
  CHECK(enumerate_labeled_posets(3).size() == 19);
  CHECK(enumerate_labeled_posets(4).size() == 219);
  CHECK(enumerate_labeled_posets(3).size() == oracle::labeled_posets_bruteforce(3).size());

  // fixed order: the antichain (empty strict relation) comes first; the
  // remaining two differ first at the row-major cell (0,1), and an absent
  // pair sorts before a present one
  auto l2 = enumerate_labeled_posets(2);
  CHECK(!l2[0].lt(0, 1));
  CHECK(!l2[0].lt(1, 0));
  CHECK(l2[1].lt(1, 0));
  CHECK(l2[2].lt(0, 1));
}

TEST_CASE("unlabeled poset enumeration matches the known census") {
  const int expected[] = {1, 1, 2, 5, 16, 63};
  for (int n = 0; n <= 5; ++n) {
    auto reps = enumerate_posets(n);
    CHECK((int)reps.size() == expected[n]);
    for (size_t i = 0; i < reps.size(); ++i)
      for (size_t j = i + 1; j < reps.size(); ++j) CHECK(!isomorphic(reps[i], reps[j]));
  }
  CHECK(enumerate_posets(6).size() == 318);
  CHECK((int)enumerate_posets(4).size() == oracle::unlabeled_count_bruteforce(4));
}

TEST_CASE("point cap enforced") {
  CHECK_THROWS_AS(FinitePoset::from_covers(65, {}), cap_error);
  CHECK_THROWS_AS(enumerate_posets(8), cap_error);
  CHECK_THROWS_AS(enumerate_labeled_posets(5), cap_error);
}
