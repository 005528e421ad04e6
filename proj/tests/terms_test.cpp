#include "doctest.h"

#include "esakia/constructions.hpp"
#include "esakia/duality.hpp"
#include "esakia/terms.hpp"
#include "oracles.hpp"

using namespace esakia;

namespace {

FinitePoset antichain(int n) {
  std::vector<PointSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = bit(i);
  return FinitePoset::from_up_rows(n, std::move(up));
}

}  // namespace

TEST_CASE("eval basics") {
  HeytingAlgebra two = bool2();
  Term x = Term::var(0);
  Term t = Term::imp(x, x);
  for (int a = 0; a < two.size(); ++a) CHECK(eval(t, two, {a}) == two.top());

  // d1 at x = 0 in the two-element algebra: 0 | (0 -> 0) = 1
  CHECK(eval(depth_term(1), two, {two.bottom()}) == two.top());

  CHECK_THROWS_AS(eval(Term::var(2), two, {0}), validation_error);
}

TEST_CASE("depth terms") {
  Term d1 = depth_term(1);
  CHECK(d1.str() == "x0 | (x0 -> 0)");
  Term d2 = depth_term(2);
  CHECK(d2.str() == "x1 | (x1 -> x0 | (x0 -> 0))");
  for (int n = 1; n <= 5; ++n) CHECK(depth_term(n).num_vars() == n);
}

TEST_CASE("width terms") {
  CHECK(width_term(1).str() == "(x0 -> x1) | (x1 -> x0)");
  // three disjuncts for n = 2
  Term w2 = width_term(2);
  int disjuncts = 1;
  Term t = w2;
  while (t.kind() == Term::Kind::Join && t.left().kind() == Term::Kind::Join) {
    ++disjuncts;
    t = t.left();
  }
  ++disjuncts;
  CHECK(disjuncts == 3);
  CHECK(w2.num_vars() == 3);
}

TEST_CASE("validity verdicts with falsifiers") {
  HeytingAlgebra two = bool2();
  HeytingAlgebra c3 = chain_algebra(3);

  CHECK(validates(two, {depth_term(1), Term::one()}).valid);

  auto v = validates(c3, {depth_term(1), Term::one()});
  CHECK(!v.valid);
  REQUIRE(v.falsifier.size() == 1);
  // the falsifier is the middle element, and it is the least one
  CHECK(v.falsifier[0] != c3.bottom());
  CHECK(v.falsifier[0] != c3.top());
  CHECK(v.lhs_value != v.rhs_value);

  // prelinearity holds in every chain
  Equation prelin = parse_equation("(x0 -> x1) | (x1 -> x0) = 1");
  CHECK(validates(c3, prelin).valid);
  CHECK(validates(chain_algebra(5), prelin).valid);
  // and in 2x2, whose principal upsets are trivial
  CHECK(validates(diamond(), prelin).valid);
  // but not in the upset algebra of the rooted vee
  HeytingAlgebra vee = dual_algebra(poset_sum(antichain(1), antichain(2)));
  CHECK(!validates(vee, prelin).valid);
}

TEST_CASE("parallel validity scan returns the least falsifier") {
  HeytingAlgebra a = dual_algebra(poset_sum(antichain(1), antichain(2)));
  Equation eq = {width_term(1), Term::one()};
  auto serial = validates(a, eq, 10'000'000, 1);
  auto parallel = validates(a, eq, 10'000'000, 4);
  CHECK(serial.valid == parallel.valid);
  CHECK(serial.falsifier == parallel.falsifier);
}

TEST_CASE("width axiom distinguishes 2x2 from the rooted vee") {
  Equation w1 = {width_term(1), Term::one()};
  Equation w2 = {width_term(2), Term::one()};
  CHECK(validates(diamond(), w1).valid);
  CHECK(validates(diamond(), w2).valid);
  HeytingAlgebra vee = dual_algebra(poset_sum(antichain(1), antichain(2)));
  CHECK(!validates(vee, w1).valid);
  CHECK(validates(vee, w2).valid);
}

TEST_CASE("sigma axiom families") {
  CHECK(sigma_axioms(1).size() == 3);
  CHECK(sigma_axioms(2).size() == 19);
  for (const auto& eq : sigma_axioms(1)) CHECK(eq.lhs.num_vars() <= 3);
  for (const auto& eq : sigma_axioms(2)) CHECK(eq.lhs.num_vars() <= 4);
  CHECK_THROWS_AS(sigma_axioms(4), cap_error);

  // n = 0: one labeled poset on one point, delta is prelinearity
  auto s0 = sigma_axioms(0);
  REQUIRE(s0.size() == 1);
  CHECK(s0[0].lhs.str() == "(x1 -> x0 | 0) | (x0 -> x1)");
}

TEST_CASE("depth axiomatization matches the depth measure") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      HeytingAlgebra a = from_upsets(p);
      for (int k = 1; k <= 3; ++k) {
        bool axiom = validates(a, {depth_term(k), Term::one()}).valid;
        CHECK(axiom == (p.depth() <= k));
      }
    }
}

TEST_CASE("width axiomatization matches the width measure") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      HeytingAlgebra a = from_upsets(p);
      for (int k = 1; k <= 2; ++k) {
        bool axiom = validates(a, {width_term(k), Term::one()}).valid;
        CHECK(axiom == (p.width() <= k));
      }
    }
}

TEST_CASE("sigma axiomatization matches the incomparability measure") {
  for (int n = 0; n <= 4; ++n)
    for (const auto& p : enumerate_posets(n)) {
      HeytingAlgebra a = from_upsets(p);
      for (int k = 0; k <= 1; ++k) {
        bool all = true;
        for (const auto& eq : sigma_axioms(k))
          if (!validates(a, eq).valid) {
            all = false;
            break;
          }
        CHECK(all == (p.incomparability_degree() <= k));
      }
    }
}

TEST_CASE("eval respects homomorphisms") {
  std::vector<HeytingAlgebra> pool{bool2(), chain_algebra(3), diamond()};
  std::vector<Term> terms{depth_term(1), width_term(1), parse_term("x0 & (x1 | x2) -> x1")};
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& h : oracle::homomorphisms_bruteforce(a, b))
        for (const auto& t : terms) {
          int k = t.num_vars();
          std::vector<int> v(k, 0);
          // scan all assignments
          long long total = 1;
          for (int i = 0; i < k; ++i) total *= a.size();
          for (long long ix = 0; ix < total; ++ix) {
            long long tmp = ix;
            for (int i = 0; i < k; ++i) {
              v[i] = (int)(tmp % a.size());
              tmp /= a.size();
            }
            std::vector<int> hv(k);
            for (int i = 0; i < k; ++i) hv[i] = h[v[i]];
            CHECK(h[eval(t, a, v)] == eval(t, b, hv));
          }
        }
}

TEST_CASE("parser and printer round trips") {
  for (const char* text : {"x0", "0", "1", "x0 & x1", "x0 | x1 & x2", "x0 -> x1 -> x2",
                           "(x0 -> x1) -> x2", "(x0 | x1) & x2", "x12 -> 0"}) {
    Term t = parse_term(text);
    CHECK(parse_term(t.str()).str() == t.str());
  }
  CHECK(parse_term("x0 -> x1 -> x2").str() == "x0 -> x1 -> x2");
  CHECK(parse_term("(x0 -> x1) -> x2").str() == "(x0 -> x1) -> x2");
  CHECK_THROWS_AS(parse_term("x0 &"), validation_error);
  CHECK_THROWS_AS(parse_term("y0"), validation_error);
  CHECK_THROWS_AS(parse_equation("x0 | x1"), validation_error);
  Equation eq = parse_equation("x0 & x1 = x1 & x0");
  CHECK(validates(diamond(), eq).valid);
}

TEST_CASE("assignment space cap") {
  HeytingAlgebra big = dual_algebra(antichain(4));  // 16 elements
  Equation eq = {depth_term(4), Term::one()};
  CHECK_THROWS_AS(validates(big, eq, 1000), cap_error);
}
