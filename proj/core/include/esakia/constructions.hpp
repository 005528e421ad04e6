#pragma once

#include <string>
#include <vector>

#include "esakia/algebra.hpp"
#include "esakia/duality.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// ---- named generators ----

HeytingAlgebra bool2();             // the two-element Boolean algebra
HeytingAlgebra chain_algebra(int k);  // the k-element chain, k >= 1
HeytingAlgebra diamond();           // 2 x 2, the four-element Boolean algebra
FinitePoset d2_space();             // two incomparable points

// 2n points a_1..a_n, b_1..b_n: a_1 below b_2..b_n, a_m (m > 1) below b_1
// and b_m. Depth 2. n >= 2.
FinitePoset x_n_space(int n);

// ---- towers ----

// Finite stack of copies of one space, each copy strictly below the next,
// optionally capped by a fresh top. copy_index is -1 on the top point.
struct LabeledTower {
  FinitePoset poset;
  std::vector<int> copy_index;
  bool has_top = false;
  int copies = 0;
  int param_n = 0;  // n of x_n_space, or 2 for the two-point antichain tower
};

// Point labels follow the scheme: lowest copy bottom row = bot, x1..x_{n-1},
// top row = x_n (over bot), y1..y_{n-1}; copy j+1 bottom row = y_{jn},
// x_{jn+1}..x_{jn+n-1}, top row = x_{(j+1)n}, y_{jn+1}..y_{jn+n-1}.
LabeledTower x_n_tower(int n, int copies, bool with_top);

// Classes {x_k, y_k} for every k with both labels present. In a finite
// truncation the highest x-label has no matching y; its class is completed
// with the top point (the top stands in for the missing upper copies), so
// the back condition holds mechanically. Requires with_top.
Partition r_n_partition(const LabeledTower& t);

// Copies of the two-point antichain, points of copy j labeled l{j}, r{j}.
LabeledTower d2_tower(int copies, bool with_top);

// Staggered classes {r_j, l_{j+1}}, the last copy's r paired with the top;
// l0 is a singleton. Requires with_top and copies >= 2.
Partition d2_partition(const LabeledTower& t);

// ---- the free one-generated algebra, finite downsets ----

struct RNElement {
  enum class Kind { W, A } kind;
  int index;

  static RNElement w(int i) { return {Kind::W, i}; }
  static RNElement a(int i) { return {Kind::A, i}; }
  static RNElement parse(const std::string& name);  // "w0", "a3", ...
  std::string str() const;
};

// The principal downset of the given element of the Rieger-Nishimura
// lattice, as a Heyting algebra with elements labeled 0, w0, w1, a1, w2, ...
// Cover rules: 0 below w0 and w1; w0 below a1 and w2; w1 below a1; and for
// k >= 1: w_{k+1} below a_{k+1}, a_k below a_{k+1} and w_{k+2}. Operations
// are induced by the order; the result is checked against the Heyting
// axioms and is one-generated. index <= 30.
HeytingAlgebra rn_downset(RNElement top);

// Inside a one-generated algebra with at least 6n+1 elements: the subalgebra
// on {top, 0} and the first n triples {w_{1+3k}, w_{2+3k}, a_{2+3k}},
// isomorphic to the linear sum of the two-element algebra over n diamonds.
SubalgebraHandle lemma_kg_i_subalgebra(const HeytingAlgebra& a, int n);

// For a one-generated algebra whose top is an a-element: the subalgebra
// isomorphic to a linear sum of copies of the diamond and of the upset
// algebra of x_n_space(2).
SubalgebraHandle lemma_kg_ii_universe(const HeytingAlgebra& a);

// The intervals between consecutive nodes, each as a standalone algebra,
// top block first: alg_sum(node_blocks(a)) is isomorphic to a.
std::vector<HeytingAlgebra> node_blocks(const HeytingAlgebra& a);

// Splits the algebra at its nodes into blocks, greedily merging node
// intervals until each block is one-generated. Returned top block first, so
// that alg_sum(blocks) is isomorphic to the input. Throws validation_error
// naming the stuck interval if no splitting works (the algebra is then not
// a finite linear sum of one-generated algebras).
std::vector<HeytingAlgebra> kg_decompose(const HeytingAlgebra& a);

// 2 + (2 x 3-chain) + (n - 2 diamonds), n >= 2.
HeytingAlgebra b_n_family(int n);

// The ten-element algebra 2 + rn_downset(a3) + 2.
HeytingAlgebra algebra_d();

}  // namespace esakia
