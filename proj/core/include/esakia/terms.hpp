#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "esakia/algebra.hpp"
#include "esakia/common.hpp"

namespace esakia {

// Immutable syntax tree over meet, join, imp, 0, 1 and variables x0, x1, ...
// Shared subtrees are fine; the recursive axiom families reuse them heavily.
class Term {
 public:
  enum class Kind : std::uint8_t { Var, Zero, One, Meet, Join, Imp };

  static Term var(int index);
  static Term zero();
  static Term one();
  static Term meet(Term l, Term r);
  static Term join(Term l, Term r);
  static Term imp(Term l, Term r);

  // The empty join is 0, the empty meet is 1.
  static Term join_all(const std::vector<Term>& ts);
  static Term meet_all(const std::vector<Term>& ts);

  Kind kind() const { return node_->kind; }
  int var_index() const { return node_->var; }
  Term left() const;   // cheap shared handle
  Term right() const;

  // 1 + largest variable index, 0 if the term is variable-free.
  int num_vars() const;

  // Text form: & binds tightest, then |, then -> (right-associative).
  std::string str() const;

 private:
  struct Node {
    Kind kind;
    int var = -1;
    std::shared_ptr<const Node> l, r;
  };
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct Equation {
  Term lhs, rhs;
  std::string str() const { return lhs.str() + " = " + rhs.str(); }
};

// Structural fold over the operation tables. Throws validation_error if the
// assignment does not cover every variable of t.
int eval(const Term& t, const HeytingAlgebra& a, const std::vector<int>& assignment);

struct ValidityVerdict {
  bool valid = true;
  std::vector<int> falsifier;  // least assignment in mixed-radix order
  int lhs_value = -1, rhs_value = -1;
};

// Exhaustive check of lhs = rhs over all assignments, iterated in mixed-radix
// order (variable 0 fastest); reports the least falsifier. The search space
// |A|^vars is capped (default 10^7). threads > 1 splits the assignment range;
// the reported falsifier is the least one regardless of the split.
ValidityVerdict validates(const HeytingAlgebra& a, const Equation& eq,
                          long long cap = 10'000'000, int threads = 1);

// d_1 = x1 \/ (x1 -> 0),  d_{n+1} = x_{n+1} \/ (x_{n+1} -> d_n).
// Valid in exactly the algebras whose dual has no chain of n+1 points.
Term depth_term(int n);

// w_n = \/_{i=0..n} (x_i -> \/_{j != i} x_j).
// Valid in exactly the algebras whose dual principal upsets contain no
// antichain of n+1 points.
Term width_term(int n);

// For the k-th labeled poset Z on variables y_1..y_{n+1}:
//   psi_{n,k} = \/_i (y_i -> (x \/ \/_{j : not (y_i <=_Z y_j)} y_j))
//   delta_{n,k} = psi_{n,k} \/ (x -> \/_i y_i)
// Variable x is index 0, y_i is index i.
Term psi_term(int n, const FinitePoset& z);
Term delta_term(int n, const FinitePoset& z);

// delta_{n,k} = 1 for every labeled poset on n+1 points, in the fixed
// enumeration order of enumerate_labeled_posets. n <= 3.
std::vector<Equation> sigma_axioms(int n);

// Text syntax: variables x0, x1, ...; constants 0, 1; operators &, |, ->
// with -> weakest and right-associative; parentheses as usual.
Term parse_term(const std::string& text);
Equation parse_equation(const std::string& text);  // "lhs = rhs"

}  // namespace esakia
