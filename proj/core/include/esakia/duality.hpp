#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esakia/algebra.hpp"
#include "esakia/common.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// Prime filter space of an algebra. Point i is the filter generated by
// gens[i]; gamma[a] is the set of points whose filter contains element a.
// Computed from the order tables alone, so it stays an independent check
// against any stored provenance.
struct DualSpace {
  FinitePoset space;
  std::vector<int> gens;        // per point, the generating element
  std::vector<PointSet> gamma;  // per element, the points containing it
};

DualSpace prime_filter_space(const HeytingAlgebra& a);

// Just the poset of prime filters ordered by inclusion.
FinitePoset prime_filters(const HeytingAlgebra& a);

// Alias of from_upsets with duality bookkeeping.
HeytingAlgebra dual_algebra(const FinitePoset& x);

struct MorphismVerdict {
  bool ok = true;
  std::string reason;  // "order" or "back"
  int x = -1, y = -1;  // witness: order: x <= y mapped wrong; back: f(x) <= y uncovered
  std::string str() const;
};

// Order preservation plus the back condition:
// f(x) <= y implies y = f(z) for some z >= x.
MorphismVerdict is_esakia_morphism(const std::vector<int>& f, const FinitePoset& x,
                                   const FinitePoset& y);

// All Esakia morphisms x -> y, sorted lexicographically as point maps.
// Backtracking over a linear extension of x pruned by order preservation.
std::vector<std::vector<int>> enumerate_esakia_morphisms(const FinitePoset& x,
                                                         const FinitePoset& y);

// Equivalence relation on the points of a space, classes numbered by first
// occurrence.
struct Partition {
  std::vector<int> class_of;
  int num_classes = 0;

  static Partition identity(int n);
  static Partition from_classes(int n, const std::vector<std::vector<int>>& classes);
  static Partition from_class_of(std::vector<int> class_of);
  int size() const { return (int)class_of.size(); }
  std::vector<std::vector<int>> classes() const;
  bool is_identity() const { return num_classes == size(); }
  friend bool operator==(const Partition&, const Partition&) = default;
};

struct PartitionVerdict {
  bool ok = true;
  int x = -1, y = -1, z = -1;  // back-condition witness
  std::string str() const;
};

// On a finite discrete space only the back condition needs checking: for
// related x, y and x <= z there must be w >= y related to z. The separating
// clopen half of the definition is automatic, every subset being clopen.
PartitionVerdict is_correct_partition(const Partition& r, const FinitePoset& x);

struct QuotientSpace {
  FinitePoset space;       // one point per class, ordered by first occurrence
  std::vector<int> class_of;  // the quotient map
};

// Class C below class D iff some member of C is below some member of D.
// The induced relation is checked to be a partial order; a failure throws
// validation_error and signals that r was not a correct partition.
QuotientSpace quotient_space(const FinitePoset& x, const Partition& r);

// The correct partition dual to a subalgebra: two prime filters are related
// iff they meet the subalgebra in the same set.
Partition subalgebra_to_partition(const SubalgebraHandle& sub);
Partition subalgebra_to_partition(const HeytingAlgebra& b, const std::vector<int>& members,
                                  const DualSpace& dual);

// Elements of b whose point sets are unions of r-classes. The result is
// closed under the operations; a closure failure throws (bug trap).
SubalgebraHandle partition_to_subalgebra(const HeytingAlgebra& b, const Partition& r);
SubalgebraHandle partition_to_subalgebra(const HeytingAlgebra& b, const Partition& r,
                                         const DualSpace& dual);

// The dual space used by the two conversions above: stored provenance when
// present, else the computed prime filter space.
DualSpace canonical_dual(const HeytingAlgebra& b);

// All correct partitions, in lexicographic restricted-growth-string order.
// Capped at 8 points (Bell-number growth).
std::vector<Partition> enumerate_correct_partitions(const FinitePoset& x);

// All subalgebra universes, found by closing upward from {0, 1}; ordered by
// size then member mask. Works on the algebra side so the bijection with
// correct partitions stays a testable statement.
std::vector<SubalgebraHandle> enumerate_subalgebras(const HeytingAlgebra& b);

// One congruence per upset of the dual: the quotient is the upset's own
// algebra. Capped at duals of 8 points.
std::vector<std::pair<PointSet, HeytingAlgebra>> congruences_via_upsets(const HeytingAlgebra& a);

struct TrickWidthResult {
  bool ok = false;
  std::string error;        // empty when ok
  std::vector<int> error_witness;
  std::vector<int> z_points;   // subset of the domain, ascending
  PointSet target = 0;         // up-set of f(bottom) in x, global maximum removed
  // ok implies: f restricted to z_points is an order isomorphism onto target
};

// Extracts the subposet on which f restricts to an isomorphism onto the
// upset of f(bottom) (global maximum of x removed): for each target point the
// fiber must be a chain, and its maximum is selected. Requires y to have a
// minimum and every non-maximal target point to sit inside an n-element
// antichain of that upset; violations are reported with witnesses rather
// than checked away.
TrickWidthResult trick_width_subposet(const std::vector<int>& f, const FinitePoset& y,
                                      const FinitePoset& x, int n);

}  // namespace esakia
