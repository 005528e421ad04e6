#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "esakia/common.hpp"

namespace esakia {

// Finite partial order on at most 64 indexed points. The 64-point cap keeps
// every point subset inside one machine word; construction fails loudly
// beyond it. Immutable after construction; all operations are pure.
//
// Finite Esakia spaces carry the discrete topology, so a finite poset is all
// the structure a space needs here.
class FinitePoset {
 public:
  FinitePoset() = default;  // the empty poset (dual of the one-element algebra)

  // Validates reflexivity, antisymmetry and transitivity; throws
  // validation_error naming the violated axiom and a witnessing pair.
  static FinitePoset from_relation(int n, const std::vector<std::vector<bool>>& leq,
                                   std::vector<std::string> labels = {});

  // leq is the reflexive-transitive closure of the cover pairs (i covered by j).
  // Throws validation_error if the covers contain a cycle.
  static FinitePoset from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                 std::vector<std::string> labels = {});

  // Trusted fast path for internally constructed relations: up[i] is the mask
  // of {j : i <= j}. Axioms are checked with assertions only in debug builds.
  static FinitePoset from_up_rows(int n, std::vector<PointSet> up,
                                  std::vector<std::string> labels = {});

  int size() const { return n_; }
  bool empty() const { return n_ == 0; }
  bool leq(int i, int j) const { return test_bit(up_[i], j); }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  bool incomparable(int i, int j) const { return !leq(i, j) && !leq(j, i); }
  PointSet up_of(int i) const { return up_[i]; }      // principal upset
  PointSet down_of(int i) const { return down_[i]; }  // principal downset
  PointSet points() const { return full_set(n_); }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int i) const;
  std::optional<int> point_with_label(const std::string& name) const;

  PointSet up_closure(PointSet s) const;
  PointSet down_closure(PointSet s) const;
  bool is_upset(PointSet s) const;

  // All upsets, duplicate-free, ordered by cardinality then numeric mask
  // value. A nonzero limit throws cap_error once more upsets than that exist.
  std::vector<PointSet> all_upsets(std::size_t limit = 0) const;

  std::vector<std::pair<int, int>> covers() const;  // (lower, upper) pairs
  PointSet minimal_points() const;
  PointSet maximal_points() const;
  std::optional<int> minimum() const;
  std::optional<int> maximum() const;
  bool rooted() const { return minimum().has_value(); }

  // Size of the longest chain; 0 for the empty poset.
  int depth() const;

  // Largest antichain contained in a principal upset, maximized over points;
  // 0 for the empty poset. (An antichain spread across incomparable branches
  // with no common lower bound does not count.)
  int width() const;

  // Largest number of elements of a principal upset that are incomparable
  // with a single element of that upset; 0 on chains and antichains.
  int incomparability_degree() const;

  // Largest antichain inside the given subset (not required to be an upset).
  int max_antichain_in(PointSet s) const;

  // Induced subposet on the points of s. If point_map is non-null it receives
  // the new-index -> old-index correspondence.
  FinitePoset induced(PointSet s, std::vector<int>* point_map = nullptr) const;

  // Points listed so that every point appears after all points below it,
  // lowest index first among the minimal candidates.
  std::vector<int> linear_extension() const;

  FinitePoset relabel(std::vector<std::string> labels) const;

  friend bool operator==(const FinitePoset& a, const FinitePoset& b) {
    return a.n_ == b.n_ && a.up_ == b.up_;
  }

 private:
  int n_ = 0;
  std::vector<PointSet> up_;    // up_[i] = {j : i <= j}
  std::vector<PointSet> down_;  // down_[i] = {j : j <= i}
  std::vector<std::string> labels_;
};

// Every point of p below every point of q; labels are carried over.
FinitePoset poset_sum(const FinitePoset& p, const FinitePoset& q);

// Parts stacked in ascending order (parts[0] lowest), optionally capped by a
// fresh greatest point labelled "top".
FinitePoset tower(const std::vector<FinitePoset>& parts, bool with_top);

// Order-isomorphism q = f(p) as a point map, or nullopt. Deterministic:
// returns the first map in the canonical backtracking order.
std::optional<std::vector<int>> find_isomorphism(const FinitePoset& p, const FinitePoset& q);

bool isomorphic(const FinitePoset& p, const FinitePoset& q);

// Lexicographically least row-major adjacency matrix over all relabelings.
// Equal keys characterize isomorphic posets; used for canonical ordering.
std::vector<std::uint64_t> canonical_key(const FinitePoset& p);

// All partial orders on m labeled points, in lexicographic row-major matrix
// order (absent pair < present pair). The index of a poset in this list is a
// stable, documented quantity. m <= 4.
std::vector<FinitePoset> enumerate_labeled_posets(int m);

// Canonical representatives of all posets on n points up to isomorphism,
// ordered by canonical key. n <= 7.
std::vector<FinitePoset> enumerate_posets(int n);

}  // namespace esakia
