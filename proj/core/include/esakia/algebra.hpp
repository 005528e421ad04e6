#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "esakia/common.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// Finite Heyting algebra with explicit operation tables. Tables are always
// stored, even when the algebra was built from a dual poset, so that duality
// statements stay independently checkable instead of true by construction.
//
// When built from upsets of a poset, the element <-> upset correspondence is
// kept as provenance.
class HeytingAlgebra {
 public:
  HeytingAlgebra() = default;

  // Tables are taken on faith here; run verify_heyting to certify them.
  static HeytingAlgebra from_tables(int m, std::vector<std::uint8_t> leq,
                                    std::vector<std::uint16_t> meet,
                                    std::vector<std::uint16_t> join,
                                    std::vector<std::uint16_t> imp, int bottom, int top,
                                    std::vector<std::string> labels = {});

  // Derives meet, join and imp from a partial order that must be a complete
  // enough lattice for them to exist; throws validation_error otherwise.
  static HeytingAlgebra from_order(int m, const std::vector<std::uint8_t>& leq,
                                   std::vector<std::string> labels = {});

  int size() const { return m_; }
  bool leq(int a, int b) const { return leq_[a * m_ + b] != 0; }
  int meet(int a, int b) const { return meet_[a * m_ + b]; }
  int join(int a, int b) const { return join_[a * m_ + b]; }
  int imp(int a, int b) const { return imp_[a * m_ + b]; }
  int neg(int a) const { return imp(a, bottom_); }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(int a) const;
  std::optional<int> element_with_label(const std::string& name) const;
  HeytingAlgebra relabel(std::vector<std::string> labels) const;

  // Provenance: present iff the algebra was built as the upset algebra of a
  // poset. Elements are upsets in canonical order (cardinality, then mask).
  const FinitePoset* dual() const { return dual_ ? dual_.get() : nullptr; }
  PointSet upset_of(int a) const;
  std::optional<int> element_of_upset(PointSet u) const;

  friend HeytingAlgebra from_upsets(const FinitePoset& p);

 private:
  int m_ = 0;
  std::vector<std::uint8_t> leq_;     // m*m
  std::vector<std::uint16_t> meet_, join_, imp_;
  int bottom_ = 0, top_ = 0;
  std::vector<std::string> labels_;
  std::shared_ptr<const FinitePoset> dual_;
  std::vector<PointSet> elem_upsets_;
};

// The algebra of all upsets of p: meet = intersection, join = union,
// U -> V = complement of the down-closure of U \ V. Elements follow the
// canonical upset order; provenance is recorded.
HeytingAlgebra from_upsets(const FinitePoset& p);

struct HeytingVerdict {
  bool ok = true;
  std::string axiom;          // violated axiom, empty when ok
  std::vector<int> witness;   // offending elements
  std::string str() const;
};

// Checks the bounded-distributive-lattice axioms and residuation
// (a /\ b <= c iff a <= b -> c) exhaustively; reports the first violation.
HeytingVerdict verify_heyting(const HeytingAlgebra& a);

// Top element join-prime. The one-element algebra is not FSI (its dual, the
// empty poset, has no root).
bool is_fsi(const HeytingAlgebra& a);

// Elements comparable with every element, as an ascending chain. Always
// contains bottom and top (for the one-element algebra, that single element).
std::vector<int> nodes(const HeytingAlgebra& a);

// Linear sum: b pasted below a, top of b glued to bottom of a.
// |a + b| = |a| + |b| - 1. Element order: b's elements first (indices kept),
// then a's elements except its bottom.
HeytingAlgebra alg_sum(const HeytingAlgebra& a, const HeytingAlgebra& b);
HeytingAlgebra alg_sum(const std::vector<HeytingAlgebra>& parts);

// Direct product with componentwise tables; element (i, j) = i * |b| + j.
HeytingAlgebra product(const HeytingAlgebra& a, const HeytingAlgebra& b);

struct SubalgebraHandle {
  const HeytingAlgebra* parent = nullptr;
  std::vector<int> members;  // ascending element indices; contains bottom and top

  ElemSet member_set() const;
  bool proper() const { return parent && (int)members.size() < parent->size(); }
};

// Least subset containing seed plus {0, 1} closed under meet, join and imp.
SubalgebraHandle subalgebra_generated(const HeytingAlgebra& a, const std::vector<int>& seed);

bool is_subuniverse(const HeytingAlgebra& a, const std::vector<int>& members);

// The subalgebra as a standalone algebra; element i is handle.members[i].
HeytingAlgebra subalgebra_as_algebra(const SubalgebraHandle& h);

// Some generator whose generated subalgebra is everything, else nullopt.
std::optional<int> is_one_generated(const HeytingAlgebra& a);

// Heyting isomorphism as an element bijection, found by transporting
// elements along an isomorphism of the prime filter spaces and then checking
// the result is a homomorphism. Deterministic.
std::optional<std::vector<int>> algebra_iso(const HeytingAlgebra& a, const HeytingAlgebra& b);

bool algebras_isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b);

}  // namespace esakia
