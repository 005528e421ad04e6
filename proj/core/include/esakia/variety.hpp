#pragma once

#include <optional>
#include <string>
#include <vector>

#include "esakia/algebra.hpp"
#include "esakia/duality.hpp"
#include "esakia/poset.hpp"

namespace esakia {

// A finitely generated variety, presented by finite generator algebras.
// All structural questions run on the dual side; generator duals are capped
// at 8 points.
class VarietyPresentation {
 public:
  explicit VarietyPresentation(std::vector<HeytingAlgebra> generators);

  const std::vector<HeytingAlgebra>& generators() const { return gens_; }
  const std::vector<FinitePoset>& generator_duals() const { return gen_duals_; }

  // Duals of the FSI members, up to isomorphism, each rooted; canonical
  // order. Follows the finite form of Jonsson's lemma: the FSI members of
  // the generated variety live among quotients of subalgebras of the
  // generators, i.e. correct-partition quotients of upsets of the duals.
  // Computed once at construction so shared presentations stay immutable.
  const std::vector<FinitePoset>& fsi_representatives() const { return reps_; }

 private:
  std::vector<HeytingAlgebra> gens_;
  std::vector<FinitePoset> gen_duals_;
  std::vector<FinitePoset> reps_;
};

struct MembershipVerdict {
  bool member = true;
  // per point of the dual: index into fsi_representatives, or -1
  std::vector<int> point_match;
  int failing_point = -1;
};

// A finite algebra lies in the variety iff the upset of every point of its
// dual is isomorphic to some FSI representative (each such upset is the dual
// of an FSI quotient, and a finite algebra is a subdirect product of its FSI
// quotients). Dual capped at 24 points.
MembershipVerdict contains(const VarietyPresentation& v, const HeytingAlgebra& b);
MembershipVerdict contains_dual(const VarietyPresentation& v, const FinitePoset& x);

struct EpicWitness {
  int rep_index = -1;     // the separating algebra, as an FSI representative
  FinitePoset space;      // its dual
  std::vector<int> g, h;  // Esakia maps into the ambient dual
  int differs_at = -1;
};

struct EpicVerdict {
  bool epic = true;
  std::optional<EpicWitness> witness;
};

// Decides whether the subalgebra is epic over the variety: dualizes the
// subalgebra to a correct partition R on the ambient dual and searches, for
// every FSI representative Y, for a pair of Esakia maps g, h : Y -> dual
// that are pointwise R-related yet different. Epic iff no such pair exists.
// The pair search builds g and h together along a linear extension of Y,
// pruning on order preservation, class-relatedness and unfinishable back
// conditions; the first divergence in canonical order is returned.
EpicVerdict is_epic(const HeytingAlgebra& b, const SubalgebraHandle& sub,
                    const VarietyPresentation& v);

struct EsLogEntry {
  int rep_index;
  std::vector<int> sub_members;
  EpicVerdict verdict;
};

struct EsVerdict {
  bool es = true;
  std::vector<EsLogEntry> log;  // every (FSI member, proper subalgebra) pair
};

// The variety has surjective epimorphisms iff no FSI member has a proper
// epic subalgebra; FSI members are enumerated through their duals.
EsVerdict es_property(const VarietyPresentation& v);

struct KgLevelReport {
  int level;
  std::vector<bool> member;  // one flag per choice vector, in binary order
  bool excluded;             // no sum at this level is a member
};

struct KgCertificate {
  std::optional<int> level;  // least fully excluded level
  std::vector<KgLevelReport> table;
};

// Sufficient criterion for epimorphism surjectivity of subvarieties of the
// Kuznetsov-Gerciu variety: search for a level n at which every sum
// A_1 + ... + A_n + 2 with A_i in {diamond, upset algebra of x_n_space(2)}
// is excluded. Levels are monotone: once fully excluded, always excluded
// (dropping leading summands is a homomorphic image); this is asserted on
// every run. n_max <= 4.
KgCertificate kg_es_certificate(const VarietyPresentation& v, int n_max);

}  // namespace esakia
