#include "esakia/variety.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>

#include "esakia/constructions.hpp"

namespace esakia {

namespace {

struct IsoBuckets {
  // representatives deduplicated up to isomorphism, grouped by a cheap key
  std::vector<FinitePoset> reps;
  std::map<std::vector<int>, std::vector<int>> buckets;

  static std::vector<int> key(const FinitePoset& p) {
    std::vector<int> k{p.size(), p.depth()};
    std::vector<int> degs;
    for (int i = 0; i < p.size(); ++i) degs.push_back(popcount(p.up_of(i)));
    std::sort(degs.begin(), degs.end());
    k.insert(k.end(), degs.begin(), degs.end());
    for (int i = 0; i < p.size(); ++i) degs[i] = popcount(p.down_of(i));
    std::sort(degs.begin(), degs.end());
    k.insert(k.end(), degs.begin(), degs.end());
    return k;
  }

  bool insert(FinitePoset p) {
    auto& ids = buckets[key(p)];
    for (int id : ids)
      if (isomorphic(reps[id], p)) return false;
    ids.push_back((int)reps.size());
    reps.push_back(std::move(p));
    return true;
  }

  std::optional<int> find(const FinitePoset& p) const {
    auto it = buckets.find(key(p));
    if (it == buckets.end()) return std::nullopt;
    for (int id : it->second)
      if (isomorphic(reps[id], p)) return id;
    return std::nullopt;
  }
};

}  // namespace

VarietyPresentation::VarietyPresentation(std::vector<HeytingAlgebra> generators)
    : gens_(std::move(generators)) {
  if (gens_.empty()) throw validation_error("a variety presentation needs a generator");
  for (const auto& g : gens_) {
    if (auto v = verify_heyting(g); !v.ok)
      throw validation_error("generator is not a Heyting algebra: " + v.str());
    FinitePoset d = prime_filters(g);
    if (d.size() > 8) throw cap_error("generator duals capped at 8 points");
    gen_duals_.push_back(std::move(d));
  }
  IsoBuckets acc;
  for (const FinitePoset& p : gen_duals_) {
    for (PointSet u : p.all_upsets()) {
      FinitePoset q = p.induced(u);
      for (const Partition& r : enumerate_correct_partitions(q)) {
        FinitePoset quo = quotient_space(q, r).space;
        if (quo.rooted()) acc.insert(std::move(quo));
      }
    }
  }
  std::sort(acc.reps.begin(), acc.reps.end(), [](const FinitePoset& a, const FinitePoset& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return canonical_key(a) < canonical_key(b);
  });
  reps_ = std::move(acc.reps);
}

MembershipVerdict contains_dual(const VarietyPresentation& v, const FinitePoset& x) {
  if (x.size() > 24) throw cap_error("membership checks capped at duals of 24 points");
  const auto& reps = v.fsi_representatives();
  IsoBuckets lookup;
  for (const auto& r : reps) lookup.insert(r);  // indices align: reps are distinct
  MembershipVerdict out;
  out.point_match.assign(x.size(), -1);
  std::map<PointSet, int> memo;
  for (int p = 0; p < x.size(); ++p) {
    PointSet u = x.up_of(p);
    auto it = memo.find(u);
    int match;
    if (it != memo.end()) {
      match = it->second;
    } else {
      auto found = lookup.find(x.induced(u));
      match = found ? *found : -1;
      memo[u] = match;
    }
    out.point_match[p] = match;
    if (match < 0 && out.member) {
      out.member = false;
      out.failing_point = p;
    }
  }
  return out;
}

MembershipVerdict contains(const VarietyPresentation& v, const HeytingAlgebra& b) {
  return contains_dual(v, prime_filters(b));
}

namespace {

// Joint backtracking search for a pair of Esakia maps g, h : y -> x that are
// pointwise related by `cls` and differ somewhere. Points of y are assigned
// along a linear extension; order preservation and class-relatedness prune
// branches, and a back-condition obligation check fires as soon as a point's
// upset is fully assigned. Assignments are explored in lexicographic (g, h)
// order, so the first witness found is canonical.
struct PairSearch {
  const FinitePoset& y;
  const FinitePoset& x;
  const std::vector<int>& cls;  // partition classes on x

  std::vector<int> topo;
  std::vector<int> g, h;
  std::vector<PointSet> covered_g, covered_h;  // x-points hit above each y-point
  std::vector<int> remaining;                  // unassigned points in each upset
  bool want_different = true;

  std::optional<std::pair<std::vector<int>, std::vector<int>>> found;

  PairSearch(const FinitePoset& y_, const FinitePoset& x_, const std::vector<int>& cls_)
      : y(y_), x(x_), cls(cls_) {
    topo = y.linear_extension();
    g.assign(y.size(), -1);
    h.assign(y.size(), -1);
    covered_g.assign(y.size(), 0);
    covered_h.assign(y.size(), 0);
    remaining.resize(y.size());
    for (int p = 0; p < y.size(); ++p) remaining[p] = popcount(y.up_of(p));
  }

  bool run() {
    rec(0);
    return found.has_value();
  }

  void rec(size_t k) {
    if (found) return;
    if (k == topo.size()) {
      if (g == h) return;
      // obligations were discharged incrementally; the maps are Esakia
      found = {{g, h}};
      return;
    }
    int p = topo[k];
    for (int a = 0; a < x.size() && !found; ++a) {
      bool ok = true;
      for (size_t e = 0; e < k && ok; ++e) {
        int q = topo[e];
        if (y.leq(q, p)) ok = x.leq(g[q], a);
      }
      if (!ok) continue;
      for (int b = 0; b < x.size() && !found; ++b) {
        if (cls[a] != cls[b]) continue;
        bool okh = true;
        for (size_t e = 0; e < k && okh; ++e) {
          int q = topo[e];
          if (y.leq(q, p)) okh = x.leq(h[q], b);
        }
        if (!okh) continue;
        if (!assign(p, a, b)) {
          unassign(p, a, b);
          continue;
        }
        rec(k + 1);
        unassign(p, a, b);
      }
    }
  }

  // returns false if some fully-assigned upset misses a back-condition
  // obligation, in which case the caller still unassigns
  bool assign(int p, int a, int b) {
    g[p] = a;
    h[p] = b;
    covered_g[p] = bit(a);
    covered_h[p] = bit(b);
    bool ok = true;
    for (int q = 0; q < y.size(); ++q) {
      if (!y.leq(q, p)) continue;
      if (q != p) {
        covered_g[q] |= bit(a);
        covered_h[q] |= bit(b);
      }
      --remaining[q];
      if (remaining[q] == 0 && g[q] >= 0) {
        if ((x.up_of(g[q]) & ~covered_g[q]) || (x.up_of(h[q]) & ~covered_h[q])) ok = false;
      }
    }
    return ok;
  }

  void unassign(int p, int a, int b) {
    for (int q = 0; q < y.size(); ++q) {
      if (!y.leq(q, p)) continue;
      ++remaining[q];
      if (q != p) {
        // recompute coverage for q from scratch; cheap at these sizes
        covered_g[q] = 0;
        covered_h[q] = 0;
        for (int z = 0; z < y.size(); ++z)
          if (y.leq(q, z) && g[z] >= 0 && z != p) {
            covered_g[q] |= bit(g[z]);
            covered_h[q] |= bit(h[z]);
          }
        if (g[q] >= 0) {
          covered_g[q] |= bit(g[q]);
          covered_h[q] |= bit(h[q]);
        }
      }
    }
    g[p] = -1;
    h[p] = -1;
    covered_g[p] = 0;
    covered_h[p] = 0;
  }
};

}  // namespace

EpicVerdict is_epic(const HeytingAlgebra& b, const SubalgebraHandle& sub,
                    const VarietyPresentation& v) {
  if (sub.parent != &b) throw validation_error("subalgebra handle does not belong to b");
  if (auto mv = contains(v, b); !mv.member)
    throw validation_error("ambient algebra is not a member of the variety");
  DualSpace dual = canonical_dual(b);
  if (dual.space.size() > 8) throw cap_error("epicness checks capped at duals of 8 points");
  Partition r = subalgebra_to_partition(b, sub.members, dual);

  EpicVerdict out;
  const auto& reps = v.fsi_representatives();
  for (size_t i = 0; i < reps.size(); ++i) {
    PairSearch search(reps[i], dual.space, r.class_of);
    if (!search.run()) continue;
    auto [g, h] = *search.found;
    EpicWitness w;
    w.rep_index = (int)i;
    w.space = reps[i];
    w.g = std::move(g);
    w.h = std::move(h);
    for (int p = 0; p < reps[i].size(); ++p)
      if (w.g[p] != w.h[p]) {
        w.differs_at = p;
        break;
      }
    out.epic = false;
    out.witness = std::move(w);
    return out;
  }
  return out;
}

EsVerdict es_property(const VarietyPresentation& v) {
  EsVerdict out;
  const auto& reps = v.fsi_representatives();
  for (size_t i = 0; i < reps.size(); ++i) {
    HeytingAlgebra b = dual_algebra(reps[i]);
    for (const SubalgebraHandle& sub : enumerate_subalgebras(b)) {
      if (!sub.proper()) continue;
      EsLogEntry entry{(int)i, sub.members, is_epic(b, sub, v)};
      if (entry.verdict.epic) out.es = false;
      out.log.push_back(std::move(entry));
    }
  }
  return out;
}

KgCertificate kg_es_certificate(const VarietyPresentation& v, int n_max) {
  if (n_max < 1 || n_max > 4) throw cap_error("certificate search capped at 4 levels");
  HeytingAlgebra d2star = diamond();
  HeytingAlgebra x2star = dual_algebra(x_n_space(2));
  HeytingAlgebra two = bool2();

  KgCertificate out;
  for (int n = 1; n <= n_max; ++n) {
    KgLevelReport report;
    report.level = n;
    report.excluded = true;
    for (int choice = 0; choice < (1 << n); ++choice) {
      std::vector<HeytingAlgebra> parts;
      for (int i = 0; i < n; ++i) parts.push_back((choice >> i) & 1 ? x2star : d2star);
      parts.push_back(two);
      bool member = contains(v, alg_sum(parts)).member;
      report.member.push_back(member);
      if (member) report.excluded = false;
    }
    out.table.push_back(std::move(report));
  }
  for (int n = 0; n + 1 < (int)out.table.size(); ++n)
    if (out.table[n].excluded && !out.table[n + 1].excluded)
      throw validation_error("exclusion monotonicity violated between levels " +
                             std::to_string(n + 1) + " and " + std::to_string(n + 2));
  for (const auto& rep : out.table)
    if (rep.excluded) {
      out.level = rep.level;
      break;
    }
  return out;
}

}  // namespace esakia
