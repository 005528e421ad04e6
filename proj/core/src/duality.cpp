#include "esakia/duality.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace esakia {

DualSpace prime_filter_space(const HeytingAlgebra& a) {
  int m = a.size();
  // In a finite lattice every filter is principal, so prime filters are the
  // upsets of join-prime elements. Join-prime implies join-irreducible;
  // irreducibility is the cheap pre-filter, primality the definitive test.
  std::vector<int> gens;
  for (int j = 0; j < m; ++j) {
    if (j == a.bottom()) continue;
    int lower_join = a.bottom();
    for (int x = 0; x < m; ++x)
      if (x != j && a.leq(x, j)) lower_join = a.join(lower_join, x);
    if (lower_join == j) continue;  // reducible
    bool prime = true;
    for (int b = 0; b < m && prime; ++b)
      for (int c = b; c < m && prime; ++c)
        if (a.leq(j, a.join(b, c)) && !a.leq(j, b) && !a.leq(j, c)) prime = false;
    if (prime) gens.push_back(j);
  }
  int n = (int)gens.size();
  if (n > kMaxPoints) throw cap_error("prime filter space exceeds the 64-point cap");
  // F_i = up(gens[i]); inclusion of filters reverses the generator order
  std::vector<PointSet> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.leq(gens[j], gens[i])) up[i] |= bit(j);
  std::vector<std::string> labels;
  if (!a.labels().empty())
    for (int g : gens) labels.push_back("F(" + a.label(g) + ")");
  DualSpace d;
  d.space = FinitePoset::from_up_rows(n, std::move(up), std::move(labels));
  d.gens = std::move(gens);
  d.gamma.assign(m, 0);
  for (int x = 0; x < m; ++x)
    for (int i = 0; i < n; ++i)
      if (a.leq(d.gens[i], x)) d.gamma[x] |= bit(i);
  return d;
}

FinitePoset prime_filters(const HeytingAlgebra& a) { return prime_filter_space(a).space; }

HeytingAlgebra dual_algebra(const FinitePoset& x) { return from_upsets(x); }

std::string MorphismVerdict::str() const {
  if (ok) return "ok";
  if (reason == "order")
    return "order preservation fails at pair (" + std::to_string(x) + ", " + std::to_string(y) +
           ")";
  return "back condition fails: image of " + std::to_string(x) + " is below target point " +
         std::to_string(y) + " with no witness above";
}

MorphismVerdict is_esakia_morphism(const std::vector<int>& f, const FinitePoset& x,
                                   const FinitePoset& y) {
  if ((int)f.size() != x.size()) throw validation_error("map size does not match source");
  for (int v : f)
    if (v < 0 || v >= y.size()) throw validation_error("map value out of range");
  for (int p = 0; p < x.size(); ++p)
    for (int q = 0; q < x.size(); ++q)
      if (x.leq(p, q) && !y.leq(f[p], f[q])) return {false, "order", p, q};
  for (int p = 0; p < x.size(); ++p)
    for (int t = 0; t < y.size(); ++t) {
      if (!y.leq(f[p], t)) continue;
      bool covered = false;
      for (int z = 0; z < x.size() && !covered; ++z) covered = x.leq(p, z) && f[z] == t;
      if (!covered) return {false, "back", p, t};
    }
  return {};
}

std::vector<std::vector<int>> enumerate_esakia_morphisms(const FinitePoset& x,
                                                         const FinitePoset& y) {
  if (x.size() > 10 || y.size() > 10)
    throw cap_error("morphism enumeration capped at 10 points per space");
  std::vector<std::vector<int>> out;
  std::vector<int> topo = x.linear_extension();
  std::vector<int> f(x.size(), -1);
  std::function<void(int)> rec = [&](int k) {
    if (k == x.size()) {
      if (is_esakia_morphism(f, x, y).ok) out.push_back(f);
      return;
    }
    int p = topo[k];
    for (int t = 0; t < y.size(); ++t) {
      bool ok = true;
      for (int e = 0; e < k && ok; ++e) {
        int q = topo[e];
        if (x.leq(q, p)) ok = y.leq(f[q], t);
      }
      if (!ok) continue;
      f[p] = t;
      rec(k + 1);
      f[p] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

Partition Partition::identity(int n) {
  Partition r;
  r.class_of.resize(n);
  std::iota(r.class_of.begin(), r.class_of.end(), 0);
  r.num_classes = n;
  return r;
}

Partition Partition::from_classes(int n, const std::vector<std::vector<int>>& classes) {
  std::vector<int> cls(n, -1);
  for (const auto& c : classes)
    for (int p : c) {
      if (p < 0 || p >= n) throw validation_error("partition point out of range");
      if (cls[p] != -1) throw validation_error("point in two classes");
      cls[p] = (int)(&c - classes.data());
    }
  for (int p = 0; p < n; ++p)
    if (cls[p] == -1) throw validation_error("point in no class");
  return from_class_of(std::move(cls));
}

Partition Partition::from_class_of(std::vector<int> class_of) {
  Partition r;
  r.class_of.resize(class_of.size());
  std::map<int, int> renum;
  for (size_t i = 0; i < class_of.size(); ++i) {
    auto it = renum.emplace(class_of[i], (int)renum.size()).first;
    r.class_of[i] = it->second;
  }
  r.num_classes = (int)renum.size();
  return r;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::vector<std::vector<int>> out(num_classes);
  for (int p = 0; p < size(); ++p) out[class_of[p]].push_back(p);
  return out;
}

std::string PartitionVerdict::str() const {
  if (ok) return "ok";
  return "back condition fails: " + std::to_string(x) + " ~ " + std::to_string(y) + " and " +
         std::to_string(x) + " <= " + std::to_string(z) + " but no related point above " +
         std::to_string(y);
}

PartitionVerdict is_correct_partition(const Partition& r, const FinitePoset& x) {
  if (r.size() != x.size()) throw validation_error("partition size does not match space");
  for (int p = 0; p < x.size(); ++p)
    for (int q = 0; q < x.size(); ++q) {
      if (r.class_of[p] != r.class_of[q]) continue;
      for (int z = 0; z < x.size(); ++z) {
        if (!x.leq(p, z)) continue;
        bool found = false;
        for (int w = 0; w < x.size() && !found; ++w)
          found = r.class_of[w] == r.class_of[z] && x.leq(q, w);
        if (!found) return {false, p, q, z};
      }
    }
  return {};
}

QuotientSpace quotient_space(const FinitePoset& x, const Partition& r) {
  if (r.size() != x.size()) throw validation_error("partition size does not match space");
  int n = r.num_classes;
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int p = 0; p < x.size(); ++p)
    for (int q = 0; q < x.size(); ++q)
      if (x.leq(p, q)) leq[r.class_of[p]][r.class_of[q]] = true;
  std::vector<std::string> labels;
  if (!x.labels().empty()) {
    labels.assign(n, "");
    auto cls = r.classes();
    for (int c = 0; c < n; ++c) {
      std::string s;
      for (int p : cls[c]) s += (s.empty() ? "" : "|") + x.label(p);
      labels[c] = s;
    }
  }
  // from_relation re-checks the poset axioms; antisymmetry or transitivity
  // failures mean r was not a correct partition
  QuotientSpace q;
  q.space = FinitePoset::from_relation(n, leq, std::move(labels));
  q.class_of = r.class_of;
  return q;
}

DualSpace canonical_dual(const HeytingAlgebra& b) {
  if (const FinitePoset* d = b.dual()) {
    DualSpace out;
    out.space = *d;
    out.gens.assign(d->size(), -1);
    out.gamma.assign(b.size(), 0);
    for (int a = 0; a < b.size(); ++a) out.gamma[a] = b.upset_of(a);
    return out;
  }
  return prime_filter_space(b);
}

Partition subalgebra_to_partition(const HeytingAlgebra& b, const std::vector<int>& members,
                                  const DualSpace& dual) {
  if (!is_subuniverse(b, members)) throw validation_error("member set is not a subalgebra");
  int n = dual.space.size();
  // F ~ G iff F and G contain the same members
  std::vector<ElemSet> key(n, ElemSet((int)members.size()));
  for (int i = 0; i < n; ++i)
    for (size_t k = 0; k < members.size(); ++k)
      if (test_bit(dual.gamma[members[k]], i)) key[i].set((int)k);
  std::vector<int> cls(n);
  std::vector<ElemSet> seen;
  for (int i = 0; i < n; ++i) {
    int c = -1;
    for (size_t s = 0; s < seen.size(); ++s)
      if (seen[s] == key[i]) {
        c = (int)s;
        break;
      }
    if (c < 0) {
      c = (int)seen.size();
      seen.push_back(key[i]);
    }
    cls[i] = c;
  }
  return Partition::from_class_of(std::move(cls));
}

Partition subalgebra_to_partition(const SubalgebraHandle& sub) {
  return subalgebra_to_partition(*sub.parent, sub.members, canonical_dual(*sub.parent));
}

SubalgebraHandle partition_to_subalgebra(const HeytingAlgebra& b, const Partition& r,
                                         const DualSpace& dual) {
  int n = dual.space.size();
  if (r.size() != n) throw validation_error("partition size does not match dual space");
  std::vector<int> members;
  for (int a = 0; a < b.size(); ++a) {
    PointSet g = dual.gamma[a];
    bool saturated = true;
    for (int i = 0; i < n && saturated; ++i)
      for (int j = 0; j < n && saturated; ++j)
        if (r.class_of[i] == r.class_of[j] && test_bit(g, i) != test_bit(g, j)) saturated = false;
    if (saturated) members.push_back(a);
  }
  if (!is_subuniverse(b, members))
    throw validation_error("saturated elements fail to form a subalgebra (internal bug trap)");
  return SubalgebraHandle{&b, std::move(members)};
}

SubalgebraHandle partition_to_subalgebra(const HeytingAlgebra& b, const Partition& r) {
  return partition_to_subalgebra(b, r, canonical_dual(b));
}

std::vector<Partition> enumerate_correct_partitions(const FinitePoset& x) {
  if (x.size() > 8) throw cap_error("correct-partition enumeration capped at 8 points");
  std::vector<Partition> out;
  int n = x.size();
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  std::vector<int> rgs(n, 0);
  std::function<void(int, int)> rec = [&](int i, int maxc) {
    if (i == n) {
      Partition r = Partition::from_class_of(rgs);
      if (is_correct_partition(r, x).ok) out.push_back(std::move(r));
      return;
    }
    for (int c = 0; c <= maxc + 1 && c < n; ++c) {
      rgs[i] = c;
      rec(i + 1, std::max(maxc, c));
    }
  };
  rec(0, -1);
  return out;
}

std::vector<SubalgebraHandle> enumerate_subalgebras(const HeytingAlgebra& b) {
  // breadth-first closure walk: every subalgebra is reached from {0,1} by
  // repeatedly adjoining one element and closing
  std::vector<SubalgebraHandle> found;
  std::vector<ElemSet> seen;
  std::vector<std::vector<int>> frontier;
  auto push = [&](SubalgebraHandle h) {
    ElemSet s = h.member_set();
    for (const auto& e : seen)
      if (e == s) return;
    seen.push_back(std::move(s));
    frontier.push_back(h.members);
    found.push_back(std::move(h));
  };
  push(subalgebra_generated(b, {}));
  for (size_t i = 0; i < frontier.size(); ++i) {
    std::vector<int> base = frontier[i];
    ElemSet in = ElemSet::of(b.size(), base);
    for (int e = 0; e < b.size(); ++e) {
      if (in.test(e)) continue;
      std::vector<int> seed = base;
      seed.push_back(e);
      push(subalgebra_generated(b, seed));
    }
  }
  std::sort(found.begin(), found.end(), [](const SubalgebraHandle& a, const SubalgebraHandle& b2) {
    if (a.members.size() != b2.members.size()) return a.members.size() < b2.members.size();
    return a.members < b2.members;
  });
  return found;
}

std::vector<std::pair<PointSet, HeytingAlgebra>> congruences_via_upsets(const HeytingAlgebra& a) {
  DualSpace d = canonical_dual(a);
  if (d.space.size() > 8) throw cap_error("congruence enumeration capped at duals of 8 points");
  std::vector<std::pair<PointSet, HeytingAlgebra>> out;
  for (PointSet u : d.space.all_upsets())
    out.emplace_back(u, dual_algebra(d.space.induced(u)));
  return out;
}

namespace {

// does `point` belong to an antichain of n elements inside `ambient`?
bool in_antichain_of(const FinitePoset& x, PointSet ambient, int point, int n) {
  if (n <= 1) return true;
  std::vector<int> cands;
  for (int p = 0; p < x.size(); ++p)
    if (p != point && test_bit(ambient, p) && x.incomparable(p, point)) cands.push_back(p);
  std::vector<int> pick;
  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if ((int)pick.size() == n - 1) return true;
    if (i >= cands.size()) return false;
    // take cands[i] if compatible
    bool ok = true;
    for (int q : pick)
      if (!x.incomparable(q, cands[i])) ok = false;
    if (ok) {
      pick.push_back(cands[i]);
      if (rec(i + 1)) return true;
      pick.pop_back();
    }
    return rec(i + 1);
  };
  return rec(0);
}

}  // namespace

TrickWidthResult trick_width_subposet(const std::vector<int>& f, const FinitePoset& y,
                                      const FinitePoset& x, int n) {
  TrickWidthResult res;
  auto m = is_esakia_morphism(f, y, x);
  if (!m.ok) {
    res.error = "map is not an Esakia morphism: " + m.str();
    res.error_witness = {m.x, m.y};
    return res;
  }
  auto bot = y.minimum();
  if (!bot) {
    res.error = "domain has no minimum";
    return res;
  }
  int fb = f[*bot];
  PointSet up_fb = x.up_of(fb);
  PointSet target = up_fb;
  if (auto mx = x.maximum()) target &= ~bit(*mx);
  res.target = target;

  for (int z = 0; z < x.size(); ++z) {
    if (!test_bit(target, z) || z == fb) continue;
    if (!in_antichain_of(x, up_fb, z, n)) {
      res.error = "target point sits in no antichain of the required size";
      res.error_witness = {z};
      return res;
    }
  }

  std::vector<int> zpts;
  for (int z = 0; z < x.size(); ++z) {
    if (!test_bit(target, z) || z == fb) continue;
    // fiber over z must be a chain; take its maximum
    std::vector<int> fiber;
    for (int a = 0; a < y.size(); ++a)
      if (f[a] == z) fiber.push_back(a);
    for (size_t i = 0; i < fiber.size(); ++i)
      for (size_t j = i + 1; j < fiber.size(); ++j)
        if (y.incomparable(fiber[i], fiber[j])) {
          res.error = "fiber is not a chain";
          res.error_witness = {fiber[i], fiber[j]};
          return res;
        }
    int mx = fiber[0];
    for (int a : fiber)
      if (y.leq(mx, a)) mx = a;
    zpts.push_back(mx);
  }
  if (test_bit(target, fb)) zpts.push_back(*bot);
  std::sort(zpts.begin(), zpts.end());

  // confirm the restriction is an order isomorphism onto the target
  if ((int)zpts.size() != popcount(target)) {
    res.error = "restriction is not bijective";
    return res;
  }
  for (int a : zpts)
    for (int b : zpts)
      if (y.leq(a, b) != x.leq(f[a], f[b])) {
        res.error = "restriction is not an order isomorphism";
        res.error_witness = {a, b};
        return res;
      }
  {
    PointSet image = 0;
    for (int a : zpts) image |= bit(f[a]);
    if (image != target) {
      res.error = "restriction is not onto the target";
      return res;
    }
  }
  res.ok = true;
  res.z_points = std::move(zpts);
  return res;
}

}  // namespace esakia
