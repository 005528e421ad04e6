#include "esakia/poset.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <functional>
#include <map>
#include <unordered_set>

namespace esakia {

namespace {

std::string default_label(int i) { return std::to_string(i); }

void check_point_cap(int n) {
  if (n < 0) throw validation_error("negative point count");
  if (n > kMaxPoints)
    throw cap_error("point count " + std::to_string(n) + " exceeds the 64-point cap");
}

void check_labels(int n, std::vector<std::string>& labels) {
  if (labels.empty()) return;
  if ((int)labels.size() != n)
    throw validation_error("label count does not match point count");
}

}  // namespace

FinitePoset FinitePoset::from_relation(int n, const std::vector<std::vector<bool>>& leq,
                                       std::vector<std::string> labels) {
  check_point_cap(n);
  check_labels(n, labels);
  if ((int)leq.size() != n) throw validation_error("relation has wrong row count");
  for (const auto& row : leq)
    if ((int)row.size() != n) throw validation_error("relation has wrong column count");

  std::vector<PointSet> up(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq[i][j]) up[i] |= bit(j);

  for (int i = 0; i < n; ++i)
    if (!test_bit(up[i], i))
      throw validation_error("reflexivity fails at point " + std::to_string(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && test_bit(up[i], j) && test_bit(up[j], i))
        throw validation_error("antisymmetry fails at pair (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (test_bit(up[i], j) && (up[j] & ~up[i]))
        throw validation_error("transitivity fails at pair (" + std::to_string(i) + ", " +
                               std::to_string(j) + ")");

  return from_up_rows(n, std::move(up), std::move(labels));
}

FinitePoset FinitePoset::from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                                     std::vector<std::string> labels) {
  check_point_cap(n);
  check_labels(n, labels);
  std::vector<PointSet> up(n, 0);
  for (auto [i, j] : covers) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw validation_error("cover pair out of range");
    up[i] |= bit(j);
  }
  for (int i = 0; i < n; ++i) up[i] |= bit(i);
  // reflexive-transitive closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (test_bit(up[i], k)) up[i] |= up[k];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && test_bit(up[i], j) && test_bit(up[j], i))
        throw validation_error("covers contain a cycle through points " + std::to_string(i) +
                               " and " + std::to_string(j));
  return from_up_rows(n, std::move(up), std::move(labels));
}

FinitePoset FinitePoset::from_up_rows(int n, std::vector<PointSet> up,
                                      std::vector<std::string> labels) {
  check_point_cap(n);
  check_labels(n, labels);
  FinitePoset p;
  p.n_ = n;
  p.up_ = std::move(up);
  p.labels_ = std::move(labels);
  p.down_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    assert(test_bit(p.up_[i], i));
    for (int j = 0; j < n; ++j)
      if (test_bit(p.up_[i], j)) p.down_[j] |= bit(i);
  }
  return p;
}

std::string FinitePoset::label(int i) const {
  if (i < 0 || i >= n_) throw validation_error("point index out of range");
  return labels_.empty() ? default_label(i) : labels_[i];
}

std::optional<int> FinitePoset::point_with_label(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (label(i) == name) return i;
  return std::nullopt;
}

PointSet FinitePoset::up_closure(PointSet s) const {
  PointSet out = 0;
  for (int i = 0; i < n_; ++i)
    if (test_bit(s, i)) out |= up_[i];
  return out;
}

PointSet FinitePoset::down_closure(PointSet s) const {
  PointSet out = 0;
  for (int i = 0; i < n_; ++i)
    if (test_bit(s, i)) out |= down_[i];
  return out;
}

bool FinitePoset::is_upset(PointSet s) const {
  for (int i = 0; i < n_; ++i)
    if (test_bit(s, i) && (up_[i] & ~s)) return false;
  return true;
}

std::vector<PointSet> FinitePoset::all_upsets(std::size_t limit) const {
  std::unordered_set<PointSet> seen;
  std::vector<PointSet> stack{0};
  seen.insert(0);
  while (!stack.empty()) {
    PointSet u = stack.back();
    stack.pop_back();
    for (int p = 0; p < n_; ++p) {
      if (test_bit(u, p)) continue;
      // adding p keeps u an upset iff everything strictly above p is in already
      if ((up_[p] & ~bit(p)) & ~u) continue;
      PointSet v = u | bit(p);
      if (seen.insert(v).second) {
        if (limit && seen.size() > limit)
          throw cap_error("more than " + std::to_string(limit) + " upsets");
        stack.push_back(v);
      }
    }
  }
  std::vector<PointSet> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) {
    int ca = popcount(a), cb = popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      if (i == j || !leq(i, j)) continue;
      // j covers i iff nothing sits strictly between
      PointSet between = up_[i] & down_[j] & ~bit(i) & ~bit(j);
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

PointSet FinitePoset::minimal_points() const {
  PointSet out = 0;
  for (int i = 0; i < n_; ++i)
    if ((down_[i] & ~bit(i)) == 0) out |= bit(i);
  return out;
}

PointSet FinitePoset::maximal_points() const {
  PointSet out = 0;
  for (int i = 0; i < n_; ++i)
    if ((up_[i] & ~bit(i)) == 0) out |= bit(i);
  return out;
}

std::optional<int> FinitePoset::minimum() const {
  for (int i = 0; i < n_; ++i)
    if (up_[i] == points()) return i;
  return std::nullopt;
}

std::optional<int> FinitePoset::maximum() const {
  for (int i = 0; i < n_; ++i)
    if (down_[i] == points()) return i;
  return std::nullopt;
}

std::vector<int> FinitePoset::linear_extension() const {
  std::vector<int> order;
  PointSet done = 0;
  while ((int)order.size() < n_) {
    for (int i = 0; i < n_; ++i) {
      if (test_bit(done, i)) continue;
      if ((down_[i] & ~done & ~bit(i)) == 0) {
        order.push_back(i);
        done |= bit(i);
        break;
      }
    }
  }
  return order;
}

int FinitePoset::depth() const {
  std::vector<int> len(n_, 0);
  int best = 0;
  for (int p : linear_extension()) {
    int l = 1;
    for (int q = 0; q < n_; ++q)
      if (q != p && leq(q, p)) l = std::max(l, len[q] + 1);
    len[p] = l;
    best = std::max(best, l);
  }
  return best;
}

// Dilworth: a largest antichain in a finite poset has size |P| minus a
// maximum matching of the strict order seen as a bipartite graph.
int FinitePoset::max_antichain_in(PointSet s) const {
  std::vector<int> pts;
  for (int i = 0; i < n_; ++i)
    if (test_bit(s, i)) pts.push_back(i);
  int k = (int)pts.size();
  if (k == 0) return 0;
  std::vector<int> match_right(k, -1);
  std::vector<char> visited;
  std::function<bool(int)> augment = [&](int u) -> bool {
    for (int v = 0; v < k; ++v) {
      if (!lt(pts[u], pts[v]) || visited[v]) continue;
      visited[v] = 1;
      if (match_right[v] < 0 || augment(match_right[v])) {
        match_right[v] = u;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int u = 0; u < k; ++u) {
    visited.assign(k, 0);
    if (augment(u)) ++matching;
  }
  return k - matching;
}

int FinitePoset::width() const {
  int best = 0;
  for (int x = 0; x < n_; ++x) best = std::max(best, max_antichain_in(up_[x]));
  return best;
}

int FinitePoset::incomparability_degree() const {
  int best = 0;
  for (int x = 0; x < n_; ++x) {
    PointSet u = up_[x];
    for (int y = 0; y < n_; ++y) {
      if (!test_bit(u, y)) continue;
      PointSet incomp = u & ~(up_[y] | down_[y]);
      best = std::max(best, popcount(incomp));
    }
  }
  return best;
}

FinitePoset FinitePoset::induced(PointSet s, std::vector<int>* point_map) const {
  std::vector<int> pts;
  for (int i = 0; i < n_; ++i)
    if (test_bit(s, i)) pts.push_back(i);
  int k = (int)pts.size();
  std::vector<PointSet> up(k, 0);
  std::vector<std::string> labels;
  if (!labels_.empty()) labels.reserve(k);
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b)
      if (leq(pts[a], pts[b])) up[a] |= bit(b);
    if (!labels_.empty()) labels.push_back(labels_[pts[a]]);
  }
  if (point_map) *point_map = pts;
  return from_up_rows(k, std::move(up), std::move(labels));
}

FinitePoset FinitePoset::relabel(std::vector<std::string> labels) const {
  return from_up_rows(n_, up_, std::move(labels));
}

FinitePoset poset_sum(const FinitePoset& p, const FinitePoset& q) {
  int n = p.size() + q.size();
  if (n > kMaxPoints) throw cap_error("poset sum exceeds the 64-point cap");
  std::vector<PointSet> up(n, 0);
  PointSet qmask = full_set(n) & ~full_set(p.size());
  for (int i = 0; i < p.size(); ++i) up[i] = p.up_of(i) | qmask;
  for (int i = 0; i < q.size(); ++i) up[p.size() + i] = q.up_of(i) << p.size();
  std::vector<std::string> labels;
  if (!p.labels().empty() || !q.labels().empty()) {
    for (int i = 0; i < p.size(); ++i) labels.push_back(p.label(i));
    for (int i = 0; i < q.size(); ++i) labels.push_back(q.label(i));
  }
  return FinitePoset::from_up_rows(n, std::move(up), std::move(labels));
}

FinitePoset tower(const std::vector<FinitePoset>& parts, bool with_top) {
  FinitePoset acc;
  for (const auto& part : parts) acc = poset_sum(acc, part);
  if (with_top) {
    FinitePoset top = FinitePoset::from_up_rows(1, {1}, {"top"});
    acc = poset_sum(acc, top);
  }
  return acc;
}

namespace {

// Cheap per-point fingerprint preserved by isomorphisms.
struct PointInvariant {
  int up, down, covers_up, covers_down, level;
  auto operator<=>(const PointInvariant&) const = default;
};

std::vector<PointInvariant> point_invariants(const FinitePoset& p) {
  int n = p.size();
  std::vector<PointInvariant> inv(n);
  std::vector<int> level(n, 0);
  for (int x : p.linear_extension()) {
    int l = 1;
    for (int q = 0; q < n; ++q)
      if (q != x && p.leq(q, x)) l = std::max(l, level[q] + 1);
    level[x] = l;
  }
  auto cov = p.covers();
  std::vector<int> cu(n, 0), cd(n, 0);
  for (auto [a, b] : cov) {
    ++cu[a];
    ++cd[b];
  }
  for (int i = 0; i < n; ++i)
    inv[i] = {popcount(p.up_of(i)), popcount(p.down_of(i)), cu[i], cd[i], level[i]};
  return inv;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FinitePoset& p, const FinitePoset& q) {
  if (p.size() != q.size()) return std::nullopt;
  int n = p.size();
  if (n == 0) return std::vector<int>{};
  auto ip = point_invariants(p), iq = point_invariants(q);
  {
    auto sp = ip, sq = iq;
    std::sort(sp.begin(), sp.end());
    std::sort(sq.begin(), sq.end());
    if (sp != sq) return std::nullopt;
  }
  std::vector<int> map(n, -1);
  PointSet used = 0;
  std::function<bool(int)> place = [&](int a) -> bool {
    if (a == n) return true;
    for (int b = 0; b < n; ++b) {
      if (test_bit(used, b) || ip[a] != iq[b]) continue;
      bool ok = true;
      for (int c = 0; c < a && ok; ++c)
        ok = (p.leq(a, c) == q.leq(b, map[c])) && (p.leq(c, a) == q.leq(map[c], b));
      if (!ok) continue;
      map[a] = b;
      used |= bit(b);
      if (place(a + 1)) return true;
      used &= ~bit(b);
      map[a] = -1;
    }
    return false;
  };
  if (place(0)) return map;
  return std::nullopt;
}

bool isomorphic(const FinitePoset& p, const FinitePoset& q) {
  return find_isomorphism(p, q).has_value();
}

std::vector<std::uint64_t> canonical_key(const FinitePoset& p) {
  int n = p.size();
  auto inv = point_invariants(p);
  // candidate positions are filled best-invariant-first; ties explored fully
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return inv[a] < inv[b]; });

  auto encode = [&](const std::vector<int>& pos_of) {
    // row-major bit matrix of the relabeled poset
    std::vector<std::uint64_t> key((n * n + 63) / 64, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (p.leq(i, j)) {
          int cell = pos_of[i] * n + pos_of[j];
          key[cell >> 6] |= std::uint64_t{1} << (cell & 63);
        }
    return key;
  };

  std::vector<std::uint64_t> best;
  std::vector<int> pos_of(n, -1), chosen;
  PointSet used = 0;
  std::function<void(int)> rec = [&](int slot) {
    if (slot == n) {
      auto key = encode(pos_of);
      if (best.empty() || key < best) best = key;
      return;
    }
    // only points sharing the invariant of this slot's rank may occupy it
    for (int idx = 0; idx < n; ++idx) {
      int cand = order[idx];
      if (test_bit(used, cand)) continue;
      if (inv[cand] != inv[order[slot]]) continue;
      pos_of[cand] = slot;
      used |= bit(cand);
      rec(slot + 1);
      used &= ~bit(cand);
      pos_of[cand] = -1;
    }
  };
  if (n == 0) return {};
  rec(0);
  return best;
}

std::vector<FinitePoset> enumerate_labeled_posets(int m) {
  if (m < 0 || m > 4) throw cap_error("labeled poset enumeration capped at 4 points");
  std::vector<FinitePoset> out;
  if (m == 0) {
    out.push_back(FinitePoset{});
    return out;
  }
  int cells = m * m;
  // iterate all off-diagonal assignments; diagonal fixed to 1
  std::vector<int> off;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) off.push_back(i * m + j);
  int k = (int)off.size();
  std::vector<std::pair<std::vector<bool>, FinitePoset>> found;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::vector<bool>> leq(m, std::vector<bool>(m, false));
    for (int i = 0; i < m; ++i) leq[i][i] = true;
    for (int t = 0; t < k; ++t)
      if ((mask >> t) & 1) leq[off[t] / m][off[t] % m] = true;
    try {
      FinitePoset p = FinitePoset::from_relation(m, leq);
      std::vector<bool> flat(cells);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) flat[i * m + j] = leq[i][j];
      found.emplace_back(std::move(flat), std::move(p));
    } catch (const validation_error&) {
    }
  }
  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.reserve(found.size());
  for (auto& f : found) out.push_back(std::move(f.second));
  return out;
}

namespace {

// Posets with the relation contained in the natural order of the labels;
// every isomorphism class has at least one such representative.
void naturally_labeled(int n, std::vector<PointSet>& up, int k,
                       const std::function<void(const std::vector<PointSet>&)>& emit) {
  if (k == n) {
    emit(up);
    return;
  }
  // choose the set of points strictly below the new point k: any downset
  // of the poset built so far
  FinitePoset sofar = FinitePoset::from_up_rows(k, std::vector<PointSet>(up.begin(), up.begin() + k));
  std::vector<PointSet> downsets;
  {
    std::unordered_set<PointSet> seen{0};
    std::vector<PointSet> stack{0};
    while (!stack.empty()) {
      PointSet d = stack.back();
      stack.pop_back();
      downsets.push_back(d);
      for (int p = 0; p < k; ++p) {
        if (test_bit(d, p)) continue;
        if ((sofar.down_of(p) & ~bit(p)) & ~d) continue;
        PointSet e = d | bit(p);
        if (seen.insert(e).second) stack.push_back(e);
      }
    }
  }
  for (PointSet d : downsets) {
    up[k] = bit(k);
    for (int i = 0; i < k; ++i)
      if (test_bit(d, i)) up[i] |= bit(k);
    naturally_labeled(n, up, k + 1, emit);
    for (int i = 0; i < k; ++i)
      if (test_bit(d, i)) up[i] &= ~bit(k);
  }
}

}  // namespace

std::vector<FinitePoset> enumerate_posets(int n) {
  if (n < 0 || n > 7) throw cap_error("unlabeled poset enumeration capped at 7 points");
  std::vector<FinitePoset> reps;
  if (n == 0) {
    reps.push_back(FinitePoset{});
    return reps;
  }
  std::map<std::vector<int>, std::vector<int>> buckets;  // invariant -> rep indices
  auto bucket_key = [](const FinitePoset& p) {
    auto inv = point_invariants(p);
    std::vector<int> key;
    for (auto& i : inv) {
      key.push_back(i.up);
      key.push_back(i.down);
      key.push_back(i.covers_up);
      key.push_back(i.covers_down);
      key.push_back(i.level);
    }
    std::sort(key.begin(), key.end());
    return key;
  };
  std::vector<PointSet> up(n, 0);
  naturally_labeled(n, up, 0, [&](const std::vector<PointSet>& rows) {
    FinitePoset cand = FinitePoset::from_up_rows(n, rows);
    auto key = bucket_key(cand);
    auto& ids = buckets[key];
    for (int id : ids)
      if (isomorphic(reps[id], cand)) return;
    ids.push_back((int)reps.size());
    reps.push_back(std::move(cand));
  });
  std::sort(reps.begin(), reps.end(), [](const FinitePoset& a, const FinitePoset& b) {
    return canonical_key(a) < canonical_key(b);
  });
  return reps;
}

}  // namespace esakia
