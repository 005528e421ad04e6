#include "esakia/constructions.hpp"

#include <algorithm>
#include <map>

namespace esakia {

HeytingAlgebra bool2() { return from_upsets(FinitePoset::from_up_rows(1, {1}, {"p"})); }

HeytingAlgebra chain_algebra(int k) {
  if (k < 1) throw validation_error("a chain needs at least one element");
  int n = k - 1;
  std::vector<PointSet> up(n);
  for (int i = 0; i < n; ++i) up[i] = full_set(n) & ~full_set(i);
  return from_upsets(FinitePoset::from_up_rows(n, std::move(up)));
}

HeytingAlgebra diamond() { return from_upsets(d2_space()); }

FinitePoset d2_space() {
  return FinitePoset::from_up_rows(2, {bit(0), bit(1)}, {"a1", "a2"});
}

FinitePoset x_n_space(int n) {
  if (n < 2) throw validation_error("x_n spaces start at n = 2");
  if (2 * n > kMaxPoints) throw cap_error("x_n space exceeds the 64-point cap");
  // points 0..n-1 are a_1..a_n, points n..2n-1 are b_1..b_n
  std::vector<PointSet> up(2 * n, 0);
  std::vector<std::string> labels(2 * n);
  for (int i = 0; i < n; ++i) {
    up[i] = bit(i);
    up[n + i] = bit(n + i);
    labels[i] = "a" + std::to_string(i + 1);
    labels[n + i] = "b" + std::to_string(i + 1);
  }
  for (int j = 1; j < n; ++j) up[0] |= bit(n + j);          // a_1 < b_2..b_n
  for (int m = 1; m < n; ++m) up[m] |= bit(n) | bit(n + m);  // a_{m+1} < b_1, b_{m+1}
  return FinitePoset::from_up_rows(2 * n, std::move(up), std::move(labels));
}

LabeledTower x_n_tower(int n, int copies, bool with_top) {
  if (n < 2) throw validation_error("x_n towers start at n = 2");
  if (copies < 1) throw validation_error("a tower needs at least one copy");
  FinitePoset block = x_n_space(n);
  std::vector<FinitePoset> parts(copies, block);
  FinitePoset p = tower(parts, with_top);

  std::vector<std::string> labels(p.size());
  std::vector<int> copy_index(p.size(), -1);
  for (int j = 0; j < copies; ++j) {
    int base = 2 * n * j;
    for (int i = 0; i < 2 * n; ++i) copy_index[base + i] = j;
    if (j == 0) {
      labels[base + 0] = "bot";
      for (int i = 1; i < n; ++i) labels[base + i] = "x" + std::to_string(i);
      labels[base + n] = "x" + std::to_string(n);
      for (int i = 1; i < n; ++i) labels[base + n + i] = "y" + std::to_string(i);
    } else {
      labels[base + 0] = "y" + std::to_string(j * n);
      for (int i = 1; i < n; ++i) labels[base + i] = "x" + std::to_string(j * n + i);
      labels[base + n] = "x" + std::to_string((j + 1) * n);
      for (int i = 1; i < n; ++i) labels[base + n + i] = "y" + std::to_string(j * n + i);
    }
  }
  if (with_top) labels[p.size() - 1] = "top";

  LabeledTower t;
  t.poset = p.relabel(std::move(labels));
  t.copy_index = std::move(copy_index);
  t.has_top = with_top;
  t.copies = copies;
  t.param_n = n;
  return t;
}

namespace {

Partition pair_labels(const FinitePoset& p, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> cls(p.size());
  for (int i = 0; i < p.size(); ++i) cls[i] = i;
  for (auto [a, b] : pairs) cls[b] = cls[a];
  return Partition::from_class_of(std::move(cls));
}

}  // namespace

Partition r_n_partition(const LabeledTower& t) {
  if (!t.has_top)
    throw validation_error("the truncated pairing needs the top point to absorb the last class");
  const FinitePoset& p = t.poset;
  std::vector<std::pair<int, int>> pairs;
  int last_x = -1, last_index = -1;
  for (int k = 1;; ++k) {
    auto x = p.point_with_label("x" + std::to_string(k));
    if (!x) break;
    auto y = p.point_with_label("y" + std::to_string(k));
    if (y)
      pairs.emplace_back(*x, *y);
    else {
      last_x = *x;
      last_index = k;
    }
  }
  if (last_x >= 0) {
    // the partner of the highest x lives in the copies cut away; the top
    // point stands in for them
    if (last_index != t.copies * t.param_n)
      throw validation_error("unexpected unpaired label x" + std::to_string(last_index));
    pairs.emplace_back(last_x, *p.point_with_label("top"));
  }
  Partition r = pair_labels(p, pairs);
  if (auto v = is_correct_partition(r, p); !v.ok)
    throw validation_error("tower labeling bug: " + v.str());
  return r;
}

LabeledTower d2_tower(int copies, bool with_top) {
  if (copies < 1) throw validation_error("a tower needs at least one copy");
  std::vector<FinitePoset> parts(copies, d2_space());
  FinitePoset p = tower(parts, with_top);
  std::vector<std::string> labels(p.size());
  std::vector<int> copy_index(p.size(), -1);
  for (int j = 0; j < copies; ++j) {
    labels[2 * j] = "l" + std::to_string(j);
    labels[2 * j + 1] = "r" + std::to_string(j);
    copy_index[2 * j] = copy_index[2 * j + 1] = j;
  }
  if (with_top) labels[p.size() - 1] = "top";
  LabeledTower t;
  t.poset = p.relabel(std::move(labels));
  t.copy_index = std::move(copy_index);
  t.has_top = with_top;
  t.copies = copies;
  t.param_n = 2;
  return t;
}

Partition d2_partition(const LabeledTower& t) {
  if (t.copies < 2) throw validation_error("the staggered pairing needs at least two copies");
  if (!t.has_top)
    throw validation_error("the truncated pairing needs the top point to absorb the last class");
  const FinitePoset& p = t.poset;
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j + 1 < t.copies; ++j)
    pairs.emplace_back(*p.point_with_label("r" + std::to_string(j)),
                       *p.point_with_label("l" + std::to_string(j + 1)));
  pairs.emplace_back(*p.point_with_label("r" + std::to_string(t.copies - 1)),
                     *p.point_with_label("top"));
  Partition r = pair_labels(p, pairs);
  if (auto v = is_correct_partition(r, p); !v.ok)
    throw validation_error("tower labeling bug: " + v.str());
  return r;
}

RNElement RNElement::parse(const std::string& name) {
  if (name.size() < 2 || (name[0] != 'w' && name[0] != 'a'))
    throw validation_error("expected w<k> or a<k>, got '" + name + "'");
  int idx = std::stoi(name.substr(1));
  if (name[0] == 'a' && idx < 1) throw validation_error("a-elements start at a1");
  if (idx < 0) throw validation_error("negative index");
  return {name[0] == 'w' ? Kind::W : Kind::A, idx};
}

std::string RNElement::str() const {
  return (kind == Kind::W ? "w" : "a") + std::to_string(index);
}

namespace {

struct RNPrefix {
  // elements 0, w0, w1, a1, w2, a2, w3, a3, ... up to index bound
  std::vector<std::string> names;
  std::map<std::string, int> id;
  std::vector<std::pair<int, int>> covers;

  explicit RNPrefix(int max_index) {
    auto add = [&](const std::string& n) {
      id[n] = (int)names.size();
      names.push_back(n);
    };
    auto w = [](int k) { return "w" + std::to_string(k); };
    auto a = [](int k) { return "a" + std::to_string(k); };
    add("0");
    add(w(0));
    add(w(1));
    for (int k = 1; k <= max_index; ++k) {
      add(a(k));
      add(w(k + 1));
    }
    auto cov = [&](const std::string& lo, const std::string& hi) {
      if (id.count(lo) && id.count(hi)) covers.emplace_back(id[lo], id[hi]);
    };
    cov("0", w(0));
    cov("0", w(1));
    cov(w(0), a(1));
    cov(w(1), a(1));
    cov(w(0), w(2));
    for (int k = 1; k <= max_index; ++k) {
      cov(w(k + 1), a(k + 1));
      cov(a(k), a(k + 1));
      cov(a(k), w(k + 2));
    }
  }
};

}  // namespace

HeytingAlgebra rn_downset(RNElement top) {
  if (top.index > 30) throw cap_error("downset construction capped at index 30");
  RNPrefix rn(top.index + 1);
  auto it = rn.id.find(top.str());
  if (it == rn.id.end()) throw validation_error("no such element: " + top.str());
  int n = (int)rn.names.size();
  FinitePoset whole = FinitePoset::from_covers(n, rn.covers, rn.names);
  PointSet down = whole.down_of(it->second);
  std::vector<int> kept;
  FinitePoset sub = whole.induced(down, &kept);
  int m = sub.size();
  std::vector<std::uint8_t> leq(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[i * m + j] = sub.leq(i, j);
  HeytingAlgebra a = HeytingAlgebra::from_order(m, leq, sub.labels());
  if (auto v = verify_heyting(a); !v.ok)
    throw validation_error("downset is not a Heyting algebra (cover rule bug): " + v.str());
  return a;
}

namespace {

std::vector<int> elements_by_labels(const HeytingAlgebra& a,
                                    const std::vector<std::string>& names) {
  std::vector<int> out;
  for (const auto& s : names) {
    auto e = a.element_with_label(s);
    if (!e) throw validation_error("algebra has no element labeled '" + s + "'");
    out.push_back(*e);
  }
  return out;
}

std::string w_name(int k) { return "w" + std::to_string(k); }
std::string a_name(int k) { return "a" + std::to_string(k); }

}  // namespace

SubalgebraHandle lemma_kg_i_subalgebra(const HeytingAlgebra& a, int n) {
  if (n < 0) throw validation_error("negative block count");
  if (a.size() < 6 * n + 1)
    throw validation_error("needs at least " + std::to_string(6 * n + 1) + " elements, have " +
                           std::to_string(a.size()));
  std::vector<std::string> names;
  for (int k = 0; k < n; ++k) {
    names.push_back(w_name(1 + 3 * k));
    names.push_back(w_name(2 + 3 * k));
    names.push_back(a_name(2 + 3 * k));
  }
  std::vector<int> members = elements_by_labels(a, names);
  members.push_back(a.bottom());
  members.push_back(a.top());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subuniverse(a, members))
    throw validation_error("selected elements fail to close under the operations");
  return SubalgebraHandle{&a, std::move(members)};
}

SubalgebraHandle lemma_kg_ii_universe(const HeytingAlgebra& a) {
  auto top_label = a.label(a.top());
  if (top_label.empty() || top_label[0] != 'a')
    throw validation_error("top element must be an a-element, got '" + top_label + "'");
  int m = std::stoi(top_label.substr(1));
  int p = m / 3, q = m % 3;

  std::vector<std::string> names;
  auto add_c2_part = [&](int pp) {
    // the q = 2 universe at level pp, bottom and top excluded
    for (int t = 0; t <= 3 * pp + 2; ++t)
      if (t % 3 != 0) names.push_back(w_name(t));
    for (int t = 0; t <= pp; ++t) names.push_back(a_name(3 * t + 2));
  };
  if (q == 2) {
    add_c2_part(p);
  } else if (q == 1) {
    if (p == 0) {
      // the four-element downset is itself a diamond
      names = {w_name(0), w_name(1)};
    } else {
      add_c2_part(p - 1);
      names.push_back(a_name(3 * p));
      names.push_back(w_name(3 * p + 1));
    }
  } else {  // q == 0
    if (p < 1) throw validation_error("a0 is not an element");
    add_c2_part(p - 1);
    names.push_back(w_name(3 * p));
    names.push_back(a_name(3 * p - 2));
    names.push_back(p == 1 ? w_name(0) : a_name(3 * (p - 1)));
  }

  std::vector<int> members = elements_by_labels(a, names);
  members.push_back(a.bottom());
  members.push_back(a.top());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_subuniverse(a, members))
    throw validation_error("selected elements fail to close under the operations");
  return SubalgebraHandle{&a, std::move(members)};
}

namespace {

// the interval [lo, hi] of a as a standalone algebra
HeytingAlgebra interval_algebra(const HeytingAlgebra& a, int lo, int hi) {
  std::vector<int> members;
  for (int x = 0; x < a.size(); ++x)
    if (a.leq(lo, x) && a.leq(x, hi)) members.push_back(x);
  int m = (int)members.size();
  std::vector<std::uint8_t> leq(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) leq[i * m + j] = a.leq(members[i], members[j]);
  std::vector<std::string> labels;
  if (!a.labels().empty())
    for (int x : members) labels.push_back(a.label(x));
  return HeytingAlgebra::from_order(m, leq, std::move(labels));
}

}  // namespace

std::vector<HeytingAlgebra> node_blocks(const HeytingAlgebra& a) {
  std::vector<int> node_chain = nodes(a);
  std::vector<HeytingAlgebra> blocks;
  for (size_t i = 0; i + 1 < node_chain.size(); ++i)
    blocks.push_back(interval_algebra(a, node_chain[i], node_chain[i + 1]));
  std::reverse(blocks.begin(), blocks.end());
  if (blocks.empty()) blocks.push_back(a);  // the one-element algebra
  return blocks;
}

std::vector<HeytingAlgebra> kg_decompose(const HeytingAlgebra& a) {
  std::vector<int> node_chain = nodes(a);
  if (node_chain.size() < 2) return {a};  // one element: nothing to split
  std::vector<HeytingAlgebra> blocks;  // built bottom-up
  size_t lo = 0;
  while (lo + 1 < node_chain.size()) {
    size_t hi = lo + 1;
    HeytingAlgebra block = interval_algebra(a, node_chain[lo], node_chain[hi]);
    while (!is_one_generated(block)) {
      ++hi;
      if (hi >= node_chain.size())
        throw validation_error("not decomposable into one-generated blocks: stuck above node " +
                               std::to_string(node_chain[lo]));
      block = interval_algebra(a, node_chain[lo], node_chain[hi]);
    }
    blocks.push_back(std::move(block));
    lo = hi;
  }
  std::reverse(blocks.begin(), blocks.end());  // top block first
  return blocks;
}

HeytingAlgebra b_n_family(int n) {
  if (n < 2) throw validation_error("the family starts at n = 2");
  std::vector<HeytingAlgebra> parts;
  parts.push_back(bool2());
  parts.push_back(product(bool2(), chain_algebra(3)));
  for (int i = 0; i < n - 2; ++i) parts.push_back(diamond());
  return alg_sum(parts);
}

HeytingAlgebra algebra_d() {
  return alg_sum({bool2(), rn_downset(RNElement::a(3)), bool2()});
}

}  // namespace esakia
