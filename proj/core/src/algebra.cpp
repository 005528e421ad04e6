#include "esakia/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "esakia/duality.hpp"

namespace esakia {

namespace {

constexpr int kMaxElements = 1 << 16;
constexpr int kMaxTableElements = 4096;  // m*m tables above this are refused

void check_element_cap(long long m) {
  if (m > kMaxElements) throw cap_error("element count exceeds 2^16");
  if (m > kMaxTableElements)
    throw cap_error("element count " + std::to_string(m) +
                    " too large to materialize operation tables (cap " +
                    std::to_string(kMaxTableElements) + ")");
}

}  // namespace

HeytingAlgebra HeytingAlgebra::from_tables(int m, std::vector<std::uint8_t> leq,
                                           std::vector<std::uint16_t> meet,
                                           std::vector<std::uint16_t> join,
                                           std::vector<std::uint16_t> imp, int bottom, int top,
                                           std::vector<std::string> labels) {
  if (m < 1) throw validation_error("an algebra needs at least one element");
  check_element_cap(m);
  size_t mm = (size_t)m * m;
  if (leq.size() != mm || meet.size() != mm || join.size() != mm || imp.size() != mm)
    throw validation_error("table size does not match element count");
  if (bottom < 0 || bottom >= m || top < 0 || top >= m)
    throw validation_error("bottom/top out of range");
  if (!labels.empty() && (int)labels.size() != m)
    throw validation_error("label count does not match element count");
  for (auto v : meet)
    if (v >= m) throw validation_error("meet table entry out of range");
  for (auto v : join)
    if (v >= m) throw validation_error("join table entry out of range");
  for (auto v : imp)
    if (v >= m) throw validation_error("imp table entry out of range");
  HeytingAlgebra a;
  a.m_ = m;
  a.leq_ = std::move(leq);
  a.meet_ = std::move(meet);
  a.join_ = std::move(join);
  a.imp_ = std::move(imp);
  a.bottom_ = bottom;
  a.top_ = top;
  a.labels_ = std::move(labels);
  return a;
}

HeytingAlgebra HeytingAlgebra::from_order(int m, const std::vector<std::uint8_t>& leq,
                                          std::vector<std::string> labels) {
  if (m < 1) throw validation_error("an algebra needs at least one element");
  check_element_cap(m);
  if ((int)leq.size() != m * m) throw validation_error("order size does not match element count");

  auto below = [&](int a) {
    std::vector<int> out;
    for (int x = 0; x < m; ++x)
      if (leq[x * m + a]) out.push_back(x);
    return out;
  };
  int bottom = -1, top = -1;
  for (int a = 0; a < m; ++a) {
    bool is_bot = true, is_top = true;
    for (int x = 0; x < m; ++x) {
      is_bot &= leq[a * m + x] != 0;
      is_top &= leq[x * m + a] != 0;
    }
    if (is_bot) bottom = a;
    if (is_top) top = a;
  }
  if (bottom < 0 || top < 0) throw validation_error("order has no bottom or no top");

  std::vector<std::uint16_t> meet(m * m), join(m * m), imp(m * m);
  // meet(a,b): the greatest common lower bound, required unique
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      int best = -1;
      for (int x = 0; x < m; ++x) {
        if (!leq[x * m + a] || !leq[x * m + b]) continue;
        if (best < 0 || leq[best * m + x]) best = x;
      }
      // best must dominate every common lower bound
      for (int x = 0; x < m; ++x)
        if (leq[x * m + a] && leq[x * m + b] && !leq[x * m + best])
          throw validation_error("order is not a meet-semilattice at (" + std::to_string(a) +
                                 ", " + std::to_string(b) + ")");
      meet[a * m + b] = meet[b * m + a] = (std::uint16_t)best;
    }
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      int best = -1;
      for (int x = 0; x < m; ++x) {
        if (!leq[a * m + x] || !leq[b * m + x]) continue;
        if (best < 0 || leq[x * m + best]) best = x;
      }
      for (int x = 0; x < m; ++x)
        if (leq[a * m + x] && leq[b * m + x] && !leq[best * m + x])
          throw validation_error("order is not a join-semilattice at (" + std::to_string(a) +
                                 ", " + std::to_string(b) + ")");
      join[a * m + b] = join[b * m + a] = (std::uint16_t)best;
    }
  // imp(a,b): the greatest z with z /\ a <= b
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int best = -1;
      for (int z = 0; z < m; ++z) {
        if (!leq[meet[z * m + a] * m + b]) continue;
        if (best < 0 || leq[best * m + z]) best = z;
      }
      for (int z = 0; z < m; ++z)
        if (leq[meet[z * m + a] * m + b] && !leq[z * m + best])
          throw validation_error("no relative pseudocomplement at (" + std::to_string(a) + ", " +
                                 std::to_string(b) + ")");
      imp[a * m + b] = (std::uint16_t)best;
    }
  return from_tables(m, leq, std::move(meet), std::move(join), std::move(imp), bottom, top,
                     std::move(labels));
}

std::string HeytingAlgebra::label(int a) const {
  if (a < 0 || a >= m_) throw validation_error("element index out of range");
  return labels_.empty() ? std::to_string(a) : labels_[a];
}

std::optional<int> HeytingAlgebra::element_with_label(const std::string& name) const {
  for (int a = 0; a < m_; ++a)
    if (label(a) == name) return a;
  return std::nullopt;
}

HeytingAlgebra HeytingAlgebra::relabel(std::vector<std::string> labels) const {
  if (!labels.empty() && (int)labels.size() != m_)
    throw validation_error("label count does not match element count");
  HeytingAlgebra a = *this;
  a.labels_ = std::move(labels);
  return a;
}

PointSet HeytingAlgebra::upset_of(int a) const {
  if (!dual_) throw validation_error("algebra has no dual-poset provenance");
  return elem_upsets_.at(a);
}

std::optional<int> HeytingAlgebra::element_of_upset(PointSet u) const {
  if (!dual_) throw validation_error("algebra has no dual-poset provenance");
  for (int a = 0; a < m_; ++a)
    if (elem_upsets_[a] == u) return a;
  return std::nullopt;
}

HeytingAlgebra from_upsets(const FinitePoset& p) {
  auto ups = p.all_upsets(kMaxElements);
  long long m = (long long)ups.size();
  check_element_cap(m);
  std::unordered_map<PointSet, int> index;
  index.reserve(ups.size());
  for (int i = 0; i < (int)m; ++i) index[ups[i]] = i;

  PointSet all = p.points();
  std::vector<std::uint8_t> leq(m * m);
  std::vector<std::uint16_t> meet(m * m), join(m * m), imp(m * m);
  for (int i = 0; i < (int)m; ++i)
    for (int j = 0; j < (int)m; ++j) {
      PointSet u = ups[i], v = ups[j];
      leq[i * m + j] = (u & ~v) == 0;
      meet[i * m + j] = (std::uint16_t)index.at(u & v);
      join[i * m + j] = (std::uint16_t)index.at(u | v);
      imp[i * m + j] = (std::uint16_t)index.at(all & ~p.down_closure(u & ~v));
    }
  auto a = HeytingAlgebra::from_tables((int)m, std::move(leq), std::move(meet), std::move(join),
                                       std::move(imp), index.at(0), index.at(all));
  a.dual_ = std::make_shared<const FinitePoset>(p);
  a.elem_upsets_ = std::move(ups);
  return a;
}

std::string HeytingVerdict::str() const {
  if (ok) return "ok";
  std::string s = axiom + " fails at (";
  for (size_t i = 0; i < witness.size(); ++i)
    s += (i ? ", " : "") + std::to_string(witness[i]);
  return s + ")";
}

HeytingVerdict verify_heyting(const HeytingAlgebra& a) {
  int m = a.size();
  auto fail = [](std::string ax, std::vector<int> w) {
    return HeytingVerdict{false, std::move(ax), std::move(w)};
  };
  for (int x = 0; x < m; ++x)
    if (!a.leq(x, x)) return fail("reflexivity", {x});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x != y && a.leq(x, y) && a.leq(y, x)) return fail("antisymmetry", {x, y});
      for (int z = 0; z < m; ++z)
        if (a.leq(x, y) && a.leq(y, z) && !a.leq(x, z)) return fail("transitivity", {x, y, z});
    }
  for (int x = 0; x < m; ++x) {
    if (!a.leq(a.bottom(), x)) return fail("bottom", {x});
    if (!a.leq(x, a.top())) return fail("top", {x});
  }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int g = a.meet(x, y);
      if (!a.leq(g, x) || !a.leq(g, y)) return fail("meet-lower-bound", {x, y});
      int j = a.join(x, y);
      if (!a.leq(x, j) || !a.leq(y, j)) return fail("join-upper-bound", {x, y});
      for (int z = 0; z < m; ++z) {
        if (a.leq(z, x) && a.leq(z, y) && !a.leq(z, g)) return fail("meet-greatest", {x, y, z});
        if (a.leq(x, z) && a.leq(y, z) && !a.leq(j, z)) return fail("join-least", {x, y, z});
      }
    }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z)
        if (a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z)))
          return fail("distributivity", {x, y, z});
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int z = 0; z < m; ++z) {
        bool lhs = a.leq(a.meet(x, y), z);
        bool rhs = a.leq(x, a.imp(y, z));
        if (lhs != rhs) return fail("residuation", {x, y, z});
      }
  return {};
}

bool is_fsi(const HeytingAlgebra& a) {
  int m = a.size();
  if (m == 1) return false;
  for (int x = 0; x < m; ++x)
    for (int y = x; y < m; ++y)
      if (a.join(x, y) == a.top() && x != a.top() && y != a.top()) return false;
  return true;
}

std::vector<int> nodes(const HeytingAlgebra& a) {
  int m = a.size();
  std::vector<int> out;
  for (int x = 0; x < m; ++x) {
    bool node = true;
    for (int y = 0; y < m && node; ++y) node = a.leq(x, y) || a.leq(y, x);
    if (node) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), [&](int x, int y) { return x != y && a.leq(x, y); });
  return out;
}

HeytingAlgebra alg_sum(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  int ma = a.size(), mb = b.size();
  long long m = (long long)ma + mb - 1;
  check_element_cap(m);
  // elements: 0..mb-1 = b, then a's elements with its bottom removed
  std::vector<int> a_index(ma, -1);
  {
    int next = mb;
    for (int x = 0; x < ma; ++x)
      if (x != a.bottom()) a_index[x] = next++;
  }
  std::vector<std::uint8_t> leq(m * m, 0);
  for (int x = 0; x < mb; ++x)
    for (int y = 0; y < mb; ++y) leq[x * m + y] = b.leq(x, y);
  for (int x = 0; x < ma; ++x)
    for (int y = 0; y < ma; ++y) {
      if (x == a.bottom() || y == a.bottom()) continue;
      leq[a_index[x] * m + a_index[y]] = a.leq(x, y);
    }
  for (int x = 0; x < mb; ++x)
    for (int y = 0; y < ma; ++y)
      if (y != a.bottom()) leq[x * m + a_index[y]] = 1;

  std::vector<std::string> labels;
  if (!a.labels().empty() || !b.labels().empty()) {
    labels.resize(m);
    for (int x = 0; x < mb; ++x) labels[x] = b.label(x);
    for (int x = 0; x < ma; ++x)
      if (x != a.bottom()) labels[a_index[x]] = a.label(x);
  }
  return HeytingAlgebra::from_order((int)m, leq, std::move(labels));
}

HeytingAlgebra alg_sum(const std::vector<HeytingAlgebra>& parts) {
  if (parts.empty()) throw validation_error("sum of no algebras");
  HeytingAlgebra acc = parts.front();
  for (size_t i = 1; i < parts.size(); ++i) acc = alg_sum(acc, parts[i]);
  return acc;
}

HeytingAlgebra product(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  long long m = (long long)a.size() * b.size();
  check_element_cap(m);
  int mb = b.size();
  auto id = [&](int i, int j) { return i * mb + j; };
  std::vector<std::uint8_t> leq(m * m);
  std::vector<std::uint16_t> meet(m * m), join(m * m), imp(m * m);
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < mb; ++j)
      for (int k = 0; k < a.size(); ++k)
        for (int l = 0; l < mb; ++l) {
          int x = id(i, j), y = id(k, l);
          leq[x * m + y] = a.leq(i, k) && b.leq(j, l);
          meet[x * m + y] = (std::uint16_t)id(a.meet(i, k), b.meet(j, l));
          join[x * m + y] = (std::uint16_t)id(a.join(i, k), b.join(j, l));
          imp[x * m + y] = (std::uint16_t)id(a.imp(i, k), b.imp(j, l));
        }
  return HeytingAlgebra::from_tables((int)m, std::move(leq), std::move(meet), std::move(join),
                                     std::move(imp), id(a.bottom(), b.bottom()),
                                     id(a.top(), b.top()));
}

ElemSet SubalgebraHandle::member_set() const {
  if (!parent) throw validation_error("subalgebra handle has no parent");
  return ElemSet::of(parent->size(), members);
}

SubalgebraHandle subalgebra_generated(const HeytingAlgebra& a, const std::vector<int>& seed) {
  ElemSet in(a.size());
  std::vector<int> work;
  auto add = [&](int x) {
    if (!in.test(x)) {
      in.set(x);
      work.push_back(x);
    }
  };
  add(a.bottom());
  add(a.top());
  for (int s : seed) {
    if (s < 0 || s >= a.size()) throw validation_error("seed element out of range");
    add(s);
  }
  std::vector<int> members = work;
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      int x = members[i], y = members[j];
      for (int v : {a.meet(x, y), a.join(x, y), a.imp(x, y), a.imp(y, x)})
        if (!in.test(v)) {
          in.set(v);
          members.push_back(v);
        }
    }
  std::sort(members.begin(), members.end());
  return SubalgebraHandle{&a, std::move(members)};
}

bool is_subuniverse(const HeytingAlgebra& a, const std::vector<int>& members) {
  ElemSet in = ElemSet::of(a.size(), members);
  if (!in.test(a.bottom()) || !in.test(a.top())) return false;
  for (int x : members)
    for (int y : members)
      if (!in.test(a.meet(x, y)) || !in.test(a.join(x, y)) || !in.test(a.imp(x, y)))
        return false;
  return true;
}

HeytingAlgebra subalgebra_as_algebra(const SubalgebraHandle& h) {
  const HeytingAlgebra& a = *h.parent;
  if (!is_subuniverse(a, h.members)) throw validation_error("member set is not closed");
  int m = (int)h.members.size();
  std::vector<int> back(a.size(), -1);
  for (int i = 0; i < m; ++i) back[h.members[i]] = i;
  std::vector<std::uint8_t> leq(m * m);
  std::vector<std::uint16_t> meet(m * m), join(m * m), imp(m * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int x = h.members[i], y = h.members[j];
      leq[i * m + j] = a.leq(x, y);
      meet[i * m + j] = (std::uint16_t)back[a.meet(x, y)];
      join[i * m + j] = (std::uint16_t)back[a.join(x, y)];
      imp[i * m + j] = (std::uint16_t)back[a.imp(x, y)];
    }
  std::vector<std::string> labels;
  if (!a.labels().empty())
    for (int x : h.members) labels.push_back(a.label(x));
  return HeytingAlgebra::from_tables(m, std::move(leq), std::move(meet), std::move(join),
                                     std::move(imp), back[a.bottom()], back[a.top()],
                                     std::move(labels));
}

std::optional<int> is_one_generated(const HeytingAlgebra& a) {
  for (int x = 0; x < a.size(); ++x)
    if ((int)subalgebra_generated(a, {x}).members.size() == a.size()) return x;
  return std::nullopt;
}

std::optional<std::vector<int>> algebra_iso(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  if (a.size() != b.size()) return std::nullopt;
  if (a.size() == 1) return std::vector<int>{0};
  DualSpace da = prime_filter_space(a), db = prime_filter_space(b);
  auto pmap = find_isomorphism(da.space, db.space);
  if (!pmap) return std::nullopt;
  std::unordered_map<PointSet, int> b_by_gamma;
  for (int y = 0; y < b.size(); ++y) b_by_gamma[db.gamma[y]] = y;
  std::vector<int> f(a.size());
  for (int x = 0; x < a.size(); ++x) {
    PointSet transported = 0;
    for (int i = 0; i < da.space.size(); ++i)
      if (test_bit(da.gamma[x], i)) transported |= bit((*pmap)[i]);
    auto it = b_by_gamma.find(transported);
    if (it == b_by_gamma.end()) return std::nullopt;
    f[x] = it->second;
  }
  // the transport is a bijection by construction; confirm it is a homomorphism
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y) {
      if (f[a.meet(x, y)] != b.meet(f[x], f[y])) return std::nullopt;
      if (f[a.join(x, y)] != b.join(f[x], f[y])) return std::nullopt;
      if (f[a.imp(x, y)] != b.imp(f[x], f[y])) return std::nullopt;
    }
  if (f[a.bottom()] != b.bottom() || f[a.top()] != b.top()) return std::nullopt;
  return f;
}

bool algebras_isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  return algebra_iso(a, b).has_value();
}

}  // namespace esakia
