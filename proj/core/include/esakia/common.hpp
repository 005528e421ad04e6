#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace esakia {

// Subset of poset points encoded as a bit mask over point indices.
using PointSet = std::uint64_t;

inline constexpr int kMaxPoints = 64;

inline int popcount(PointSet s) { return std::popcount(s); }
inline bool test_bit(PointSet s, int i) { return (s >> i) & 1u; }
inline PointSet bit(int i) { return PointSet{1} << i; }
inline PointSet full_set(int n) { return n == 64 ? ~PointSet{0} : (PointSet{1} << n) - 1; }

// Malformed input: a relation that is not a partial order, a table that is
// not a lattice, a partition touching points that do not exist, ...
class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A documented resource cap was exceeded (point counts, element counts,
// assignment-space sizes). The CLI maps this to exit status 3.
class cap_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Subset of algebra elements; element counts may exceed 64.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

  int universe_size() const { return n_; }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  int count() const {
    int c = 0;
    for (auto x : w_) c += std::popcount(x);
    return c;
  }
  bool all() const { return count() == n_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  static ElemSet of(int n, const std::vector<int>& members) {
    ElemSet s(n);
    for (int i : members) {
      if (i < 0 || i >= n) throw validation_error("element index out of range");
      s.set(i);
    }
    return s;
  }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend bool operator<(const ElemSet& a, const ElemSet& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.w_ < b.w_;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace esakia
