#pragma once

#include <functional>
#include <set>
#include <stdexcept>
#include <vector>

#include "tltt/simplex/mono.hpp"

namespace tltt::simplex {

/// A subfunctor of the representable simplex of dimension n: a set of maps
/// [k] -> [n] closed under precomposition. Maps are identified with their
/// non-empty image masks.
class SimplicialSubset {
 public:
  SimplicialSubset(unsigned n, std::set<Mask> members) : n_(n), members_(std::move(members)) {
    if (n_ > kMaxDim) throw std::invalid_argument("dimension exceeds the guard");
    for (Mask m : members_)
      if (m == 0 || (m & ~full_mask(n_)) != 0)
        throw std::invalid_argument("member is not a non-empty subset of [0,n]");
  }

  static SimplicialSubset where(unsigned n, const std::function<bool(Mask)>& keep) {
    std::set<Mask> ms;
    for (Mask m = 1; m <= full_mask(n); ++m)
      if (keep(m)) ms.insert(m);
    return {n, std::move(ms)};
  }

  unsigned dim() const { return n_; }
  const std::set<Mask>& members() const { return members_; }
  bool contains(Mask m) const { return members_.count(m) != 0; }
  bool contains(const MonotoneMap& f) const { return f.codomain() == n_ && contains(f.mask()); }

  /// Maps [k] -> [n] in the subset, lexicographically ordered.
  std::vector<MonotoneMap> level(unsigned k) const {
    std::vector<MonotoneMap> out;
    for (const auto& f : enumerate_homs(n_, k))
      if (contains(f.mask())) out.push_back(f);
    return out;
  }

  std::vector<std::size_t> level_sizes() const {
    std::vector<std::size_t> sizes(n_ + 1, 0);
    for (Mask m : members_) ++sizes[popcount(m) - 1];
    return sizes;
  }

  /// Closure under precomposition, checked on every member and every face.
  bool is_closed() const {
    for (Mask m : members_)
      for (Mask sub = (m - 1) & m; sub != 0; sub = (sub - 1) & m)
        if (!contains(sub)) return false;
    return true;
  }

  bool subset_of(const SimplicialSubset& other) const {
    if (n_ != other.n_) return false;
    for (Mask m : members_)
      if (!other.contains(m)) return false;
    return true;
  }

  friend bool operator==(const SimplicialSubset&, const SimplicialSubset&) = default;

 private:
  unsigned n_;
  std::set<Mask> members_;
};

inline SimplicialSubset full_subfunctor(unsigned n) {
  return SimplicialSubset::where(n, [](Mask) { return true; });
}

/// Vertices and the edges {i, i+1}.
inline SimplicialSubset spine_subfunctor(unsigned n) {
  return SimplicialSubset::where(n, [](Mask m) {
    unsigned c = popcount(m);
    return c == 1 || (c == 2 && max_elem(m) == min_elem(m) + 1);
  });
}

/// Everything except the top cell and the face opposite to vertex j.
inline SimplicialSubset horn_subfunctor(unsigned n, unsigned j) {
  if (n < 1) throw std::invalid_argument("horns need n >= 1");
  if (j > n) throw std::out_of_range("horn index out of range");
  Mask top = full_mask(n);
  Mask face = top & ~(Mask{1} << j);
  return SimplicialSubset::where(n, [=](Mask m) { return m != top && m != face; });
}

inline SimplicialSubset boundary_subfunctor(unsigned n) {
  Mask top = full_mask(n);
  return SimplicialSubset::where(n, [=](Mask m) { return m != top; });
}

}  // namespace tltt::simplex
