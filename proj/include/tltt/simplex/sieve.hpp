#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/simplex/mono.hpp"
#include "tltt/simplex/simplicial_subset.hpp"

namespace tltt::simplex {

/// A downward-closed family of subsets of {0..n}. The empty set is a member
/// of every non-empty sieve.
class Sieve {
 public:
  Sieve(unsigned n, std::set<Mask> members) : n_(n), members_(std::move(members)) {
    if (n_ > kMaxDim) throw std::invalid_argument("dimension exceeds the guard");
    for (Mask m : members_)
      if ((m & ~full_mask(n_)) != 0) throw std::invalid_argument("member outside [0,n]");
    if (!is_downward_closed()) throw std::invalid_argument("family is not downward closed");
  }

  /// Downward closure of the generators.
  static Sieve generated(unsigned n, const std::vector<Mask>& generators) {
    std::set<Mask> ms;
    for (Mask g : generators) {
      for (Mask sub = g;; sub = (sub - 1) & g) {
        ms.insert(sub);
        if (sub == 0) break;
      }
    }
    return {n, std::move(ms)};
  }

  static Sieve powerset(unsigned n) { return generated(n, {full_mask(n)}); }
  static Sieve principal(unsigned n, Mask s) { return generated(n, {s}); }

  /// The sieve generated by the edges {i, i+1}.
  static Sieve spine(unsigned n) {
    std::vector<Mask> gens;
    for (unsigned i = 0; i < n; ++i) gens.push_back(mask_of({i, i + 1}));
    if (n == 0) gens.push_back(1);
    return generated(n, gens);
  }

  unsigned dim() const { return n_; }
  const std::set<Mask>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(Mask m) const { return members_.count(m) != 0; }

  bool is_downward_closed() const {
    for (Mask m : members_)
      for (unsigned i : elements(m))
        if (!contains(m & ~(Mask{1} << i))) return false;
    return true;
  }

  bool is_maximal(Mask s) const {
    if (!contains(s)) return false;
    for (unsigned i = 0; i <= n_; ++i)
      if (!simplex::contains(s, i) && contains(s | (Mask{1} << i))) return false;
    return true;
  }

  friend bool operator==(const Sieve&, const Sieve&) = default;

 private:
  unsigned n_;
  std::set<Mask> members_;
};

/// Maps into [n] whose image lies in some member of the sieve.
inline SimplicialSubset realize(const Sieve& x) {
  std::set<Mask> ms;
  for (Mask m : x.members())
    if (m != 0) ms.insert(m);
  return {x.dim(), std::move(ms)};
}

/// Removes a maximal member `s` together with its face `s \ {k}`.
inline Sieve horn_remove(const Sieve& x, Mask s, unsigned k) {
  if (!x.contains(s)) throw std::invalid_argument(to_string_mask(s) + " is not in the sieve");
  if (!x.is_maximal(s)) throw std::invalid_argument(to_string_mask(s) + " is not maximal");
  if (!contains(s, k))
    throw std::invalid_argument(std::to_string(k) + " is not an element of " + to_string_mask(s));
  std::set<Mask> ms = x.members();
  ms.erase(s);
  ms.erase(s & ~(Mask{1} << k));
  try {
    return Sieve(x.dim(), std::move(ms));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("removing " + to_string_mask(s) + " at " + std::to_string(k) +
                                " does not leave a sieve");
  }
}

}  // namespace tltt::simplex
