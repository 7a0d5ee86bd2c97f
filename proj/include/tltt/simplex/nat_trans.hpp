#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/simplex/semi_simplicial.hpp"
#include "tltt/simplex/simplicial_subset.hpp"

namespace tltt::simplex {

/// All natural transformations from a simplicial subset into X. Each family
/// assigns an element of X_{|S|-1} to every member S, listed in `members`
/// order (by dimension, then lexicographically).
struct NatTransforms {
  std::vector<Mask> members;
  std::vector<std::vector<std::size_t>> families;

  std::size_t index_of(Mask s) const {
    auto it = std::find(members.begin(), members.end(), s);
    if (it == members.end()) throw std::out_of_range("not a member: " + to_string_mask(s));
    return static_cast<std::size_t>(it - members.begin());
  }
};

inline std::vector<Mask> ordered_members(const SimplicialSubset& f) {
  std::vector<Mask> ms(f.members().begin(), f.members().end());
  std::sort(ms.begin(), ms.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return lex_less(a, b);
  });
  return ms;
}

inline NatTransforms nat_transforms(const SimplicialSubset& f, const FiniteSemiSimplicialSet& x,
                                    std::size_t cap = 5'000'000) {
  if (x.truncation() < f.dim())
    throw std::invalid_argument("truncation " + std::to_string(x.truncation()) +
                                " is below the ambient dimension " + std::to_string(f.dim()));
  NatTransforms out;
  out.members = ordered_members(f);
  std::map<Mask, std::size_t> pos;
  for (std::size_t i = 0; i < out.members.size(); ++i) pos[out.members[i]] = i;

  // faces_of[m][i]: position of the member obtained by dropping the i-th vertex.
  std::vector<std::vector<std::size_t>> faces_of(out.members.size());
  for (std::size_t m = 0; m < out.members.size(); ++m) {
    auto elems = elements(out.members[m]);
    if (elems.size() < 2) continue;
    for (unsigned v : elems) faces_of[m].push_back(pos.at(out.members[m] & ~(Mask{1} << v)));
  }

  std::vector<std::size_t> current(out.members.size());
  auto rec = [&](auto& self, std::size_t m) -> void {
    if (m == out.members.size()) {
      if (out.families.size() >= cap) throw std::length_error("natural transformation count exceeds cap");
      out.families.push_back(current);
      return;
    }
    std::size_t k = popcount(out.members[m]) - 1;
    for (std::size_t v = 0; v < x.size(k); ++v) {
      bool ok = true;
      for (std::size_t i = 0; ok && i < faces_of[m].size(); ++i)
        ok = x.face(k, i, v) == current[faces_of[m][i]];
      if (!ok) continue;
      current[m] = v;
      self(self, m + 1);
    }
  };
  rec(rec, 0);
  return out;
}

/// Checks the Yoneda correspondence Nat(full simplex, X) = X_n in both directions.
inline bool yoneda_bijection_holds(unsigned n, const FiniteSemiSimplicialSet& x,
                                   const NatTransforms& nat, std::string* why = nullptr) {
  auto fail = [&](std::string msg) {
    if (why) *why = std::move(msg);
    return false;
  };
  Mask top = full_mask(n);
  std::size_t top_pos = nat.index_of(top);
  if (nat.families.size() != x.size(n))
    return fail("count mismatch: " + std::to_string(nat.families.size()) + " vs " +
                std::to_string(x.size(n)));
  std::vector<bool> hit(x.size(n), false);
  for (const auto& fam : nat.families) {
    std::size_t t = fam[top_pos];
    if (hit[t]) return fail("two transformations share a top element");
    hit[t] = true;
    for (std::size_t i = 0; i < nat.members.size(); ++i)
      if (x.restrict(n, t, nat.members[i]) != fam[i])
        return fail("transformation is not the restriction of its top element");
  }
  return true;
}

}  // namespace tltt::simplex
