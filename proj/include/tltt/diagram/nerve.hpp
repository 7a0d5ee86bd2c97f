#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/diagram/category.hpp"
#include "tltt/simplex/semi_simplicial.hpp"

namespace tltt::diagram {

/// The nerve truncated at `top`, with the chain behind every cell. Level 0
/// cells are objects; a level-k cell is a composable chain of k arrows,
/// identities allowed, listed lexicographically by arrow identifiers.
struct Nerve {
  std::vector<std::vector<std::vector<std::size_t>>> chains;  // chains[k][cell]
  simplex::FiniteSemiSimplicialSet set;
};

inline Nerve nerve(const FinCat& c, unsigned top) {
  if (top > 6) throw std::invalid_argument("nerve truncation is limited to 6");
  Validation v = validate_category(c);
  if (!v.ok) throw std::invalid_argument("invalid category: " + v.law + ": " + v.witness);

  std::vector<std::vector<std::vector<std::size_t>>> chains(top + 1);
  for (std::size_t x = 0; x < c.object_count(); ++x) chains[0].push_back({x});
  if (top >= 1)
    for (std::size_t f = 0; f < c.arrow_count(); ++f) chains[1].push_back({f});
  for (unsigned k = 2; k <= top; ++k)
    for (const auto& ch : chains[k - 1])
      for (std::size_t f : c.arrows_from(c.arrow(ch.back()).dst)) {
        auto next = ch;
        next.push_back(f);
        chains[k].push_back(std::move(next));
      }
  for (unsigned k = 2; k <= top; ++k) std::sort(chains[k].begin(), chains[k].end());

  std::vector<std::map<std::vector<std::size_t>, std::size_t>> index(top + 1);
  for (unsigned k = 0; k <= top; ++k)
    for (std::size_t i = 0; i < chains[k].size(); ++i) index[k][chains[k][i]] = i;

  auto face = [&](unsigned k, unsigned i, const std::vector<std::size_t>& ch) -> std::vector<std::size_t> {
    if (k == 1) return {i == 0 ? c.arrow(ch[0]).dst : c.arrow(ch[0]).src};
    std::vector<std::size_t> out;
    if (i == 0) {
      out.assign(ch.begin() + 1, ch.end());
    } else if (i == k) {
      out.assign(ch.begin(), ch.end() - 1);
    } else {
      out.assign(ch.begin(), ch.begin() + (i - 1));
      out.push_back(c.compose(ch[i], ch[i - 1]));
      out.insert(out.end(), ch.begin() + (i + 1), ch.end());
    }
    return out;
  };

  std::vector<std::size_t> sizes;
  std::vector<std::vector<simplex::FiniteSemiSimplicialSet::FaceMap>> faces(top + 1);
  for (unsigned k = 0; k <= top; ++k) {
    sizes.push_back(chains[k].size());
    if (k == 0) continue;
    for (unsigned i = 0; i <= k; ++i) {
      simplex::FiniteSemiSimplicialSet::FaceMap fm;
      for (const auto& ch : chains[k]) fm.push_back(index[k - 1].at(face(k, i, ch)));
      faces[k].push_back(std::move(fm));
    }
  }
  return {std::move(chains), simplex::FiniteSemiSimplicialSet(std::move(sizes), std::move(faces))};
}

/// Source and target of an edge: the vertices 0 and 1.
inline std::size_t edge_source(const simplex::FiniteSemiSimplicialSet& x, std::size_t e) { return x.face(1, 1, e); }
inline std::size_t edge_target(const simplex::FiniteSemiSimplicialSet& x, std::size_t e) { return x.face(1, 0, e); }

/// Chains of n edges whose consecutive endpoints agree, lexicographically.
inline std::vector<std::vector<std::size_t>> weak_spines(const simplex::FiniteSemiSimplicialSet& x, unsigned n) {
  if (x.truncation() < n) throw std::invalid_argument("truncation is below the requested level");
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) {
    for (std::size_t v = 0; v < x.size(0); ++v) out.push_back({v});
    return out;
  }
  std::vector<std::size_t> cur;
  auto rec = [&](auto& self) -> void {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e < x.size(1); ++e) {
      if (!cur.empty() && edge_target(x, cur.back()) != edge_source(x, e)) continue;
      cur.push_back(e);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

/// The spine of an n-cell: its restrictions to the edges {i, i+1}.
inline std::vector<std::size_t> spine_of(const simplex::FiniteSemiSimplicialSet& x, unsigned n, std::size_t cell) {
  if (n == 0) return {cell};
  std::vector<std::size_t> out;
  for (unsigned i = 0; i < n; ++i) out.push_back(x.restrict(n, cell, simplex::mask_of({i, i + 1})));
  return out;
}

struct SegalVerdict {
  unsigned level;
  std::size_t cells;
  std::size_t spines;
  bool injective;
  bool surjective;
  std::string witness;

  bool ok() const { return injective && surjective; }
};

inline SegalVerdict segal_check(const simplex::FiniteSemiSimplicialSet& x, unsigned n) {
  auto spines = weak_spines(x, n);
  SegalVerdict v{n, x.size(n), spines.size(), true, true, ""};
  std::map<std::vector<std::size_t>, std::size_t> seen;
  for (std::size_t cell = 0; cell < x.size(n); ++cell) {
    auto sp = spine_of(x, n, cell);
    auto [it, fresh] = seen.emplace(sp, cell);
    if (!fresh && v.injective) {
      v.injective = false;
      v.witness = "cells " + std::to_string(it->second) + " and " + std::to_string(cell) + " share a spine";
    }
  }
  for (const auto& sp : spines)
    if (!seen.count(sp)) {
      v.surjective = false;
      if (v.witness.empty()) v.witness = "a spine has no filler";
      break;
    }
  return v;
}

}  // namespace tltt::diagram
