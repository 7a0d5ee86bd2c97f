#pragma once

#include <string>
#include <vector>

#include "tltt/diagram/limits.hpp"
#include "tltt/simplex/nat_trans.hpp"

namespace tltt::diagram {

/// Sizes on both sides of the two Yoneda-type comparisons at level n.
struct YonedaLevel {
  unsigned n;
  std::size_t cells;          // X_n
  std::size_t nat_simplex;    // Nat(full simplex, X)
  std::size_t matching;       // matching object at [n]
  std::size_t nat_boundary;   // Nat(boundary, X)
  bool simplex_bijective;
  bool boundary_bijective;
  std::string witness;

  bool ok() const { return simplex_bijective && boundary_bijective; }
};

/// A boundary family assigns a cell to every proper face S of [n]; a matching
/// point assigns one to every non-identity arrow out of [n]. Faces and arrows
/// correspond through their image masks, and the map checked here is that
/// relabelling.
inline YonedaLevel yoneda_level(const simplex::FiniteSemiSimplicialSet& x, unsigned n) {
  YonedaLevel r{n, x.size(n), 0, 0, 0, false, false, ""};
  auto full = simplex::nat_transforms(simplex::full_subfunctor(n), x);
  r.nat_simplex = full.families.size();
  std::string why;
  r.simplex_bijective = simplex::yoneda_bijection_holds(n, x, full, &why);
  if (!r.simplex_bijective) r.witness = "simplex: " + why;

  auto boundary = simplex::nat_transforms(simplex::boundary_subfunctor(n), x);
  r.nat_boundary = boundary.families.size();
  SimplexBase base(n);
  SetDiagram d = from_semi_simplicial(base, x);
  MatchingObject m = matching_object(d, n);
  r.matching = m.size();

  std::vector<std::size_t> slot;  // family position for each matching arrow
  for (std::size_t f : m.arrows) slot.push_back(boundary.index_of(base.shape->maps[f].mask()));
  std::vector<bool> hit(m.size(), false);
  bool ok = boundary.families.size() == m.size();
  for (const auto& fam : boundary.families) {
    Family image;
    for (std::size_t s : slot) image.push_back(fam[s]);
    std::size_t i = m.index_of(image);
    if (i == kNone || hit[i]) {
      ok = false;
      if (r.witness.empty()) r.witness = i == kNone ? "boundary family is not a matching point" : "relabelling is not injective";
      break;
    }
    hit[i] = true;
  }
  if (ok)
    for (std::size_t v = 0; v < x.size(n); ++v) {
      // The projection X_n -> M_n agrees with restricting each cell to its faces.
      Family expected;
      for (std::size_t f : m.arrows) expected.push_back(x.restrict(n, v, base.shape->maps[f].mask()));
      if (m.elements[m.projection[v]] != expected) {
        ok = false;
        if (r.witness.empty()) r.witness = "projection disagrees with restriction";
        break;
      }
    }
  if (!ok && r.witness.empty()) r.witness = "counts differ";
  r.boundary_bijective = ok;
  return r;
}

}  // namespace tltt::diagram
