#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "tltt/diagram/coslice.hpp"
#include "tltt/diagram/diagram.hpp"
#include "tltt/diagram/families.hpp"

namespace tltt::diagram {

/// Objects ordered by rank, lowest first, ties by identifier.
inline std::vector<std::size_t> rank_order(const FinCat& c) {
  std::vector<std::size_t> order(c.object_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return c.rank(a) < c.rank(b); });
  return order;
}

/// The matching object at z: compatible families indexed by the non-identity
/// arrows out of z, with the canonical projection from the value at z.
struct MatchingObject {
  std::size_t z;
  /// Base arrows indexing each family entry.
  std::vector<std::size_t> arrows;
  std::vector<Family> elements;
  /// For each element of the value at z, the index of its image.
  std::vector<std::size_t> projection;

  std::size_t size() const { return elements.size(); }
  std::size_t index_of(const Family& m) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), m);
    if (it == elements.end() || *it != m) return kNone;
    return static_cast<std::size_t>(it - elements.begin());
  }
};

/// The boundary family of v: its image under every non-identity arrow out of z.
inline Family boundary_of(const SetDiagram& x, const std::vector<std::size_t>& arrows, std::size_t v) {
  Family m;
  m.reserve(arrows.size());
  for (std::size_t f : arrows) m.push_back(x.apply(f, v));
  return m;
}

inline MatchingObject matching_object(const SetDiagram& x, std::size_t z, std::size_t cap = 2'000'000) {
  const FinCat& c = x.base();
  ReducedCoslice r = reduced_coslice(c, z);
  FamilyProblem p;
  for (std::size_t o = 0; o < r.object_arrow.size(); ++o) p.add_cell(x.size(r.codomain(c, o)));
  for (std::size_t a = 0; a < r.cat->arrow_count(); ++a) {
    if (r.cat->is_identity(a)) continue;
    p.link(r.cat->arrow(a).src, r.cat->arrow(a).dst, x.function(r.arrow_base[a]));
  }
  // Lower codomains first so the links prune as early as possible.
  std::vector<std::size_t> order = rank_order(*r.cat);
  MatchingObject m{z, r.object_arrow, solve(p, order, cap), {}};
  std::sort(m.elements.begin(), m.elements.end());
  for (std::size_t v = 0; v < x.size(z); ++v) {
    std::size_t i = m.index_of(boundary_of(x, m.arrows, v));
    if (i == kNone) throw std::logic_error("boundary family is not compatible; diagram is not functorial");
    m.projection.push_back(i);
  }
  return m;
}

/// Compatible families over every object, identity arrows included.
inline std::vector<Family> limit_direct(const SetDiagram& x, std::size_t cap = 2'000'000) {
  const FinCat& c = x.base();
  FamilyProblem p;
  for (std::size_t o = 0; o < c.object_count(); ++o) p.add_cell(x.size(o));
  for (std::size_t f = 0; f < c.arrow_count(); ++f) p.link(c.arrow(f).src, c.arrow(f).dst, x.function(f));
  auto out = solve(p, rank_order(c), cap);
  std::sort(out.begin(), out.end());
  return out;
}

/// One peeling step of the recursive construction.
struct LimitStep {
  std::size_t object;          // the maximal-rank object removed
  std::size_t rest_size;       // size of the limit without it
  std::size_t matching_size;   // size of its matching object
  std::size_t value_size;      // size of its value
  std::size_t pullback_size;   // size of the resulting pullback
};

/// The limit obtained by removing a maximal-rank object z, taking the limit
/// L over the rest, and forming the pullback of L -> M_z <- X_z. Each element
/// is recorded with the family it corresponds to, so the result carries the
/// comparison map to the direct formula.
struct RecursiveLimit {
  /// Pullback elements as (element of the smaller limit, element of X_z)
  /// pairs, flattened: `pairs[k]` is the k-th element at the top level.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  /// Comparison map: the family over all objects for each element.
  std::vector<Family> families;
  std::vector<LimitStep> steps;  // innermost first

  std::size_t size() const { return families.size(); }
};

namespace detail {

inline std::shared_ptr<FinCat> without_object(const FinCat& c, std::size_t z, std::vector<std::size_t>& objs,
                                              std::vector<std::size_t>& arrows) {
  auto sub = std::make_shared<FinCat>();
  std::vector<std::size_t> new_obj(c.object_count(), kNone);
  objs.clear();
  arrows.clear();
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    if (o == z) continue;
    new_obj[o] = sub->add_object(c.object_name(o), c.rank(o));
    objs.push_back(o);
  }
  arrows.assign(sub->arrow_count(), kNone);
  std::vector<std::size_t> new_arrow(c.arrow_count(), kNone);
  for (std::size_t o : objs) {
    arrows[sub->identity(new_obj[o])] = c.identity(o);
    new_arrow[c.identity(o)] = sub->identity(new_obj[o]);
  }
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    const auto& a = c.arrow(f);
    if (c.is_identity(f) || a.src == z || a.dst == z) continue;
    new_arrow[f] = sub->add_arrow(new_obj[a.src], new_obj[a.dst], a.name);
    arrows.push_back(f);
  }
  for (std::size_t g = 0; g < sub->arrow_count(); ++g)
    for (std::size_t f = 0; f < sub->arrow_count(); ++f)
      if (sub->arrow(f).dst == sub->arrow(g).src)
        sub->set_compose(g, f, new_arrow[c.compose(arrows[g], arrows[f])]);
  return sub;
}

}  // namespace detail

/// Restriction of a diagram to the full subcategory without z.
inline SetDiagram restrict_without(const SetDiagram& x, std::size_t z, std::vector<std::size_t>& objs) {
  std::vector<std::size_t> arrows;
  CatPtr sub = detail::without_object(x.base(), z, objs, arrows);
  std::vector<std::size_t> sizes;
  for (std::size_t o : objs) sizes.push_back(x.size(o));
  std::vector<std::vector<std::size_t>> fns;
  for (std::size_t f : arrows) fns.push_back(x.function(f));
  return SetDiagram(sub, std::move(sizes), std::move(fns));
}

/// The maximal-rank object, ties broken by the lowest identifier.
inline std::size_t top_object(const FinCat& c) {
  std::size_t best = 0;
  for (std::size_t o = 1; o < c.object_count(); ++o)
    if (c.rank(o) > c.rank(best)) best = o;
  return best;
}

inline RecursiveLimit limit_recursive(const SetDiagram& x) {
  const FinCat& c = x.base();
  RecursiveLimit out;
  if (c.object_count() == 0) {
    out.pairs.push_back({0, 0});
    out.families.push_back({});
    return out;
  }
  std::size_t z = top_object(c);
  std::vector<std::size_t> objs;
  SetDiagram rest = restrict_without(x, z, objs);
  RecursiveLimit smaller = limit_recursive(rest);

  // The map L -> M_z reads each arrow's codomain off the smaller family.
  MatchingObject m = matching_object(x, z);
  std::vector<std::size_t> position(c.object_count(), kNone);
  for (std::size_t i = 0; i < objs.size(); ++i) position[objs[i]] = i;

  std::map<std::size_t, std::vector<std::size_t>> by_boundary;  // matching index -> values at z
  for (std::size_t v = 0; v < x.size(z); ++v) by_boundary[m.projection[v]].push_back(v);

  for (std::size_t l = 0; l < smaller.size(); ++l) {
    const Family& fam = smaller.families[l];
    Family image;
    for (std::size_t f : m.arrows) image.push_back(fam[position[c.arrow(f).dst]]);
    std::size_t mi = m.index_of(image);
    if (mi == kNone) throw std::logic_error("restricted family does not land in the matching object");
    auto it = by_boundary.find(mi);
    if (it == by_boundary.end()) continue;
    for (std::size_t v : it->second) {
      out.pairs.push_back({l, v});
      Family full(c.object_count());
      for (std::size_t i = 0; i < objs.size(); ++i) full[objs[i]] = fam[i];
      full[z] = v;
      out.families.push_back(std::move(full));
    }
  }
  out.steps = std::move(smaller.steps);
  out.steps.push_back({z, smaller.size(), m.size(), x.size(z), out.size()});
  return out;
}

/// Checks that the comparison map of the recursive limit is a bijection onto
/// the direct limit. Returns an empty string on success.
inline std::string compare_limits(const RecursiveLimit& rec, const std::vector<Family>& direct) {
  std::vector<bool> hit(direct.size(), false);
  for (const Family& f : rec.families) {
    auto it = std::lower_bound(direct.begin(), direct.end(), f);
    if (it == direct.end() || *it != f) return "a recursive element maps outside the direct limit";
    std::size_t i = static_cast<std::size_t>(it - direct.begin());
    if (hit[i]) return "two recursive elements map to the same family";
    hit[i] = true;
  }
  if (rec.size() != direct.size())
    return "sizes differ: " + std::to_string(rec.size()) + " vs " + std::to_string(direct.size());
  return "";
}

}  // namespace tltt::diagram
