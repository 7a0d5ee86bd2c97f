#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "tltt/diagram/category.hpp"

namespace tltt::diagram {

/// The non-identity arrows out of `apex`, as a category. An arrow between
/// two of them, f -> f', is an arrow h of the base with h . f = f'.
struct ReducedCoslice {
  std::size_t apex;
  std::shared_ptr<FinCat> cat;
  /// Base arrow behind each coslice object.
  std::vector<std::size_t> object_arrow;
  /// Base arrow behind each coslice arrow (the forgetful functor).
  std::vector<std::size_t> arrow_base;

  /// Coslice object for a base arrow out of the apex, or kNone.
  std::size_t object_of(std::size_t base_arrow) const {
    for (std::size_t i = 0; i < object_arrow.size(); ++i)
      if (object_arrow[i] == base_arrow) return i;
    return kNone;
  }
  std::size_t codomain(const FinCat& base, std::size_t obj) const { return base.arrow(object_arrow[obj]).dst; }
};

inline ReducedCoslice reduced_coslice(const FinCat& c, std::size_t x) {
  ReducedCoslice r{x, std::make_shared<FinCat>(), {}, {}};
  for (std::size_t f : c.arrows_from(x)) {
    if (c.is_identity(f)) continue;
    r.cat->add_object(c.arrow(f).name, c.rank(c.arrow(f).dst));
    r.object_arrow.push_back(f);
  }
  // Identity arrows of the coslice come first, created with the objects.
  r.arrow_base.assign(r.cat->arrow_count(), kNone);
  for (std::size_t o = 0; o < r.object_arrow.size(); ++o)
    r.arrow_base[r.cat->identity(o)] = c.identity(c.arrow(r.object_arrow[o]).dst);

  std::map<std::pair<std::size_t, std::size_t>, std::size_t> by_pair;  // (source obj, base h)
  for (std::size_t o = 0; o < r.object_arrow.size(); ++o) {
    std::size_t f = r.object_arrow[o];
    by_pair[{o, c.identity(c.arrow(f).dst)}] = r.cat->identity(o);
    for (std::size_t h : c.arrows_from(c.arrow(f).dst)) {
      if (c.is_identity(h)) continue;
      std::size_t target = r.object_of(c.compose(h, f));
      if (target == kNone) continue;  // h . f is an identity; impossible in an inverse category
      std::size_t a = r.cat->add_arrow(o, target, c.arrow(h).name + "@" + c.arrow(f).name);
      r.arrow_base.push_back(h);
      by_pair[{o, h}] = a;
    }
  }
  r.cat->fill_identity_composites();
  for (std::size_t g = 0; g < r.cat->arrow_count(); ++g)
    for (std::size_t f = 0; f < r.cat->arrow_count(); ++f) {
      if (r.cat->arrow(f).dst != r.cat->arrow(g).src) continue;
      std::size_t hk = c.compose(r.arrow_base[g], r.arrow_base[f]);
      auto it = by_pair.find({r.cat->arrow(f).src, hk});
      if (it != by_pair.end()) r.cat->set_compose(g, f, it->second);
    }
  return r;
}

/// The forgetful functor to the base respects sources, targets, identities
/// and composition.
inline Validation forgetful_functoriality(const FinCat& c, const ReducedCoslice& r) {
  const FinCat& k = *r.cat;
  for (std::size_t a = 0; a < k.arrow_count(); ++a) {
    std::size_t h = r.arrow_base[a];
    if (c.arrow(h).src != r.codomain(c, k.arrow(a).src) || c.arrow(h).dst != r.codomain(c, k.arrow(a).dst))
      return Validation::failure("endpoints", "coslice arrow " + k.arrow(a).name + " forgets to the wrong endpoints");
    if (c.compose(h, r.object_arrow[k.arrow(a).src]) != r.object_arrow[k.arrow(a).dst])
      return Validation::failure("triangle", "coslice arrow " + k.arrow(a).name + " does not commute");
    if (k.is_identity(a) != c.is_identity(h))
      return Validation::failure("identity", "coslice arrow " + k.arrow(a).name + " changes identity status");
  }
  for (std::size_t g = 0; g < k.arrow_count(); ++g)
    for (std::size_t f = 0; f < k.arrow_count(); ++f) {
      if (k.arrow(f).dst != k.arrow(g).src) continue;
      std::size_t gf = k.compose(g, f);
      if (gf == kNone || r.arrow_base[gf] != c.compose(r.arrow_base[g], r.arrow_base[f]))
        return Validation::failure("composition", "forgetful image of " + k.arrow(g).name + " . " +
                                                      k.arrow(f).name + " is wrong");
    }
  return {};
}

/// For an object p = (i, f) of the reduced coslice under x, the reduced
/// coslice under p is isomorphic to the reduced coslice under i. Checks the
/// comparison functor is bijective on objects and arrows and preserves
/// composition.
inline bool coslice_of_coslice_iso(const FinCat& c, std::size_t x, std::size_t p, std::string* why = nullptr) {
  auto fail = [&](std::string m) {
    if (why) *why = std::move(m);
    return false;
  };
  ReducedCoslice outer = reduced_coslice(c, x);
  if (p >= outer.object_arrow.size()) return fail("no such coslice object");
  ReducedCoslice inner = reduced_coslice(*outer.cat, p);
  std::size_t i = outer.codomain(c, p);
  ReducedCoslice direct = reduced_coslice(c, i);

  // Objects: an inner object is a coslice arrow p -> p', which forgets to h : i -> .
  std::vector<std::size_t> obj_map(inner.object_arrow.size());
  std::vector<bool> hit(direct.object_arrow.size(), false);
  for (std::size_t o = 0; o < inner.object_arrow.size(); ++o) {
    std::size_t h = outer.arrow_base[inner.object_arrow[o]];
    std::size_t t = direct.object_of(h);
    if (t == kNone) return fail("object has no counterpart");
    if (hit[t]) return fail("object map is not injective");
    hit[t] = true;
    obj_map[o] = t;
  }
  if (inner.object_arrow.size() != direct.object_arrow.size()) return fail("object counts differ");

  // Arrows: both sides forget to arrows of the base; match on (source, base arrow).
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> direct_arrows;
  for (std::size_t a = 0; a < direct.cat->arrow_count(); ++a)
    direct_arrows[{direct.cat->arrow(a).src, direct.arrow_base[a]}] = a;
  std::vector<std::size_t> arrow_map(inner.cat->arrow_count());
  std::vector<bool> ahit(direct.cat->arrow_count(), false);
  for (std::size_t a = 0; a < inner.cat->arrow_count(); ++a) {
    std::size_t base = outer.arrow_base[inner.arrow_base[a]];
    auto it = direct_arrows.find({obj_map[inner.cat->arrow(a).src], base});
    if (it == direct_arrows.end()) return fail("arrow has no counterpart");
    if (ahit[it->second]) return fail("arrow map is not injective");
    ahit[it->second] = true;
    arrow_map[a] = it->second;
    if (direct.cat->arrow(it->second).dst != obj_map[inner.cat->arrow(a).dst]) return fail("arrow endpoints differ");
  }
  if (inner.cat->arrow_count() != direct.cat->arrow_count()) return fail("arrow counts differ");
  for (std::size_t g = 0; g < inner.cat->arrow_count(); ++g)
    for (std::size_t f = 0; f < inner.cat->arrow_count(); ++f) {
      if (inner.cat->arrow(f).dst != inner.cat->arrow(g).src) continue;
      if (arrow_map[inner.cat->compose(g, f)] != direct.cat->compose(arrow_map[g], arrow_map[f]))
        return fail("composition is not preserved");
    }
  return true;
}

}  // namespace tltt::diagram
