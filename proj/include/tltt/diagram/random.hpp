#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "tltt/diagram/limits.hpp"
#include "tltt/simplex/mono.hpp"

namespace tltt::diagram {

using Rng = std::mt19937_64;

struct RandomCategoryBounds {
  std::size_t max_objects = 5;
  std::size_t max_hom = 3;
  unsigned max_rank = 3;
  double arrow_density = 0.4;
};

/// A random finite inverse category. Each object gets a carrier [r] with
/// r its rank; arrows x -> y are chosen injections [r_y] -> [r_x], closed under
/// composition. Draws whose closure has a hom-set larger than the bound are
/// discarded and redrawn from the same stream.
inline std::shared_ptr<FinCat> random_inverse_category(Rng& rng, const RandomCategoryBounds& b = {}) {
  using simplex::Mask;
  std::uniform_int_distribution<std::size_t> count(1, b.max_objects);
  std::uniform_int_distribution<unsigned> rank(0, b.max_rank);
  std::bernoulli_distribution pick(b.arrow_density);
  for (;;) {
    std::size_t n = count(rng);
    std::vector<unsigned> ranks(n);
    for (auto& r : ranks) r = rank(rng);

    // Arrow (x, y, image of the injection) with the composite of g after f
    // having image f.image restricted along g.
    std::set<std::tuple<std::size_t, std::size_t, Mask>> arrows;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (ranks[y] >= ranks[x]) continue;
        for (const auto& m : simplex::enumerate_homs(ranks[x], ranks[y]))
          if (pick(rng)) arrows.insert({x, y, m.mask()});
      }
    auto compose_masks = [](Mask f_image, Mask g_image) {
      // The injection of g picks positions of f's image.
      auto fe = simplex::elements(f_image);
      std::vector<unsigned> picked;
      for (unsigned p : simplex::elements(g_image)) picked.push_back(fe[p]);
      return simplex::mask_of(picked);
    };
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<std::tuple<std::size_t, std::size_t, Mask>> fresh;
      for (const auto& [x, y, fm] : arrows)
        for (const auto& [y2, z, gm] : arrows)
          if (y2 == y) {
            std::tuple<std::size_t, std::size_t, Mask> t{x, z, compose_masks(fm, gm)};
            if (!arrows.count(t)) fresh.push_back(t);
          }
      for (auto& t : fresh) grew |= arrows.insert(t).second;
    }
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> hom_sizes;
    bool too_big = false;
    for (const auto& [x, y, m] : arrows)
      if (++hom_sizes[{x, y}] > b.max_hom) too_big = true;
    if (too_big) continue;

    auto c = std::make_shared<FinCat>();
    for (std::size_t x = 0; x < n; ++x) c->add_object("o" + std::to_string(x), static_cast<int>(ranks[x]));
    std::map<std::tuple<std::size_t, std::size_t, Mask>, std::size_t> id_of;
    for (std::size_t x = 0; x < n; ++x) id_of[{x, x, simplex::full_mask(ranks[x])}] = c->identity(x);
    for (const auto& t : arrows) {
      const auto& [x, y, m] = t;
      id_of[t] = c->add_arrow(x, y, "o" + std::to_string(x) + "o" + std::to_string(y) + simplex::to_string_mask(m));
    }
    std::vector<std::tuple<std::size_t, std::size_t, Mask>> key(c->arrow_count());
    for (const auto& [t, id] : id_of) key[id] = t;
    for (std::size_t g = 0; g < c->arrow_count(); ++g)
      for (std::size_t f = 0; f < c->arrow_count(); ++f) {
        const auto& [fx, fy, fm] = key[f];
        const auto& [gy, gz, gm] = key[g];
        if (fy != gy) continue;
        c->set_compose(g, f, id_of.at({fx, gz, compose_masks(fm, gm)}));
      }
    return c;
  }
}

/// A random diagram built in rank order: each new element at x picks a point
/// of the matching object at x, which fixes its images under every arrow.
inline SetDiagram random_diagram(CatPtr base, Rng& rng, std::size_t max_value = 4) {
  const FinCat& c = *base;
  SetDiagram d(base);
  std::uniform_int_distribution<std::size_t> size(0, max_value);
  for (std::size_t x : rank_order(c)) {
    MatchingObject m = matching_object(d, x);
    std::size_t n = m.size() == 0 ? 0 : size(rng);
    std::vector<Family> chosen;
    if (m.size() > 0) {
      std::uniform_int_distribution<std::size_t> which(0, m.size() - 1);
      for (std::size_t i = 0; i < n; ++i) chosen.push_back(m.elements[which(rng)]);
    }
    d.set_size(x, n);
    d.fill_identities();
    for (std::size_t k = 0; k < m.arrows.size(); ++k) {
      std::vector<std::size_t> fn;
      for (const auto& fam : chosen) fn.push_back(fam[k]);
      d.set_function(m.arrows[k], std::move(fn));
    }
  }
  return d;
}

/// Bounds for the random instances of the limit comparison.
inline RandomCategoryBounds limit_bounds() { return {5, 3, 3, 0.4}; }

/// Bounds for random exponential pairs. The exponential at d ranges over
/// families indexed by (c, element of F, arrow d -> c), so value sets stay
/// one smaller than for limits.
inline RandomCategoryBounds exponential_bounds() { return {5, 3, 3, 0.4}; }
inline constexpr std::size_t kExponentialMaxValue = 3;

struct RandomPair {
  CatPtr base;
  SetDiagram f;
  SetDiagram g;
};

inline RandomPair random_pair(Rng& rng) {
  CatPtr base = random_inverse_category(rng, exponential_bounds());
  SetDiagram f = random_diagram(base, rng, kExponentialMaxValue);
  SetDiagram g = random_diagram(base, rng, kExponentialMaxValue);
  return {base, std::move(f), std::move(g)};
}

/// A random diagram X with a map to `below`, built the same way: an element
/// of X at x is a pair of a matching point of X and an element of `below`
/// whose boundary matches its image.
inline std::pair<SetDiagram, DiagramMap> random_diagram_over(const SetDiagram& below, Rng& rng,
                                                             std::size_t max_fiber = 2) {
  const FinCat& c = below.base();
  SetDiagram d(below.base_ptr());
  DiagramMap p{std::vector<std::vector<std::size_t>>(c.object_count())};
  std::uniform_int_distribution<std::size_t> fiber(0, max_fiber);
  for (std::size_t x : rank_order(c)) {
    MatchingObject m = matching_object(d, x);
    MatchingObject mb = matching_object(below, x);
    std::vector<std::pair<std::size_t, std::size_t>> chosen;  // (matching index, element below)
    for (std::size_t mi = 0; mi < m.size(); ++mi) {
      Family image;
      for (std::size_t k = 0; k < m.arrows.size(); ++k)
        image.push_back(p.apply(c.arrow(m.arrows[k]).dst, m.elements[mi][k]));
      std::size_t target = mb.index_of(image);
      for (std::size_t b = 0; b < below.size(x); ++b) {
        if (mb.projection[b] != target) continue;
        std::size_t copies = fiber(rng);
        for (std::size_t i = 0; i < copies; ++i) chosen.push_back({mi, b});
      }
    }
    d.set_size(x, chosen.size());
    d.fill_identities();
    for (std::size_t k = 0; k < m.arrows.size(); ++k) {
      std::vector<std::size_t> fn;
      for (const auto& [mi, b] : chosen) fn.push_back(m.elements[mi][k]);
      d.set_function(m.arrows[k], std::move(fn));
    }
    for (const auto& [mi, b] : chosen) p.components[x].push_back(b);
  }
  return {std::move(d), std::move(p)};
}

/// The levelwise pullback of X -> Z <- Y, with its two projections.
struct DiagramPullback {
  SetDiagram diagram;
  DiagramMap to_left;
  DiagramMap to_right;
};

inline DiagramPullback pullback(const SetDiagram& x, const DiagramMap& f, const SetDiagram& y, const DiagramMap& g) {
  const FinCat& c = x.base();
  SetDiagram p(x.base_ptr());
  DiagramMap l{std::vector<std::vector<std::size_t>>(c.object_count())};
  DiagramMap r{std::vector<std::vector<std::size_t>>(c.object_count())};
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> index(c.object_count());
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    for (std::size_t a = 0; a < x.size(o); ++a)
      for (std::size_t b = 0; b < y.size(o); ++b)
        if (f.apply(o, a) == g.apply(o, b)) {
          index[o][{a, b}] = l.components[o].size();
          l.components[o].push_back(a);
          r.components[o].push_back(b);
        }
    p.set_size(o, l.components[o].size());
  }
  for (std::size_t h = 0; h < c.arrow_count(); ++h) {
    const auto& a = c.arrow(h);
    std::vector<std::size_t> fn;
    for (std::size_t e = 0; e < p.size(a.src); ++e)
      fn.push_back(index[a.dst].at({x.apply(h, l.components[a.src][e]), y.apply(h, r.components[a.src][e])}));
    p.set_function(h, std::move(fn));
  }
  return {std::move(p), std::move(l), std::move(r)};
}

}  // namespace tltt::diagram
