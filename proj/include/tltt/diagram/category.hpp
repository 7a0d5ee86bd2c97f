#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/simplex/mono.hpp"

namespace tltt::diagram {

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// A finite strict category given by explicit tables. Objects and arrows are
/// indices; every object has a designated identity arrow.
class FinCat {
 public:
  struct Arrow {
    std::size_t src;
    std::size_t dst;
    std::string name;
  };

  std::size_t add_object(std::string name, int rank = 0) {
    std::size_t id = names_.size();
    names_.push_back(std::move(name));
    ranks_.push_back(rank);
    identity_.push_back(kNone);
    identity_[id] = add_arrow_raw(id, id, "id:" + names_.back());
    return id;
  }

  std::size_t add_arrow(std::size_t src, std::size_t dst, std::string name) {
    if (src >= object_count() || dst >= object_count())
      throw std::out_of_range("arrow endpoint out of range");
    return add_arrow_raw(src, dst, std::move(name));
  }

  /// Records g after f.
  void set_compose(std::size_t g, std::size_t f, std::size_t gf) { table_[{g, f}] = gf; }

  /// Fills every composite that involves an identity.
  void fill_identity_composites() {
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      set_compose(identity_[arrows_[f].dst], f, f);
      set_compose(f, identity_[arrows_[f].src], f);
    }
  }

  std::size_t object_count() const { return names_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }
  const std::string& object_name(std::size_t x) const { return names_.at(x); }
  int rank(std::size_t x) const { return ranks_.at(x); }
  const Arrow& arrow(std::size_t f) const { return arrows_.at(f); }
  std::size_t identity(std::size_t x) const { return identity_.at(x); }
  bool is_identity(std::size_t f) const { return identity_.at(arrows_.at(f).src) == f; }

  std::optional<std::size_t> object_by_name(const std::string& n) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == n) return i;
    return std::nullopt;
  }
  std::optional<std::size_t> arrow_by_name(const std::string& n) const {
    for (std::size_t i = 0; i < arrows_.size(); ++i)
      if (arrows_[i].name == n) return i;
    return std::nullopt;
  }

  /// g after f, or kNone when the table has no entry.
  std::size_t compose(std::size_t g, std::size_t f) const {
    auto it = table_.find({g, f});
    return it == table_.end() ? kNone : it->second;
  }

  std::vector<std::size_t> hom(std::size_t x, std::size_t y) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < arrows_.size(); ++f)
      if (arrows_[f].src == x && arrows_[f].dst == y) out.push_back(f);
    return out;
  }

  std::vector<std::size_t> arrows_from(std::size_t x) const {
    std::vector<std::size_t> out;
    for (std::size_t f = 0; f < arrows_.size(); ++f)
      if (arrows_[f].src == x) out.push_back(f);
    return out;
  }

 private:
  std::size_t add_arrow_raw(std::size_t src, std::size_t dst, std::string name) {
    arrows_.push_back({src, dst, std::move(name)});
    return arrows_.size() - 1;
  }


  std::vector<std::string> names_;
  std::vector<int> ranks_;
  std::vector<std::size_t> identity_;
  std::vector<Arrow> arrows_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> table_;
};

/// Outcome of a law check: `ok` or the first violated law with its witness.
struct Validation {
  bool ok = true;
  std::string law;
  std::string witness;

  static Validation failure(std::string law, std::string witness) {
    return {false, std::move(law), std::move(witness)};
  }
};

/// Category laws over the full tables.
inline Validation validate_category(const FinCat& c) {
  const std::size_t n = c.arrow_count();
  auto name = [&](std::size_t f) { return c.arrow(f).name; };
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    std::size_t id = c.identity(x);
    if (c.arrow(id).src != x || c.arrow(id).dst != x)
      return Validation::failure("identity", "identity of " + c.object_name(x) + " is not an endomorphism");
  }
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t f = 0; f < n; ++f) {
      if (c.arrow(f).dst != c.arrow(g).src) continue;
      std::size_t gf = c.compose(g, f);
      if (gf == kNone)
        return Validation::failure("composition", "missing composite " + name(g) + " . " + name(f));
      if (c.arrow(gf).src != c.arrow(f).src || c.arrow(gf).dst != c.arrow(g).dst)
        return Validation::failure("composition", name(g) + " . " + name(f) + " has wrong endpoints");
    }
  for (std::size_t f = 0; f < n; ++f) {
    if (c.compose(c.identity(c.arrow(f).dst), f) != f)
      return Validation::failure("left unit", "id . " + name(f) + " != " + name(f));
    if (c.compose(f, c.identity(c.arrow(f).src)) != f)
      return Validation::failure("right unit", name(f) + " . id != " + name(f));
  }
  for (std::size_t h = 0; h < n; ++h)
    for (std::size_t g = 0; g < n; ++g) {
      if (c.arrow(g).dst != c.arrow(h).src) continue;
      std::size_t hg = c.compose(h, g);
      for (std::size_t f = 0; f < n; ++f) {
        if (c.arrow(f).dst != c.arrow(g).src) continue;
        if (c.compose(hg, f) != c.compose(h, c.compose(g, f)))
          return Validation::failure("associativity", "(" + name(h) + " . " + name(g) + ") . " +
                                                          name(f) + " differs from the other bracketing");
      }
    }
  return {};
}

/// Category laws plus: every non-identity arrow strictly lowers the rank.
inline Validation validate_inverse(const FinCat& c) {
  Validation v = validate_category(c);
  if (!v.ok) return v;
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (c.rank(x) < 0) return Validation::failure("rank", c.object_name(x) + " has negative rank");
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    if (c.is_identity(f)) continue;
    const auto& a = c.arrow(f);
    if (c.rank(a.dst) >= c.rank(a.src))
      return Validation::failure("rank decreases",
                                 "arrow " + a.name + " : " + c.object_name(a.src) + " -> " +
                                     c.object_name(a.dst) + " does not lower the rank");
  }
  return {};
}

/// The semi-simplex category opposite, truncated at [top]: objects [0..top]
/// ranked by dimension, one arrow [n] -> [m] per strictly increasing map
/// [m] -> [n].
struct SemiSimplexOp {
  FinCat cat;
  /// For each arrow, the increasing map it reverses.
  std::vector<simplex::MonotoneMap> maps;
  /// Arrow id by (source object, image mask).
  std::map<std::pair<std::size_t, simplex::Mask>, std::size_t> by_mask;

  std::size_t arrow_for(std::size_t n, simplex::Mask image) const { return by_mask.at({n, image}); }
};

inline SemiSimplexOp semi_simplex_op(unsigned top) {
  SemiSimplexOp d;
  for (unsigned n = 0; n <= top; ++n) d.cat.add_object("[" + std::to_string(n) + "]", static_cast<int>(n));
  d.maps.assign(d.cat.arrow_count(), simplex::MonotoneMap::identity(0));
  for (unsigned n = 0; n <= top; ++n) {
    std::size_t id = d.cat.identity(n);
    d.maps[id] = simplex::MonotoneMap::identity(n);
    d.by_mask[{n, simplex::full_mask(n)}] = id;
  }
  for (unsigned n = 0; n <= top; ++n)
    for (unsigned m = 0; m < n; ++m)
      for (const auto& f : simplex::enumerate_homs(n, m)) {
        std::size_t a = d.cat.add_arrow(n, m, "[" + std::to_string(n) + "]" + simplex::to_string_mask(f.mask()));
        d.maps.push_back(f);
        d.by_mask[{n, f.mask()}] = a;
      }
  d.cat.fill_identity_composites();
  // In the opposite category, g after f reverses to (map of f) after (map of g).
  for (std::size_t g = 0; g < d.cat.arrow_count(); ++g)
    for (std::size_t f = 0; f < d.cat.arrow_count(); ++f) {
      if (d.cat.arrow(f).dst != d.cat.arrow(g).src) continue;
      auto composite = simplex::compose(d.maps[f], d.maps[g]);
      d.cat.set_compose(g, f, d.by_mask.at({d.cat.arrow(f).src, composite.mask()}));
    }
  return d;
}

}  // namespace tltt::diagram
