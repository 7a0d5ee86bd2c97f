#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/diagram/limits.hpp"

namespace tltt::diagram {

/// A place where an element of the classifier chooses a set: an object i, a
/// point b of the base at i, and a matching point m of the lower part of the
/// interpretation whose projection agrees with the boundary of b.
struct ClassifierSlot {
  std::size_t object;
  std::size_t b;
  Family m;

  friend bool operator==(const ClassifierSlot&, const ClassifierSlot&) = default;
};

/// One rank level: a cardinality (a set from the finite universe) per slot.
struct ClassifierLevel {
  std::vector<ClassifierSlot> slots;
  std::vector<std::size_t> cards;

  friend bool operator==(const ClassifierLevel&, const ClassifierLevel&) = default;
};

/// An element of the classifier truncated at n: one level per rank below n.
struct ClassifierElement {
  std::vector<ClassifierLevel> levels;

  std::size_t truncation() const { return levels.size(); }
  friend bool operator==(const ClassifierElement&, const ClassifierElement&) = default;
};

/// The total diagram of an element together with its projection to the base.
/// An element of the total diagram at i is a pair (slot, y) with y below the
/// slot's cardinality.
struct Interpretation {
  SetDiagram diagram;
  DiagramMap projection;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> elements;  // per object: (slot, y)
};

inline void require_truncated(const FinCat& c, std::size_t n) {
  for (std::size_t x = 0; x < c.object_count(); ++x)
    if (c.rank(x) < 0 || static_cast<std::size_t>(c.rank(x)) >= n)
      throw std::invalid_argument("base object " + c.object_name(x) + " has rank outside [0, " + std::to_string(n) + ")");
}

/// Slots at rank r, given an interpretation of all lower ranks.
inline std::vector<ClassifierSlot> level_slots(const SetDiagram& base, const Interpretation& lower, int r) {
  const FinCat& c = base.base();
  std::vector<ClassifierSlot> out;
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    if (c.rank(i) != r) continue;
    MatchingObject m = matching_object(lower.diagram, i);
    for (std::size_t b = 0; b < base.size(i); ++b) {
      Family boundary = boundary_of(base, m.arrows, b);
      for (const Family& fam : m.elements) {
        bool agrees = true;
        for (std::size_t k = 0; agrees && k < m.arrows.size(); ++k)
          agrees = lower.projection.apply(c.arrow(m.arrows[k]).dst, fam[k]) == boundary[k];
        if (agrees) out.push_back({i, b, fam});
      }
    }
  }
  return out;
}

/// Interprets the first `upto` levels; objects of higher rank stay empty.
inline Interpretation interpret(const SetDiagram& base, const ClassifierElement& x, std::size_t upto) {
  const FinCat& c = base.base();
  Interpretation out{SetDiagram(base.base_ptr()),
                     DiagramMap{std::vector<std::vector<std::size_t>>(c.object_count())},
                     std::vector<std::vector<std::pair<std::size_t, std::size_t>>>(c.object_count())};
  out.diagram.fill_identities();
  for (std::size_t r = 0; r < upto; ++r) {
    const ClassifierLevel& level = x.levels.at(r);
    if (level.slots.size() != level.cards.size()) throw std::invalid_argument("slot and cardinality counts differ");
    for (std::size_t s = 0; s < level.slots.size(); ++s)
      for (std::size_t y = 0; y < level.cards[s]; ++y) {
        std::size_t i = level.slots[s].object;
        out.elements[i].push_back({s, y});
        out.projection.components[i].push_back(level.slots[s].b);
      }
    for (std::size_t i = 0; i < c.object_count(); ++i) {
      if (static_cast<std::size_t>(c.rank(i)) != r) continue;
      out.diagram.set_size(i, out.elements[i].size());
      out.diagram.fill_identities();
      std::vector<std::size_t> arrows;
      for (std::size_t f : c.arrows_from(i))
        if (!c.is_identity(f)) arrows.push_back(f);
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        std::vector<std::size_t> fn;
        for (const auto& [s, y] : out.elements[i]) fn.push_back(level.slots[s].m.at(k));
        out.diagram.set_function(arrows[k], std::move(fn));
      }
    }
  }
  return out;
}

inline Interpretation interpret(const SetDiagram& base, const ClassifierElement& x) {
  return interpret(base, x, x.truncation());
}

/// Every element of the classifier truncated at n, with cardinalities up to
/// `max_card`. Throws std::length_error past `cap` elements.
inline std::vector<ClassifierElement> classifier_build(const SetDiagram& base, std::size_t n, std::size_t max_card,
                                                       std::size_t cap = 1'000'000) {
  require_truncated(base.base(), n);
  std::vector<ClassifierElement> out;
  ClassifierElement cur;
  auto rec = [&](auto& self, std::size_t r) -> void {
    if (r == n) {
      if (out.size() >= cap) throw std::length_error("classifier enumeration exceeds the cap");
      out.push_back(cur);
      return;
    }
    Interpretation lower = interpret(base, cur, r);
    ClassifierLevel level{level_slots(base, lower, static_cast<int>(r)), {}};
    level.cards.assign(level.slots.size(), 0);
    cur.levels.push_back(level);
    for (;;) {
      cur.levels.back().cards = level.cards;
      self(self, r + 1);
      std::size_t pos = 0;
      while (pos < level.cards.size() && ++level.cards[pos] > max_card) level.cards[pos++] = 0;
      if (pos == level.cards.size()) break;
    }
    cur.levels.pop_back();
  };
  rec(rec, 0);
  return out;
}

/// The element read back from a diagram over the base: each slot gets the
/// fiber of the diagram over (b, m). `iso` records, per object, the
/// comparison from the re-interpretation to the given diagram.
struct Extraction {
  ClassifierElement element;
  std::vector<std::vector<std::size_t>> iso;
};

inline Extraction extract(const SetDiagram& base, const SetDiagram& d, const DiagramMap& p, std::size_t n) {
  const FinCat& c = base.base();
  require_truncated(c, n);
  Extraction out{{}, std::vector<std::vector<std::size_t>>(c.object_count())};
  for (std::size_t r = 0; r < n; ++r) {
    Interpretation lower = interpret(base, out.element, r);
    ClassifierLevel level{level_slots(base, lower, static_cast<int>(r)), {}};
    std::vector<std::vector<std::size_t>> fibers;
    for (const ClassifierSlot& s : level.slots) {
      MatchingObject md = matching_object(d, s.object);
      Family m;
      for (std::size_t k = 0; k < md.arrows.size(); ++k) m.push_back(out.iso[c.arrow(md.arrows[k]).dst].at(s.m[k]));
      std::vector<std::size_t> fiber;
      for (std::size_t v = 0; v < d.size(s.object); ++v)
        if (p.apply(s.object, v) == s.b && boundary_of(d, md.arrows, v) == m) fiber.push_back(v);
      level.cards.push_back(fiber.size());
      fibers.push_back(std::move(fiber));
    }
    out.element.levels.push_back(level);
    Interpretation here = interpret(base, out.element, r + 1);
    for (std::size_t i = 0; i < c.object_count(); ++i) {
      if (static_cast<std::size_t>(c.rank(i)) != r) continue;
      for (const auto& [s, y] : here.elements[i]) out.iso[i].push_back(fibers[s][y]);
    }
  }
  return out;
}

struct RoundTrip {
  bool same_element;
  bool iso_bijective;
  bool iso_natural;
  bool over_base;
  std::string witness;

  bool ok() const { return same_element && iso_bijective && iso_natural && over_base; }
};

/// Interprets X, reads the element back, and checks that the result matches
/// X level by level and that the comparison is a natural bijection over the base.
inline RoundTrip round_trip(const SetDiagram& base, const ClassifierElement& x) {
  const FinCat& c = base.base();
  Interpretation d = interpret(base, x);
  Extraction e = extract(base, d.diagram, d.projection, x.truncation());
  RoundTrip r{e.element == x, true, true, true, ""};
  if (!r.same_element) r.witness = "read-back element differs";
  Interpretation again = interpret(base, e.element);
  for (std::size_t i = 0; i < c.object_count(); ++i) {
    std::vector<bool> hit(d.diagram.size(i), false);
    if (e.iso[i].size() != d.diagram.size(i)) r.iso_bijective = false;
    for (std::size_t v : e.iso[i]) {
      if (v >= hit.size() || hit[v]) {
        r.iso_bijective = false;
        break;
      }
      hit[v] = true;
    }
    for (std::size_t v = 0; v < e.iso[i].size() && v < again.projection.components[i].size(); ++v)
      if (d.projection.apply(i, e.iso[i][v]) != again.projection.apply(i, v)) r.over_base = false;
  }
  if (!r.iso_bijective && r.witness.empty()) r.witness = "comparison is not a bijection";
  if (r.iso_bijective) {
    Validation v = naturality(again.diagram, d.diagram, DiagramMap{e.iso});
    r.iso_natural = v.ok;
    if (!v.ok && r.witness.empty()) r.witness = v.witness;
  }
  if (!r.over_base && r.witness.empty()) r.witness = "comparison does not commute with the projections";
  return r;
}

}  // namespace tltt::diagram
