#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "tltt/diagram/nerve.hpp"

namespace tltt::diagram {

/// The category whose objects are the listed finite sets (by cardinality)
/// and whose arrows are all functions between them.
struct SetCategory {
  std::shared_ptr<FinCat> cat;
  std::vector<std::size_t> cards;
  std::vector<std::vector<std::size_t>> fn;  // table of each arrow
};

inline SetCategory set_category(const std::vector<std::size_t>& cards) {
  SetCategory s{std::make_shared<FinCat>(), cards, {}};
  std::map<std::tuple<std::size_t, std::size_t, std::vector<std::size_t>>, std::size_t> id_of;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    s.cat->add_object("S" + std::to_string(i), 0);
    std::vector<std::size_t> id(cards[i]);
    for (std::size_t v = 0; v < id.size(); ++v) id[v] = v;
    s.fn.push_back(id);
    id_of[{i, i, id}] = s.cat->identity(i);
  }
  for (std::size_t i = 0; i < cards.size(); ++i)
    for (std::size_t j = 0; j < cards.size(); ++j) {
      if (cards[i] > 0 && cards[j] == 0) continue;
      std::vector<std::size_t> table(cards[i], 0);
      for (;;) {
        if (!id_of.count({i, j, table})) {
          id_of[{i, j, table}] = s.cat->add_arrow(i, j, "S" + std::to_string(i) + "S" + std::to_string(j) + "#" +
                                                            std::to_string(s.fn.size()));
          s.fn.push_back(table);
        }
        std::size_t pos = 0;
        while (pos < table.size() && ++table[pos] == cards[j]) table[pos++] = 0;
        if (pos == table.size()) break;
      }
    }
  for (std::size_t g = 0; g < s.fn.size(); ++g)
    for (std::size_t f = 0; f < s.fn.size(); ++f) {
      const auto& af = s.cat->arrow(f);
      const auto& ag = s.cat->arrow(g);
      if (af.dst != ag.src) continue;
      std::vector<std::size_t> gf;
      for (std::size_t v : s.fn[f]) gf.push_back(s.fn[g][v]);
      s.cat->set_compose(g, f, id_of.at({af.src, ag.dst, gf}));
    }
  return s;
}

/// Pointed sets from the list with point-preserving functions.
struct PointedCategory {
  std::shared_ptr<FinCat> cat;
  std::vector<std::pair<std::size_t, std::size_t>> object;  // (set, point)
  std::vector<std::size_t> underlying;                      // arrow of the set category
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arrow_of;  // (pointed source, set arrow)
};

inline PointedCategory pointed_category(const SetCategory& s) {
  PointedCategory p{std::make_shared<FinCat>(), {}, {}, {}};
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> obj_of;
  for (std::size_t i = 0; i < s.cards.size(); ++i)
    for (std::size_t v = 0; v < s.cards[i]; ++v) {
      obj_of[{i, v}] = p.cat->add_object("S" + std::to_string(i) + "." + std::to_string(v), 0);
      p.object.push_back({i, v});
    }
  p.underlying.assign(p.cat->arrow_count(), 0);
  for (std::size_t o = 0; o < p.object.size(); ++o) {
    p.underlying[p.cat->identity(o)] = s.cat->identity(p.object[o].first);
    p.arrow_of[{o, s.cat->identity(p.object[o].first)}] = p.cat->identity(o);
  }
  for (std::size_t o = 0; o < p.object.size(); ++o)
    for (std::size_t f : s.cat->arrows_from(p.object[o].first)) {
      if (s.cat->is_identity(f)) continue;
      std::size_t target = obj_of.at({s.cat->arrow(f).dst, s.fn[f][p.object[o].second]});
      p.arrow_of[{o, f}] = p.cat->add_arrow(o, target, s.cat->arrow(f).name + "@" + p.cat->object_name(o));
      p.underlying.push_back(f);
    }
  for (std::size_t g = 0; g < p.underlying.size(); ++g)
    for (std::size_t f = 0; f < p.underlying.size(); ++f) {
      if (p.cat->arrow(f).dst != p.cat->arrow(g).src) continue;
      p.cat->set_compose(g, f, p.arrow_of.at({p.cat->arrow(f).src, s.cat->compose(p.underlying[g], p.underlying[f])}));
    }
  return p;
}

struct PointedNerveReport {
  unsigned level;
  std::size_t count_a;  // chains of pointed sets and point-preserving maps
  std::size_t count_b;  // chains of sets with a point in the first one
  bool bijective;
  bool natural;
  std::string witness;

  bool ok() const { return count_a == count_b && bijective && natural; }
};

/// Compares both sides at every level up to `top`. The map pushes the point
/// of the first set forward along the chain.
inline std::vector<PointedNerveReport> pointed_nerve_counts(const std::vector<std::size_t>& cards, unsigned top) {
  if (cards.empty()) throw std::invalid_argument("universe must be non-empty");
  if (top > 4) throw std::invalid_argument("level is limited to 4");
  SetCategory s = set_category(cards);
  PointedCategory p = pointed_category(s);
  Nerve ns = nerve(*s.cat, top);
  Nerve np = nerve(*p.cat, top);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pobj;
  for (std::size_t o = 0; o < p.object.size(); ++o) pobj[p.object[o]] = o;

  auto first_object = [&](unsigned k, const std::vector<std::size_t>& ch) {
    return k == 0 ? ch[0] : s.cat->arrow(ch[0]).src;
  };
  // B elements per level: (set-chain cell, point of its first set).
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> b(top + 1);
  std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>> b_index(top + 1);
  std::vector<std::map<std::vector<std::size_t>, std::size_t>> a_index(top + 1);
  for (unsigned k = 0; k <= top; ++k) {
    for (std::size_t cell = 0; cell < ns.chains[k].size(); ++cell)
      for (std::size_t v = 0; v < cards[first_object(k, ns.chains[k][cell])]; ++v) {
        b_index[k][{cell, v}] = b[k].size();
        b[k].push_back({cell, v});
      }
    for (std::size_t cell = 0; cell < np.chains[k].size(); ++cell) a_index[k][np.chains[k][cell]] = cell;
  }
  auto push = [&](unsigned k, std::pair<std::size_t, std::size_t> e) -> std::size_t {
    const auto& ch = ns.chains[k][e.first];
    if (k == 0) return pobj.at({ch[0], e.second});
    std::vector<std::size_t> pc;
    std::size_t obj = pobj.at({s.cat->arrow(ch[0]).src, e.second});
    for (std::size_t f : ch) {
      std::size_t a = p.arrow_of.at({obj, f});
      pc.push_back(a);
      obj = p.cat->arrow(a).dst;
    }
    return a_index[k].at(pc);
  };
  auto b_face = [&](unsigned k, unsigned i, std::pair<std::size_t, std::size_t> e) {
    std::size_t cell = ns.set.face(k, i, e.first);
    std::size_t point = e.second;
    if (i == 0) point = s.fn[ns.chains[k][e.first][0]][point];
    return b_index[k - 1].at({cell, point});
  };

  std::vector<PointedNerveReport> out;
  for (unsigned k = 0; k <= top; ++k) {
    PointedNerveReport r{k, np.set.size(k), b[k].size(), true, true, ""};
    std::vector<std::size_t> image(b[k].size());
    std::vector<bool> hit(np.set.size(k), false);
    for (std::size_t e = 0; e < b[k].size(); ++e) {
      image[e] = push(k, b[k][e]);
      if (hit[image[e]]) {
        r.bijective = false;
        r.witness = "two elements push forward to the same pointed chain";
      }
      hit[image[e]] = true;
    }
    for (bool h : hit)
      if (!h) {
        r.bijective = false;
        if (r.witness.empty()) r.witness = "a pointed chain is not reached";
      }
    if (k > 0)
      for (std::size_t e = 0; e < b[k].size(); ++e)
        for (unsigned i = 0; i <= k; ++i)
          if (push(k - 1, b[k - 1][b_face(k, i, b[k][e])]) != np.set.face(k, i, image[e]) && r.natural) {
            r.natural = false;
            r.witness = "face d" + std::to_string(i) + " does not commute at level " + std::to_string(k);
          }
    out.push_back(r);
  }
  return out;
}

}  // namespace tltt::diagram
