#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "tltt/diagram/limits.hpp"

namespace tltt::diagram {

/// Natural transformations F -> G as families indexed by (object, element of F).
struct NatSet {
  /// Cell index of (object, element of F).
  std::vector<std::vector<std::size_t>> cell;
  std::vector<Family> elements;

  std::size_t size() const { return elements.size(); }
  std::size_t component(const Family& alpha, std::size_t x, std::size_t v) const { return alpha[cell[x][v]]; }
};

inline NatSet natural_transformations(const SetDiagram& f, const SetDiagram& g, std::size_t cap = 2'000'000) {
  const FinCat& c = f.base();
  NatSet out;
  FamilyProblem p;
  out.cell.resize(c.object_count());
  std::vector<std::size_t> order;
  for (std::size_t x : rank_order(c))
    for (std::size_t v = 0; v < f.size(x); ++v) {
      out.cell[x].push_back(p.add_cell(g.size(x)));
      order.push_back(out.cell[x].back());
    }
  for (std::size_t h = 0; h < c.arrow_count(); ++h) {
    const auto& a = c.arrow(h);
    for (std::size_t v = 0; v < f.size(a.src); ++v)
      p.link(out.cell[a.src][v], out.cell[a.dst][f.apply(h, v)], g.function(h));
  }
  out.elements = solve(p, order, cap);
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

/// The exponential diagram: at d, natural transformations F x y_d -> G,
/// where y_d(c) is the set of arrows d -> c. An arrow k : d -> d' acts by
/// precomposition, (k . alpha)_c(v, h) = alpha_c(v, h . k).
struct Exponential {
  SetDiagram diagram;
  /// Elements at each object, as families over `cells[d]`.
  std::vector<std::vector<Family>> elements;
  /// cells[d][c] maps (element of F at c, position of h in hom(d, c)) to a cell.
  std::vector<std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>>> cells;
  std::vector<std::vector<std::vector<std::size_t>>> homs;  // homs[d][c]

  std::size_t cell_count(std::size_t d) const {
    std::size_t n = 0;
    for (const auto& m : cells[d]) n += m.size();
    return n;
  }
};

inline Exponential exponential_diagram(const SetDiagram& f, const SetDiagram& g, std::size_t cap = 2'000'000) {
  const FinCat& c = f.base();
  if (f.base_ptr() != g.base_ptr()) throw std::invalid_argument("diagrams must share a base");
  const std::size_t n = c.object_count();
  Exponential e{SetDiagram(f.base_ptr()), std::vector<std::vector<Family>>(n), {}, {}};
  e.cells.assign(n, std::vector<std::map<std::pair<std::size_t, std::size_t>, std::size_t>>(n));
  e.homs.assign(n, std::vector<std::vector<std::size_t>>(n));

  auto pos_in = [](const std::vector<std::size_t>& v, std::size_t a) {
    return static_cast<std::size_t>(std::find(v.begin(), v.end(), a) - v.begin());
  };
  for (std::size_t d = 0; d < n; ++d) {
    FamilyProblem p;
    std::vector<std::size_t> order;
    for (std::size_t x : rank_order(c)) {
      e.homs[d][x] = c.hom(d, x);
      for (std::size_t v = 0; v < f.size(x); ++v)
        for (std::size_t h = 0; h < e.homs[d][x].size(); ++h) {
          e.cells[d][x][{v, h}] = p.add_cell(g.size(x));
          order.push_back(e.cells[d][x][{v, h}]);
        }
    }
    for (std::size_t k = 0; k < c.arrow_count(); ++k) {
      const auto& a = c.arrow(k);
      for (std::size_t v = 0; v < f.size(a.src); ++v)
        for (std::size_t h = 0; h < e.homs[d][a.src].size(); ++h) {
          std::size_t kh = c.compose(k, e.homs[d][a.src][h]);
          p.link(e.cells[d][a.src].at({v, h}), e.cells[d][a.dst].at({f.apply(k, v), pos_in(e.homs[d][a.dst], kh)}),
                 g.function(k));
        }
    }
    e.elements[d] = solve(p, order, cap);
    std::sort(e.elements[d].begin(), e.elements[d].end());
    e.diagram.set_size(d, e.elements[d].size());
  }
  for (std::size_t k = 0; k < c.arrow_count(); ++k) {
    const std::size_t d = c.arrow(k).src;
    const std::size_t d2 = c.arrow(k).dst;
    std::vector<std::size_t> fn;
    for (const Family& alpha : e.elements[d]) {
      Family moved(e.cell_count(d2), 0);
      for (std::size_t x = 0; x < n; ++x)
        for (const auto& [key, cell] : e.cells[d2][x]) {
          const auto& [v, h] = key;
          std::size_t hk = c.compose(e.homs[d2][x][h], k);
          moved[cell] = alpha[e.cells[d][x].at({v, pos_in(e.homs[d][x], hk)})];
        }
      auto it = std::lower_bound(e.elements[d2].begin(), e.elements[d2].end(), moved);
      if (it == e.elements[d2].end() || *it != moved) throw std::logic_error("precomposition left the exponential");
      fn.push_back(static_cast<std::size_t>(it - e.elements[d2].begin()));
    }
    e.diagram.set_function(k, std::move(fn));
  }
  return e;
}

/// Checks that the limit of the exponential is in bijection with Nat(F, G)
/// via evaluation at identities. Returns an empty string on success.
inline std::string exponential_limit_bijection(const SetDiagram& f, const Exponential& e,
                                               const std::vector<Family>& lim, const NatSet& nat) {
  const FinCat& c = f.base();
  std::vector<bool> hit(nat.size(), false);
  for (const Family& cone : lim) {
    // beta_x(v) = (cone_x)_x(v, id_x)
    std::size_t cells = 0;
    for (const auto& row : nat.cell) cells += row.size();
    Family beta(cells, 0);
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      const Family& alpha = e.elements[x][cone[x]];
      const auto& hx = e.homs[x][x];
      std::size_t id_pos = static_cast<std::size_t>(std::find(hx.begin(), hx.end(), c.identity(x)) - hx.begin());
      for (std::size_t v = 0; v < f.size(x); ++v) beta[nat.cell[x][v]] = alpha[e.cells[x][x].at({v, id_pos})];
    }
    auto it = std::lower_bound(nat.elements.begin(), nat.elements.end(), beta);
    if (it == nat.elements.end() || *it != beta) return "evaluation at identities is not natural";
    std::size_t i = static_cast<std::size_t>(it - nat.elements.begin());
    if (hit[i]) return "evaluation at identities is not injective";
    hit[i] = true;

    // Inverse direction: alpha^d_c(v, h) = beta_c(v) must give back the cone.
    for (std::size_t d = 0; d < c.object_count(); ++d) {
      const Family& alpha = e.elements[d][cone[d]];
      for (std::size_t x = 0; x < c.object_count(); ++x)
        for (const auto& [key, cell] : e.cells[d][x])
          if (alpha[cell] != beta[nat.cell[x][key.first]]) return "cone is not determined by its identity components";
    }
  }
  if (lim.size() != nat.size())
    return "sizes differ: " + std::to_string(lim.size()) + " vs " + std::to_string(nat.size());
  return "";
}

}  // namespace tltt::diagram
