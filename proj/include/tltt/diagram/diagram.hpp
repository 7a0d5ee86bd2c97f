#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/diagram/category.hpp"
#include "tltt/simplex/semi_simplicial.hpp"
#include "tltt/simplex/simplicial_subset.hpp"

namespace tltt::diagram {

using CatPtr = std::shared_ptr<const FinCat>;

/// A functor from a finite category to finite sets. Elements of each value
/// set are the indices 0..size-1; each arrow carries its function as a table.
class SetDiagram {
 public:
  explicit SetDiagram(CatPtr base)
      : base_(std::move(base)), sizes_(base_->object_count(), 0), functions_(base_->arrow_count()) {}

  SetDiagram(CatPtr base, std::vector<std::size_t> sizes, std::vector<std::vector<std::size_t>> functions)
      : base_(std::move(base)), sizes_(std::move(sizes)), functions_(std::move(functions)) {
    if (sizes_.size() != base_->object_count()) throw std::invalid_argument("one value per object required");
    if (functions_.size() != base_->arrow_count()) throw std::invalid_argument("one function per arrow required");
    for (std::size_t f = 0; f < functions_.size(); ++f) check_function(f, functions_[f]);
  }

  const FinCat& base() const { return *base_; }
  const CatPtr& base_ptr() const { return base_; }
  std::size_t size(std::size_t x) const { return sizes_.at(x); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }
  const std::vector<std::size_t>& function(std::size_t f) const { return functions_.at(f); }
  std::size_t apply(std::size_t f, std::size_t v) const { return functions_.at(f).at(v); }

  /// Replaces the value at `x`; functions touching `x` must be reset after.
  void set_size(std::size_t x, std::size_t n) { sizes_.at(x) = n; }
  void set_function(std::size_t f, std::vector<std::size_t> fn) {
    check_function(f, fn);
    functions_.at(f) = std::move(fn);
  }

  /// Sets every identity function from the current sizes.
  void fill_identities() {
    for (std::size_t x = 0; x < sizes_.size(); ++x) {
      std::vector<std::size_t> id(sizes_[x]);
      for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
      functions_[base_->identity(x)] = std::move(id);
    }
  }

  /// Identities and composition, checked exhaustively.
  Validation functoriality() const {
    const FinCat& c = *base_;
    for (std::size_t f = 0; f < c.arrow_count(); ++f) {
      const auto& a = c.arrow(f);
      if (functions_[f].size() != sizes_[a.src])
        return Validation::failure("shape", "function of " + a.name + " has the wrong domain");
    }
    for (std::size_t x = 0; x < c.object_count(); ++x) {
      const auto& id = functions_[c.identity(x)];
      for (std::size_t v = 0; v < id.size(); ++v)
        if (id[v] != v)
          return Validation::failure("identity", "identity of " + c.object_name(x) + " moves element " +
                                                     std::to_string(v));
    }
    for (std::size_t g = 0; g < c.arrow_count(); ++g)
      for (std::size_t f = 0; f < c.arrow_count(); ++f) {
        if (c.arrow(f).dst != c.arrow(g).src) continue;
        std::size_t gf = c.compose(g, f);
        if (gf == kNone) return Validation::failure("composition", "base lacks " + c.arrow(g).name + " . " + c.arrow(f).name);
        for (std::size_t v = 0; v < sizes_[c.arrow(f).src]; ++v)
          if (apply(g, apply(f, v)) != apply(gf, v))
            return Validation::failure("composition", "functions of " + c.arrow(g).name + " . " +
                                                          c.arrow(f).name + " disagree at element " +
                                                          std::to_string(v));
      }
    return {};
  }

  friend bool operator==(const SetDiagram& a, const SetDiagram& b) {
    return a.base_ == b.base_ && a.sizes_ == b.sizes_ && a.functions_ == b.functions_;
  }

 private:
  void check_function(std::size_t f, const std::vector<std::size_t>& fn) const {
    const auto& a = base_->arrow(f);
    if (fn.size() != sizes_.at(a.src))
      throw std::invalid_argument("function of " + a.name + " has the wrong domain size");
    for (std::size_t v : fn)
      if (v >= sizes_.at(a.dst)) throw std::invalid_argument("function of " + a.name + " leaves its codomain");
  }

  CatPtr base_;
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<std::size_t>> functions_;
};

/// A natural transformation between diagrams over the same base.
struct DiagramMap {
  std::vector<std::vector<std::size_t>> components;

  std::size_t apply(std::size_t x, std::size_t v) const { return components.at(x).at(v); }
};

inline Validation naturality(const SetDiagram& from, const SetDiagram& to, const DiagramMap& m) {
  const FinCat& c = from.base();
  if (m.components.size() != c.object_count()) return Validation::failure("shape", "one component per object required");
  for (std::size_t x = 0; x < c.object_count(); ++x) {
    if (m.components[x].size() != from.size(x))
      return Validation::failure("shape", "component at " + c.object_name(x) + " has the wrong domain");
    for (std::size_t v : m.components[x])
      if (v >= to.size(x)) return Validation::failure("shape", "component at " + c.object_name(x) + " leaves its codomain");
  }
  for (std::size_t f = 0; f < c.arrow_count(); ++f) {
    const auto& a = c.arrow(f);
    for (std::size_t v = 0; v < from.size(a.src); ++v)
      if (m.apply(a.dst, from.apply(f, v)) != to.apply(f, m.apply(a.src, v)))
        return Validation::failure("naturality", "square for " + a.name + " fails at element " + std::to_string(v));
  }
  return {};
}

/// The base category of a diagram over the truncated semi-simplex category.
struct SimplexBase {
  std::shared_ptr<const SemiSimplexOp> shape;
  CatPtr cat;

  explicit SimplexBase(unsigned top) {
    auto s = std::make_shared<SemiSimplexOp>(semi_simplex_op(top));
    cat = CatPtr(s, &s->cat);
    shape = std::move(s);
  }
  unsigned top() const { return static_cast<unsigned>(cat->object_count() - 1); }
};

/// A semi-simplicial set as a diagram on the truncated semi-simplex category.
inline SetDiagram from_semi_simplicial(const SimplexBase& base, const simplex::FiniteSemiSimplicialSet& x) {
  if (x.truncation() < base.top()) throw std::invalid_argument("semi-simplicial set is truncated too low");
  SetDiagram d(base.cat);
  for (unsigned k = 0; k <= base.top(); ++k) d.set_size(k, x.size(k));
  for (std::size_t f = 0; f < base.cat->arrow_count(); ++f) {
    const auto& a = base.cat->arrow(f);
    simplex::Mask image = base.shape->maps[f].mask();
    std::vector<std::size_t> fn(x.size(a.src));
    for (std::size_t v = 0; v < fn.size(); ++v) fn[v] = x.restrict(a.src, v, image);
    d.set_function(f, std::move(fn));
  }
  return d;
}

/// Members of a simplicial subset of dimension k, in order of appearance at
/// each level (lexicographic).
inline std::vector<std::vector<simplex::Mask>> subset_levels(const simplex::SimplicialSubset& s, unsigned top) {
  std::vector<std::vector<simplex::Mask>> lv(top + 1);
  for (unsigned k = 0; k <= top && k <= s.dim(); ++k)
    for (const auto& f : s.level(k)) lv[k].push_back(f.mask());
  return lv;
}

/// A simplicial subset as a diagram: level k holds its k-dimensional members,
/// and an arrow picks the sub-face at the positions it selects.
inline SetDiagram from_simplicial_subset(const SimplexBase& base, const simplex::SimplicialSubset& s) {
  auto lv = subset_levels(s, base.top());
  SetDiagram d(base.cat);
  for (unsigned k = 0; k <= base.top(); ++k) d.set_size(k, lv[k].size());
  for (std::size_t f = 0; f < base.cat->arrow_count(); ++f) {
    const auto& a = base.cat->arrow(f);
    auto positions = simplex::elements(base.shape->maps[f].mask());
    std::vector<std::size_t> fn;
    for (simplex::Mask m : lv[a.src]) {
      auto elems = simplex::elements(m);
      std::vector<unsigned> picked;
      for (unsigned p : positions) picked.push_back(elems[p]);
      simplex::Mask sub = simplex::mask_of(picked);
      auto it = std::find(lv[a.dst].begin(), lv[a.dst].end(), sub);
      if (it == lv[a.dst].end()) throw std::invalid_argument("subset is not closed under faces");
      fn.push_back(static_cast<std::size_t>(it - lv[a.dst].begin()));
    }
    d.set_function(f, std::move(fn));
  }
  return d;
}

/// A constant diagram with value of the given size.
inline SetDiagram constant_diagram(CatPtr base, std::size_t n) {
  SetDiagram d(base);
  for (std::size_t x = 0; x < base->object_count(); ++x) d.set_size(x, n);
  for (std::size_t f = 0; f < base->arrow_count(); ++f) {
    std::vector<std::size_t> id(n);
    for (std::size_t i = 0; i < n; ++i) id[i] = i;
    d.set_function(f, std::move(id));
  }
  return d;
}

}  // namespace tltt::diagram
