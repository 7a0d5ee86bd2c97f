#pragma once

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tltt/diagram/diagram.hpp"
#include "tltt/diagram/nerve.hpp"
#include "tltt/simplex/sieve.hpp"

namespace tltt::diagram {

using nlohmann::json;

class FixtureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw FixtureError(path + ": " + e.what());
  }
}

/// A category document: `objects` as {id, rank}, `homs` as {src, dst,
/// arrows}, and `compose` as {after, before, result} for non-identity
/// composites. Identities are implicit and named `id_<object>`.
inline std::shared_ptr<FinCat> parse_category(const json& j) {
  auto c = std::make_shared<FinCat>();
  if (!j.contains("objects")) throw FixtureError("category needs `objects`");
  for (const auto& o : j.at("objects")) {
    std::string id = o.at("id").get<std::string>();
    if (c->object_by_name(id)) throw FixtureError("duplicate object " + id);
    c->add_object(id, o.value("rank", 0));
  }
  auto object = [&](const json& v) {
    auto id = c->object_by_name(v.get<std::string>());
    if (!id) throw FixtureError("unknown object " + v.get<std::string>());
    return *id;
  };
  std::map<std::string, std::size_t> arrows;
  for (std::size_t x = 0; x < c->object_count(); ++x) arrows["id_" + c->object_name(x)] = c->identity(x);
  for (const auto& h : j.value("homs", json::array())) {
    std::size_t src = object(h.at("src"));
    std::size_t dst = object(h.at("dst"));
    for (const auto& a : h.at("arrows")) {
      std::string name = a.get<std::string>();
      if (arrows.count(name)) throw FixtureError("duplicate arrow " + name);
      arrows[name] = c->add_arrow(src, dst, name);
    }
  }
  c->fill_identity_composites();
  auto arrow = [&](const json& v) {
    auto it = arrows.find(v.get<std::string>());
    if (it == arrows.end()) throw FixtureError("unknown arrow " + v.get<std::string>());
    return it->second;
  };
  for (const auto& e : j.value("compose", json::array()))
    c->set_compose(arrow(e.at("after")), arrow(e.at("before")), arrow(e.at("result")));
  return c;
}

/// A diagram document over `base`: `values` maps objects to cardinalities
/// and `function` maps non-identity arrows to tables.
inline SetDiagram parse_diagram_values(CatPtr base, const json& j) {
  SetDiagram d(base);
  const FinCat& c = *base;
  for (const auto& [name, n] : j.at("values").items()) {
    auto id = c.object_by_name(name);
    if (!id) throw FixtureError("unknown object " + name);
    d.set_size(*id, n.get<std::size_t>());
  }
  d.fill_identities();
  std::vector<bool> seen(c.arrow_count(), false);
  const json functions = j.value("function", json::object());
  for (const auto& [name, table] : functions.items()) {
    auto id = c.arrow_by_name(name);
    if (!id) throw FixtureError("unknown arrow " + name);
    try {
      d.set_function(*id, table.get<std::vector<std::size_t>>());
    } catch (const json::exception& e) {
      throw FixtureError("function " + name + ": " + e.what());
    } catch (const std::invalid_argument& e) {
      throw FixtureError(e.what());
    }
    seen[*id] = true;
  }
  for (std::size_t f = 0; f < c.arrow_count(); ++f)
    if (!c.is_identity(f) && !seen[f] && d.size(c.arrow(f).src) > 0)
      throw FixtureError("missing function for arrow " + c.arrow(f).name);
  return d;
}

/// `{"sizes": [...], "faces": [[], [[d0], [d1]], ...]}`.
inline simplex::FiniteSemiSimplicialSet parse_semi_simplicial(const json& j) {
  try {
    return {j.at("sizes").get<std::vector<std::size_t>>(),
            j.at("faces").get<std::vector<std::vector<std::vector<std::size_t>>>>()};
  } catch (const std::invalid_argument& e) {
    throw FixtureError(std::string("semi-simplicial set: ") + e.what());
  }
}

/// A semi-simplicial set given directly or as the nerve of a category.
/// `levels` bounds the truncation of a nerve.
inline simplex::FiniteSemiSimplicialSet parse_simplicial_source(const json& j, unsigned levels) {
  if (j.contains("semi_simplicial")) return parse_semi_simplicial(j.at("semi_simplicial"));
  if (j.contains("nerve")) {
    const json& n = j.at("nerve");
    return nerve(*parse_category(n.at("category")), n.value("levels", levels)).set;
  }
  if (j.contains("objects")) return nerve(*parse_category(j), levels).set;
  throw FixtureError("expected `semi_simplicial`, `nerve`, or a category document");
}

/// A diagram over the truncated semi-simplex category. Accepts `spine`,
/// `boundary`, `simplex` (each a dimension), `constant`, `semi_simplicial`
/// and `nerve` shorthands.
inline SetDiagram parse_simplex_diagram(const SimplexBase& base, const json& j) {
  if (j.contains("spine")) return from_simplicial_subset(base, simplex::spine_subfunctor(j.at("spine").get<unsigned>()));
  if (j.contains("boundary"))
    return from_simplicial_subset(base, simplex::boundary_subfunctor(j.at("boundary").get<unsigned>()));
  if (j.contains("simplex")) return from_simplicial_subset(base, simplex::full_subfunctor(j.at("simplex").get<unsigned>()));
  if (j.contains("constant")) return constant_diagram(base.cat, j.at("constant").get<std::size_t>());
  return from_semi_simplicial(base, parse_simplicial_source(j, base.top()));
}

/// A pair of diagrams over a common base: `base` is either
/// `{"semi_simplex": N}` or a category document; `F` and `G` are diagram
/// documents.
struct DiagramPair {
  std::optional<SimplexBase> simplex_base;
  CatPtr base;
  SetDiagram f;
  SetDiagram g;
};

inline DiagramPair parse_diagram_pair(const json& j) {
  const json& b = j.at("base");
  if (b.contains("semi_simplex")) {
    SimplexBase sb(b.at("semi_simplex").get<unsigned>());
    SetDiagram f = parse_simplex_diagram(sb, j.at("F"));
    SetDiagram g = parse_simplex_diagram(sb, j.at("G"));
    CatPtr cat = sb.cat;
    return {std::move(sb), cat, std::move(f), std::move(g)};
  }
  CatPtr cat = parse_category(b);
  SetDiagram f = parse_diagram_values(cat, j.at("F"));
  SetDiagram g = parse_diagram_values(cat, j.at("G"));
  return {std::nullopt, cat, std::move(f), std::move(g)};
}

}  // namespace tltt::diagram
