#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "tltt/diagram/classifier.hpp"
#include "tltt/diagram/exponential.hpp"
#include "tltt/diagram/fixture.hpp"
#include "tltt/diagram/nerve.hpp"
#include "tltt/diagram/pointed_nerve.hpp"
#include "tltt/diagram/random.hpp"
#include "tltt/diagram/yoneda.hpp"
#include "tltt/simplex/horn_factor.hpp"

namespace tltt::lab {

using nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 20160401;

/// Outcome of one lab run: a JSON document, a verdict, and human-readable lines.
struct Outcome {
  json report;
  bool ok = true;
  std::vector<std::string> lines;
};

inline std::int64_t horn_formula(unsigned n) {
  return (std::int64_t{1} << (n + 1)) - 2 * static_cast<std::int64_t>(n) - 4;
}

/// Factors the spine inclusion into the (n, k) horn. The verdict requires a
/// valid chain whose length equals the closed-form count.
inline Outcome horn_factor(unsigned n, unsigned k) {
  Outcome o;
  json doc{{"n", n}, {"k", k}, {"formula", horn_formula(n)}};
  if (!simplex::horn_factor_defined(n, k)) {
    doc["defined"] = false;
    doc["reason"] = "the spine is not contained in the horn";
    o.ok = false;
    o.lines.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) +
                      ": no factorization, the spine is not contained in the horn");
    o.report = std::move(doc);
    return o;
  }
  auto h = simplex::factor_spine_to_horn(n, k);
  std::string audit = simplex::audit(h);
  bool inner_only = std::all_of(h.steps.begin(), h.steps.end(), [](const auto& s) { return s.inner; });
  json steps = json::array();
  for (const auto& s : h.steps)
    steps.push_back({{"S", simplex::to_string_mask(s.removed)}, {"h", s.apex}, {"inner", s.inner}});
  doc["defined"] = true;
  doc["length"] = h.steps.size();
  doc["cells_removed"] = h.cells_removed();
  doc["matches_formula"] = static_cast<std::int64_t>(h.steps.size()) == horn_formula(n);
  doc["inner_only"] = inner_only;
  doc["audit"] = audit.empty() ? "ok" : audit;
  doc["steps"] = std::move(steps);
  o.ok = audit.empty() && doc["matches_formula"].get<bool>();
  o.lines.push_back("n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(h.steps.size()) +
                    " steps removing " + std::to_string(h.cells_removed()) + " cells; formula gives " +
                    std::to_string(horn_formula(n)) + "; audit " + (audit.empty() ? "ok" : audit));
  for (const auto& s : h.steps)
    o.lines.push_back("  remove " + simplex::to_string_mask(s.removed) + " at " + std::to_string(s.apex) +
                      (s.inner ? " (inner)" : " (outer)"));
  o.report = std::move(doc);
  return o;
}

inline Outcome yoneda(const simplex::FiniteSemiSimplicialSet& x, unsigned max_level) {
  Outcome o;
  json levels = json::array();
  unsigned top = std::min<unsigned>(max_level, static_cast<unsigned>(x.truncation()));
  for (unsigned n = 0; n <= top; ++n) {
    auto r = diagram::yoneda_level(x, n);
    levels.push_back({{"n", n},
                      {"cells", r.cells},
                      {"nat_simplex", r.nat_simplex},
                      {"matching", r.matching},
                      {"nat_boundary", r.nat_boundary},
                      {"simplex_bijective", r.simplex_bijective},
                      {"boundary_bijective", r.boundary_bijective},
                      {"ok", r.ok()}});
    if (!r.ok()) levels.back()["witness"] = r.witness;
    o.ok = o.ok && r.ok();
    o.lines.push_back("n=" + std::to_string(n) + ": |X_n|=" + std::to_string(r.cells) + " |Nat(simplex,X)|=" +
                      std::to_string(r.nat_simplex) + " |M_n|=" + std::to_string(r.matching) +
                      " |Nat(boundary,X)|=" + std::to_string(r.nat_boundary) + (r.ok() ? " ok" : " FAILED " + r.witness));
  }
  o.report = {{"levels", std::move(levels)}, {"ok", o.ok}};
  return o;
}

struct LimitInstance {
  std::uint64_t seed;
  std::size_t objects;
  std::size_t arrows;
  std::size_t direct;
  std::size_t recursive;
  std::string problem;
};

inline LimitInstance limit_instance(std::uint64_t seed) {
  diagram::Rng rng(seed);
  auto cat = diagram::random_inverse_category(rng, diagram::limit_bounds());
  auto x = diagram::random_diagram(cat, rng, 4);
  LimitInstance r{seed, cat->object_count(), cat->arrow_count(), 0, 0, ""};
  auto v = diagram::validate_inverse(*cat);
  if (!v.ok) r.problem = "category: " + v.law + ": " + v.witness;
  auto fv = x.functoriality();
  if (r.problem.empty() && !fv.ok) r.problem = "diagram: " + fv.law + ": " + fv.witness;
  auto direct = diagram::limit_direct(x);
  auto rec = diagram::limit_recursive(x);
  r.direct = direct.size();
  r.recursive = rec.size();
  if (r.problem.empty()) r.problem = diagram::compare_limits(rec, direct);
  return r;
}

inline Outcome limits(std::uint64_t seed, std::size_t count) {
  Outcome o;
  json inst = json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < count; ++i) {
    auto r = limit_instance(seed + i);
    json j{{"seed", r.seed}, {"objects", r.objects}, {"arrows", r.arrows}, {"direct", r.direct},
           {"recursive", r.recursive}, {"ok", r.problem.empty()}};
    if (!r.problem.empty()) {
      j["problem"] = r.problem;
      o.lines.push_back("seed " + std::to_string(r.seed) + ": " + r.problem);
    }
    passed += r.problem.empty();
    inst.push_back(std::move(j));
  }
  o.ok = passed == count;
  o.lines.push_back(std::to_string(passed) + "/" + std::to_string(count) +
                    " random diagrams: recursive limit is in bijection with the direct limit");
  o.report = {{"seed", seed}, {"seeds", count}, {"passed", passed}, {"instances", std::move(inst)}, {"ok", o.ok}};
  return o;
}

inline Outcome segal(const simplex::FiniteSemiSimplicialSet& x, unsigned levels) {
  Outcome o;
  json out = json::array();
  unsigned top = std::min<unsigned>(levels, static_cast<unsigned>(x.truncation()));
  json first_failure = nullptr;
  for (unsigned n = 0; n <= top; ++n) {
    auto v = diagram::segal_check(x, n);
    out.push_back({{"n", n}, {"cells", v.cells}, {"spines", v.spines}, {"injective", v.injective},
                   {"surjective", v.surjective}, {"ok", v.ok()}});
    if (!v.ok()) {
      out.back()["witness"] = v.witness;
      if (first_failure.is_null()) first_failure = n;
    }
    o.ok = o.ok && v.ok();
    o.lines.push_back("n=" + std::to_string(n) + ": " + std::to_string(v.cells) + " cells, " +
                      std::to_string(v.spines) + " spines, " + (v.ok() ? "segal" : "NOT segal: " + v.witness));
  }
  o.report = {{"sizes", x.sizes()}, {"levels", std::move(out)}, {"first_failure", first_failure}, {"ok", o.ok}};
  return o;
}

inline Outcome pointed(const std::vector<std::size_t>& cards, unsigned levels) {
  Outcome o;
  json out = json::array();
  for (const auto& r : diagram::pointed_nerve_counts(cards, levels)) {
    out.push_back({{"n", r.level}, {"count_a", r.count_a}, {"count_b", r.count_b}, {"bijective", r.bijective},
                   {"natural", r.natural}, {"ok", r.ok()}});
    o.ok = o.ok && r.ok();
    o.lines.push_back("n=" + std::to_string(r.level) + ": pointed chains " + std::to_string(r.count_a) +
                      ", chains with a point " + std::to_string(r.count_b) + (r.ok() ? " ok" : " FAILED " + r.witness));
  }
  o.report = {{"universe", cards}, {"levels", std::move(out)}, {"ok", o.ok}};
  return o;
}

/// The base for the classifier truncated at n: the semi-simplex category
/// below rank n (empty when n is 0).
inline diagram::CatPtr classifier_base(unsigned n) {
  if (n == 0) return std::make_shared<diagram::FinCat>();
  return diagram::SimplexBase(n - 1).cat;
}

inline Outcome classifier(unsigned n, std::size_t max_card, std::size_t base_size = 1) {
  Outcome o;
  auto b = diagram::constant_diagram(classifier_base(n), base_size);
  auto elements = diagram::classifier_build(b, n, max_card);
  std::size_t trips = 0;
  json failures = json::array();
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto r = diagram::round_trip(b, elements[i]);
    if (r.ok())
      ++trips;
    else
      failures.push_back({{"index", i}, {"witness", r.witness}});
  }
  o.ok = trips == elements.size();
  o.lines.push_back("n=" + std::to_string(n) + " max-card=" + std::to_string(max_card) + ": " +
                    std::to_string(elements.size()) + " elements, round trip holds for " + std::to_string(trips));
  o.report = {{"n", n},        {"max_card", max_card},   {"base_size", base_size}, {"elements", elements.size()},
              {"round_trips", trips}, {"failures", std::move(failures)}, {"ok", o.ok}};
  return o;
}

struct ExponentialCheck {
  std::vector<std::size_t> exponential_sizes;
  std::size_t limit;
  std::size_t nat;
  std::string problem;
};

inline ExponentialCheck exponential_check(const diagram::SetDiagram& f, const diagram::SetDiagram& g) {
  auto e = diagram::exponential_diagram(f, g);
  ExponentialCheck r{e.diagram.sizes(), 0, 0, ""};
  auto fv = e.diagram.functoriality();
  if (!fv.ok) r.problem = "exponential is not functorial: " + fv.witness;
  auto lim = diagram::limit_direct(e.diagram);
  auto nat = diagram::natural_transformations(f, g);
  r.limit = lim.size();
  r.nat = nat.size();
  if (r.problem.empty()) r.problem = diagram::exponential_limit_bijection(f, e, lim, nat);
  return r;
}

inline json to_json(const ExponentialCheck& r) {
  json j{{"exponential_sizes", r.exponential_sizes}, {"limit", r.limit}, {"nat", r.nat}, {"ok", r.problem.empty()}};
  if (!r.problem.empty()) j["problem"] = r.problem;
  return j;
}

inline Outcome exponential_pair(const diagram::SetDiagram& f, const diagram::SetDiagram& g) {
  Outcome o;
  auto r = exponential_check(f, g);
  o.ok = r.problem.empty();
  o.lines.push_back("|lim [F,G]| = " + std::to_string(r.limit) + ", |Nat(F,G)| = " + std::to_string(r.nat) +
                    (o.ok ? ", bijection verified" : ", FAILED: " + r.problem));
  o.report = to_json(r);
  return o;
}

inline Outcome exponential_random(std::uint64_t seed, std::size_t count) {
  Outcome o;
  json inst = json::array();
  std::size_t passed = 0;
  for (std::size_t i = 0; i < count; ++i) {
    diagram::Rng rng(seed + i);
    auto p = diagram::random_pair(rng);
    auto r = exponential_check(p.f, p.g);
    json j = to_json(r);
    j["seed"] = seed + i;
    inst.push_back(std::move(j));
    if (r.problem.empty())
      ++passed;
    else
      o.lines.push_back("seed " + std::to_string(seed + i) + ": " + r.problem);
  }
  o.ok = passed == count;
  o.lines.push_back(std::to_string(passed) + "/" + std::to_string(count) +
                    " random pairs: limit of the exponential matches Nat(F,G)");
  o.report = {{"seed", seed}, {"seeds", count}, {"passed", passed}, {"instances", std::move(inst)}, {"ok", o.ok}};
  return o;
}

}  // namespace tltt::lab
