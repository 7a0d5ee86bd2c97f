// Acceptance criteria 1-9. Each prints one PASS/FAIL line; `--criterion N`
// runs a single one. Expected values come from oracles written here, not
// from the library code under test.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tltt/tltt.hpp"
#include "tltt/lab/experiments.hpp"

namespace fs = std::filesystem;
using namespace tltt;

namespace {

const fs::path kRoot = TLTT_SOURCE_DIR;

struct Verdict {
  bool pass;
  std::string detail;
};

// ---------------------------------------------------------------- criterion 1

Verdict rule_coverage() {
  // The rule names of the object theory, with whether each one restricts
  // something the kernel must reject.
  const std::vector<std::pair<std::string, bool>> rules = {
      {"FIB-PRE", true},  {"PI-FIB", true},   {"SIGMA-FIB", true}, {"INTRO-=", true},  {"ELIM-=", true},
      {"FORM-+", true},   {"ELIM-+", true},   {"ELIM-N", true},    {"ELIM-0", true},   {"CUMUL", true},
      {"FORM-=s", false}, {"INTRO-=s", false}, {"ELIM-=s", false}, {"UIP", false},     {"FUNEXT", false},
      {"FORM-+s", false}, {"ELIM-+s", false}, {"ELIM-Ns", false},  {"ELIM-0s", false}, {"ELIM-1", false},
      {"INTRO-+", false}, {"INTRO-+s", false}, {"COMP-=", false},  {"COMP-=s", false}, {"COMP-N", false},
      {"COMP-Ns", false}, {"COMP-+", false},  {"COMP-+s", false},  {"COMP-1", false}};
  auto report = corpus::run_directory(kRoot);
  std::vector<std::string> missing;
  for (const auto& [name, restricted] : rules) {
    auto it = report.coverage.find(name);
    if (it == report.coverage.end() || it->second.accepted.empty()) missing.push_back(name + " accepted");
    if (restricted && (it == report.coverage.end() || it->second.rejected.empty()))
      missing.push_back(name + " rejected");
  }
  std::set<std::string> catalog;
  for (const auto& r : corpus::tracked_rules()) catalog.insert(r.name);
  for (const auto& [name, restricted] : rules)
    if (!catalog.count(name)) missing.push_back(name + " absent from the tracked catalog");

  std::string cmd = std::string("\"") + TLTT_CLI + "\" corpus run \"" + kRoot.string() + "\" > /dev/null 2>&1";
  int status = std::system(cmd.c_str());
  bool cli_ok = status == 0;

  std::ostringstream d;
  d << rules.size() << " rules, " << report.files.size() << " files, " << report.count(DeclStatus::Passed)
    << " accepted and " << report.count(DeclStatus::Rejected) << " expected rejections; corpus run exit "
    << (cli_ok ? "0" : "nonzero");
  if (!report.files_ok()) d << "; file errors present";
  for (const auto& m : missing) d << "; missing " << m;
  return {missing.empty() && report.files_ok() && cli_ok, d.str()};
}

// ---------------------------------------------------------------- criterion 2

struct ReplacementRun {
  bool ok;
  bool thm_checked;
};

ReplacementRun check_replacement(const KernelOptions& mutated) {
  Environment env;
  for (const char* f : {"base.tltt", "finite.tltt"}) {
    auto m = corpus::check_file(kRoot / "prelude" / f, env, {});
    if (!m.ok()) return {false, false};
    env = m.env;
  }
  CheckOptions opts{mutated, true};
  auto m = corpus::check_file(kRoot / "prelude" / "replacement.tltt", env, opts);
  bool thm = false;
  for (const auto& d : m.decls)
    if (d.name == "thm" && d.status == DeclStatus::Passed) thm = true;
  return {m.ok(), thm};
}

Verdict replacement_module() {
  auto normal = check_replacement({});
  KernelOptions no_uip;
  no_uip.enable_uip = false;
  KernelOptions no_beta;
  no_beta.beta_js = false;
  auto without_uip = check_replacement(no_uip);
  auto without_beta = check_replacement(no_beta);

  // The theorem's statement, read independently of the module.
  bool statement = false;
  {
    Environment env;
    for (const char* f : {"base.tltt", "finite.tltt", "replacement.tltt"}) {
      auto m = corpus::check_file(kRoot / "prelude" / f, env, {});
      env = m.env;
    }
    if (auto e = env.find("thm")) {
      Resolver res(env.names());
      auto expected = res.term(tltt::syntax::parse_term("Pi (A : U 0), isSet A"));
      statement = alpha_equal(e->type, expected);
    }
  }
  bool pass = normal.ok && normal.thm_checked && statement && !without_uip.thm_checked && !without_beta.thm_checked;
  std::ostringstream d;
  d << "replacement module " << (normal.ok && normal.thm_checked ? "checks" : "does NOT check")
    << "; statement " << (statement ? "matches" : "differs") << "; without uip thm "
    << (without_uip.thm_checked ? "still checks" : "is rejected") << "; without strict J computation thm "
    << (without_beta.thm_checked ? "still checks" : "is rejected");
  return {pass, d.str()};
}

// ---------------------------------------------------------------- criterion 3

/// Sets of the spine sieve: subsets of some {i, i+1}.
std::set<simplex::Mask> spine_oracle(unsigned n) {
  std::set<simplex::Mask> out{0};
  for (unsigned i = 0; i <= n; ++i) out.insert(simplex::Mask{1} << i);
  for (unsigned i = 0; i < n; ++i) out.insert((simplex::Mask{1} << i) | (simplex::Mask{1} << (i + 1)));
  return out;
}

std::string replay(const simplex::HornFactorization& h) {
  using simplex::Mask;
  const unsigned n = h.n;
  const Mask top = (Mask{1} << (n + 1)) - 1;
  std::set<Mask> cur;
  for (Mask s = 0; s <= top; ++s) cur.insert(s);
  cur.erase(top);
  cur.erase(top & ~(Mask{1} << h.k));
  for (std::size_t i = 0; i < h.steps.size(); ++i) {
    const auto& st = h.steps[i];
    Mask s = st.removed;
    if (!cur.count(s)) return "step " + std::to_string(i) + " removes a missing set";
    for (unsigned v = 0; v <= n; ++v)
      if (!(s >> v & 1U) && cur.count(s | (Mask{1} << v))) return "step " + std::to_string(i) + " removes a non-maximal set";
    if (!(s >> st.apex & 1U)) return "step " + std::to_string(i) + " apex outside the set";
    cur.erase(s);
    cur.erase(s & ~(Mask{1} << st.apex));
    for (Mask m : cur)
      for (unsigned v = 0; v <= n; ++v)
        if ((m >> v & 1U) && !cur.count(m & ~(Mask{1} << v))) return "step " + std::to_string(i) + " leaves a non-sieve";
    unsigned lo = static_cast<unsigned>(__builtin_ctz(s));
    unsigned hi = 31U - static_cast<unsigned>(__builtin_clz(s));
    bool inner = st.apex != lo && st.apex != hi;
    if (h.k > 0 && h.k < n && !inner) return "step " + std::to_string(i) + " is outer in an inner factorization";
  }
  if (cur != spine_oracle(n)) return "chain does not end at the spine";
  return "";
}

Verdict horn_factorization() {
  std::size_t cases = 0, count_mismatch = 0, invalid = 0, undefined = 0;
  std::ostringstream notes;
  for (unsigned n = 1; n <= 6; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      ++cases;
      const long long expected = (1LL << (n + 1)) - 2LL * n - 4;
      if (!simplex::horn_factor_defined(n, k)) {
        ++undefined;
        notes << " (" << n << "," << k << "):no-factorization";
        continue;
      }
      auto h = simplex::factor_spine_to_horn(n, k);
      std::string why = replay(h);
      if (!why.empty()) {
        ++invalid;
        notes << " (" << n << "," << k << "):" << why;
      }
      if (static_cast<long long>(h.steps.size()) != expected) {
        ++count_mismatch;
        if (n == 3 || n == 6)
          notes << " (" << n << "," << k << "):length " << h.steps.size() << " vs " << expected << ", cells removed "
                << h.cells_removed();
      }
    }
  std::ostringstream d;
  d << cases << " (n,k) pairs: " << invalid << " invalid chains, " << undefined << " without a factorization, "
    << count_mismatch << " with length != 2^(n+1)-2n-4;" << notes.str()
    << ". Every step removes two cells, so the chain has 2^n-n-2 steps and 2^(n+1)-2n-4 counts the cells removed;"
    << " for n = 1 and the outer horns at n = 2 the horn does not contain the spine";
  return {invalid == 0 && undefined == 0 && count_mismatch == 0, d.str()};
}

// ---------------------------------------------------------------- criterion 4

/// Compatible tuples (y_0..y_n) of (n-1)-cells with d_i y_j = d_{j-1} y_i.
std::size_t boundary_oracle(const simplex::FiniteSemiSimplicialSet& x, unsigned n) {
  if (n == 0) return 1;
  if (n == 1) return x.size(0) * x.size(0);
  std::size_t count = 0;
  std::vector<std::size_t> y(n + 1, 0);
  std::function<void(unsigned)> rec = [&](unsigned j) {
    if (j == n + 1) {
      ++count;
      return;
    }
    for (std::size_t v = 0; v < x.size(n - 1); ++v) {
      y[j] = v;
      bool ok = true;
      for (unsigned i = 0; ok && i < j; ++i) ok = x.face(n - 1, i, y[j]) == x.face(n - 1, j - 1, y[i]);
      if (ok) rec(j + 1);
    }
  };
  rec(0);
  return count;
}

std::map<std::string, simplex::FiniteSemiSimplicialSet> simplicial_fixtures(unsigned levels) {
  std::map<std::string, simplex::FiniteSemiSimplicialSet> out;
  for (const char* f : {"simplex3", "hollow_triangle", "non_segal", "poset3", "involution", "parallel"}) {
    auto j = diagram::read_json_file((kRoot / "fixtures" / (std::string(f) + ".json")).string());
    out.emplace(f, diagram::parse_simplicial_source(j, levels));
  }
  return out;
}

Verdict yoneda_boundary() {
  std::size_t checks = 0;
  std::vector<std::string> failures;
  for (const auto& [name, x] : simplicial_fixtures(3)) {
    for (unsigned n = 0; n <= std::min<std::size_t>(3, x.truncation()); ++n) {
      ++checks;
      auto r = diagram::yoneda_level(x, n);
      std::size_t oracle = boundary_oracle(x, n);
      if (!r.ok() || r.nat_simplex != x.size(n) || r.matching != oracle || r.nat_boundary != oracle)
        failures.push_back(name + "@" + std::to_string(n) + " (" + std::to_string(r.nat_boundary) + "/" +
                           std::to_string(r.matching) + " vs " + std::to_string(oracle) + ") " + r.witness);
    }
  }
  std::ostringstream d;
  d << checks << " (fixture, level) pairs with n <= 3";
  for (const auto& f : failures) d << "; " << f;
  return {failures.empty(), d.str()};
}

// ---------------------------------------------------------------- criterion 5

/// Counts compatible families by running through the whole product.
std::optional<std::size_t> product_oracle(const diagram::SetDiagram& x, std::size_t limit) {
  const auto& c = x.base();
  std::size_t total = 1;
  for (std::size_t o = 0; o < c.object_count(); ++o) {
    if (x.size(o) == 0) return 0;
    total *= x.size(o);
    if (total > limit) return std::nullopt;
  }
  std::size_t count = 0;
  std::vector<std::size_t> v(c.object_count(), 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    std::size_t r = idx;
    for (std::size_t o = 0; o < c.object_count(); ++o) {
      v[o] = r % x.size(o);
      r /= x.size(o);
    }
    bool ok = true;
    for (std::size_t f = 0; ok && f < c.arrow_count(); ++f) ok = x.apply(f, v[c.arrow(f).src]) == v[c.arrow(f).dst];
    count += ok;
  }
  return count;
}

Verdict limit_oracle() {
  std::size_t passed = 0, brute = 0, nonempty = 0;
  std::vector<std::string> failures;
  for (std::uint64_t s = 0; s < 200; ++s) {
    std::uint64_t seed = lab::kDefaultSeed + s;
    diagram::Rng rng(seed);
    auto cat = diagram::random_inverse_category(rng, diagram::limit_bounds());
    auto x = diagram::random_diagram(cat, rng, 4);
    bool bounds = cat->object_count() <= 5 && x.functoriality().ok && diagram::validate_inverse(*cat).ok;
    for (std::size_t a = 0; a < cat->object_count(); ++a) {
      bounds = bounds && x.size(a) <= 4;
      for (std::size_t b = 0; b < cat->object_count(); ++b) bounds = bounds && cat->hom(a, b).size() <= 3;
    }
    auto direct = diagram::limit_direct(x);
    auto rec = diagram::limit_recursive(x);
    std::string why = diagram::compare_limits(rec, direct);
    auto oracle = product_oracle(x, 200000);
    if (oracle) {
      ++brute;
      if (*oracle != direct.size()) why += " product count " + std::to_string(*oracle);
    }
    nonempty += !direct.empty();
    if (why.empty() && bounds)
      ++passed;
    else
      failures.push_back("seed " + std::to_string(seed) + (bounds ? "" : " out of bounds") + " " + why);
  }
  std::ostringstream d;
  d << passed << "/200 seeds bijective (" << nonempty << " non-empty limits, " << brute
    << " also counted through the full product)";
  for (const auto& f : failures) d << "; " << f;
  return {passed == 200, d.str()};
}

// ---------------------------------------------------------------- criterion 6

Verdict exponential_identity() {
  std::size_t passed = 0;
  std::vector<std::string> failures;
  for (std::uint64_t s = 0; s < 100; ++s) {
    diagram::Rng rng(lab::kDefaultSeed + s);
    auto p = diagram::random_pair(rng);
    auto r = lab::exponential_check(p.f, p.g);
    if (r.problem.empty() && r.limit == r.nat)
      ++passed;
    else
      failures.push_back("seed " + std::to_string(lab::kDefaultSeed + s) + ": " + r.problem);
  }
  // The fixture: Nat(2-spine, nerve) is the set of composable pairs of
  // arrows in 0 < 1 < 2, i.e. weakly increasing triples: C(5, 3) = 10.
  auto pair = diagram::parse_diagram_pair(diagram::read_json_file((kRoot / "fixtures" / "spine_nerve.json").string()));
  auto r = lab::exponential_check(pair.f, pair.g);
  bool fixture = r.problem.empty() && r.limit == 10 && r.nat == 10;
  std::ostringstream d;
  d << passed << "/100 random pairs; spine/nerve fixture |lim [F,G]| = " << r.limit << ", |Nat(F,G)| = " << r.nat
    << " (expected 10)";
  if (!r.problem.empty()) d << " " << r.problem;
  for (const auto& f : failures) d << "; " << f;
  return {passed == 100 && fixture, d.str()};
}

// ---------------------------------------------------------------- criterion 7

Verdict segal_fixtures() {
  std::vector<std::string> failures;
  auto fx = simplicial_fixtures(4);
  // Weakly increasing sequences of length k+1 in three elements: C(k+3, 2).
  const std::vector<std::size_t> poset_sizes = {3, 6, 10, 15, 21};
  if (fx.at("poset3").sizes() != poset_sizes) failures.push_back("poset nerve sizes differ");
  for (const char* name : {"poset3", "involution", "parallel"}) {
    const auto& x = fx.at(name);
    for (unsigned n = 0; n <= 4; ++n)
      if (!diagram::segal_check(x, n).ok()) failures.push_back(std::string(name) + " fails at " + std::to_string(n));
  }
  const auto& bad = fx.at("non_segal");
  int first = -1;
  for (unsigned n = 0; n <= bad.truncation(); ++n)
    if (!diagram::segal_check(bad, n).ok()) {
      first = static_cast<int>(n);
      break;
    }
  if (first != 2) failures.push_back("doctored fixture first fails at " + std::to_string(first));
  std::ostringstream d;
  d << "poset nerve sizes";
  for (auto s : fx.at("poset3").sizes()) d << " " << s;
  d << "; three nerves checked at levels 0-4; doctored fixture first fails at level " << first;
  for (const auto& f : failures) d << "; " << f;
  return {failures.empty(), d.str()};
}

// ---------------------------------------------------------------- criterion 8

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

/// Both counts in closed form: chains i_0..i_n weighted by the number of maps
/// along the chain, with either a point of the first set (B) or a point in
/// every set preserved by the maps (A).
std::pair<std::size_t, std::size_t> pointed_oracle(const std::vector<std::size_t>& cards, unsigned n) {
  std::size_t a = 0, b = 0;
  std::vector<std::size_t> idx(n + 1, 0);
  for (;;) {
    std::size_t maps = 1, pointed = 1;
    for (unsigned t = 0; t < n; ++t) {
      maps *= power(cards[idx[t + 1]], cards[idx[t]]);
      pointed *= cards[idx[t]] == 0 ? 0 : power(cards[idx[t + 1]], cards[idx[t]] - 1);
    }
    std::size_t points = 1;
    for (unsigned t = 0; t <= n; ++t) points *= cards[idx[t]];
    b += cards[idx[0]] * maps;
    a += points * pointed;
    unsigned p = 0;
    while (p <= n && ++idx[p] == cards.size()) idx[p++] = 0;
    if (p > n) break;
  }
  return {a, b};
}

Verdict pointed_nerve() {
  const std::vector<std::vector<std::size_t>> universes = {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}, {1, 1}, {2, 2}};
  std::size_t checks = 0;
  std::vector<std::string> failures;
  for (const auto& u : universes) {
    auto reports = diagram::pointed_nerve_counts(u, 3);
    for (const auto& r : reports) {
      ++checks;
      auto [a, b] = pointed_oracle(u, r.level);
      if (!r.ok() || r.count_a != a || r.count_b != b) {
        std::ostringstream f;
        f << "universe";
        for (auto c : u) f << " " << c;
        f << " level " << r.level << ": " << r.count_a << "/" << r.count_b << " vs " << a << "/" << b << " " << r.witness;
        failures.push_back(f.str());
      }
    }
  }
  std::ostringstream d;
  d << checks << " (universe, level) pairs with cardinalities <= 2 and n <= 3, bijection and face naturality verified";
  for (const auto& f : failures) d << "; " << f;
  return {failures.empty(), d.str()};
}

// ---------------------------------------------------------------- criterion 9

/// Element count over the point: level 0 picks |X_0| = s, level 1 picks a set
/// for each of the s^2 pairs of vertices.
std::size_t classifier_oracle(unsigned n, std::size_t c) {
  if (n == 0) return 1;
  if (n == 1) return c + 1;
  std::size_t total = 0;
  for (std::size_t s = 0; s <= c; ++s) total += power(c + 1, s * s);
  return total;
}

Verdict classifier() {
  std::vector<std::string> failures;
  std::size_t round_trips = 0;
  std::size_t d0 = 0, d1 = 0;
  for (unsigned n = 0; n <= 2; ++n)
    for (std::size_t c = 0; c <= 2; ++c) {
      auto base = diagram::constant_diagram(lab::classifier_base(n), 1);
      auto els = diagram::classifier_build(base, n, c);
      if (n == 0 && c == 1) d0 = els.size();
      if (n == 1 && c == 1) d1 = els.size();
      if (els.size() != classifier_oracle(n, c))
        failures.push_back("n=" + std::to_string(n) + " c=" + std::to_string(c) + ": " + std::to_string(els.size()) +
                           " elements, expected " + std::to_string(classifier_oracle(n, c)));
      for (const auto& e : els) {
        auto r = diagram::round_trip(base, e);
        if (r.ok())
          ++round_trips;
        else
          failures.push_back("round trip: " + r.witness);
      }
    }
  std::ostringstream d;
  d << "|D_0(1)| = " << d0 << ", |D_1(1)| over a two-set universe = " << d1 << ", " << round_trips
    << " round trips verified for n <= 2 and cardinalities <= 2";
  for (const auto& f : failures) d << "; " << f;
  return {failures.empty() && d0 == 1 && d1 == 2, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"rule coverage", rule_coverage},
      {"fibrant replacement module", replacement_module},
      {"horn factorization", horn_factorization},
      {"Yoneda and boundary", yoneda_boundary},
      {"limit oracle equivalence", limit_oracle},
      {"exponential identity", exponential_identity},
      {"Segal", segal_fixtures},
      {"pointed nerve", pointed_nerve},
      {"classifier", classifier}};

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "criterion must be between 1 and " << criteria.size() << "\n";
    return 2;
  }
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    auto start = std::chrono::steady_clock::now();
    Verdict v{false, ""};
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << " (" << criteria[i].first << ", "
              << std::fixed << std::setprecision(2) << secs << " s): " << v.detail << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
