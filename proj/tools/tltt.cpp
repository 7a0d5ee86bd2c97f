#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tltt/corpus/corpus.hpp"
#include "tltt/lab/experiments.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  std::uint64_t seed = tltt::lab::kDefaultSeed;
  unsigned max_dim = tltt::simplex::kMaxDim;
};

int emit(const Globals& g, const tltt::lab::Outcome& o) {
  if (g.json) {
    std::cout << o.report.dump(2) << "\n";
  } else {
    for (const auto& l : o.lines) std::cout << l << "\n";
    std::cout << (o.ok ? "PASS" : "FAIL") << "\n";
  }
  return o.ok ? kOk : kFailed;
}

unsigned max_dim_from_env() {
  const char* v = std::getenv("TLTT_MAX_DIM");
  if (!v || !*v) return tltt::simplex::kMaxDim;
  try {
    std::size_t used = 0;
    unsigned long n = std::stoul(v, &used);
    if (used != std::string(v).size()) throw std::invalid_argument(v);
    return static_cast<unsigned>(n);
  } catch (const std::exception&) {
    throw UsageError(std::string("TLTT_MAX_DIM is not a number: ") + v);
  }
}

void require_dim(const Globals& g, unsigned n, const std::string& what) {
  if (n > g.max_dim)
    throw UsageError(what + " " + std::to_string(n) + " exceeds the dimension guard " + std::to_string(g.max_dim));
}

json load_fixture(const std::string& path) {
  try {
    return tltt::diagram::read_json_file(path);
  } catch (const tltt::diagram::FixtureError& e) {
    throw UsageError(e.what());
  }
}

int run_check(const Globals& g, const std::vector<std::string>& files, const std::string& prelude) {
  std::vector<fs::path> chained;
  if (!prelude.empty()) {
    if (!fs::is_directory(prelude)) throw UsageError("prelude directory not found: " + prelude);
    chained = tltt::corpus::tltt_files(prelude);
  }
  for (const auto& f : files) {
    if (!fs::is_regular_file(f)) throw UsageError("cannot read " + f);
    chained.emplace_back(f);
  }
  auto report = tltt::corpus::run(chained, {});
  if (g.json) {
    json out = tltt::corpus::to_json(report);
    out.erase("coverage");
    out.erase("coverage_gaps");
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& m : report.files) {
      std::size_t passed = 0, rejected = 0;
      for (const auto& d : m.decls) {
        passed += d.status == tltt::DeclStatus::Passed;
        rejected += d.status == tltt::DeclStatus::Rejected;
      }
      std::cout << (m.ok() ? "ok   " : "FAIL ") << m.file << " (" << passed << " accepted, " << rejected
                << " rejected as expected)\n";
      for (const auto& a : m.unused_axioms) std::cout << "     unused axiom: " << a << "\n";
    }
  }
  for (const auto& m : report.files)
    for (const auto& d : m.diagnostics()) std::cerr << d << "\n";
  return report.files_ok() ? kOk : kFailed;
}

int run_corpus(const Globals& g, const std::string& dir) {
  fs::path root(dir);
  if (!fs::is_directory(root / "prelude")) throw UsageError("no prelude directory under " + dir);
  auto report = tltt::corpus::run_directory(root);
  auto gaps = report.coverage_gaps();
  bool ok = report.files_ok() && gaps.empty();
  if (g.json) {
    json out = tltt::corpus::to_json(report);
    out["ok"] = ok;
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& m : report.files) std::cout << (m.ok() ? "ok   " : "FAIL ") << m.file << "\n";
    std::cout << "\nrule coverage (accepted / rejected sites):\n";
    for (const auto& rule : tltt::corpus::tracked_rules()) {
      auto it = report.coverage.find(rule.name);
      std::size_t a = it == report.coverage.end() ? 0 : it->second.accepted.size();
      std::size_t r = it == report.coverage.end() ? 0 : it->second.rejected.size();
      std::string first = it != report.coverage.end() && !it->second.accepted.empty() ? it->second.accepted.front() : "-";
      std::cout << "  " << rule.name << std::string(rule.name.size() < 10 ? 10 - rule.name.size() : 1, ' ') << a
                << " / " << r << (rule.restricted ? " (restricted)" : "") << "  e.g. " << first << "\n";
    }
    for (const auto& gap : gaps) std::cout << "gap: " << gap << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
  }
  for (const auto& m : report.files)
    for (const auto& d : m.diagnostics()) std::cerr << d << "\n";
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-level type theory checker and combinatorics lab", "tltt"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  std::optional<unsigned> max_dim_flag;
  app.add_flag("--json", g.json, "Print one JSON document on standard output");
  app.add_option("--seed", g.seed, "Seed for random instances");
  app.add_option("--max-dim", max_dim_flag, "Dimension guard (default: TLTT_MAX_DIM or 12)");

  auto* check = app.add_subcommand("check", "Type-check files in order, each seeing the previous ones");
  std::vector<std::string> files;
  std::string prelude;
  check->add_option("files", files, "Source files")->required();
  check->add_option("--prelude", prelude, "Directory of files checked first");

  auto* corpus = app.add_subcommand("corpus", "Corpus operations");
  corpus->require_subcommand(1);
  auto* corpus_run = corpus->add_subcommand("run", "Check the prelude and test corpus with rule coverage");
  std::string corpus_dir = ".";
  corpus_run->add_option("dir", corpus_dir, "Root containing prelude/ and tests/");

  auto* lab = app.add_subcommand("lab", "Combinatorial experiments");
  lab->require_subcommand(1);

  auto* horn = lab->add_subcommand("horn-factor", "Factor a spine inclusion through horn removals");
  unsigned horn_n = 0, horn_k = 0;
  horn->add_option("--n", horn_n, "Dimension")->required();
  horn->add_option("--k", horn_k, "Horn index")->required();

  auto* yon = lab->add_subcommand("yoneda", "Compare natural transformations out of simplices and boundaries");
  std::string yon_fixture;
  unsigned yon_levels = 3;
  yon->add_option("--fixture", yon_fixture, "Semi-simplicial set fixture")->required();
  yon->add_option("--levels", yon_levels, "Highest level checked");

  auto* lim = lab->add_subcommand("limits", "Compare the recursive and direct limits on random diagrams");
  std::size_t lim_seeds = 200;
  lim->add_option("--seeds", lim_seeds, "Number of consecutive seeds");

  auto* seg = lab->add_subcommand("segal", "Check the Segal condition level by level");
  std::string seg_fixture;
  unsigned seg_levels = 4;
  seg->add_option("--fixture", seg_fixture, "Category or semi-simplicial set fixture")->required();
  seg->add_option("--levels", seg_levels, "Highest level checked");

  auto* cls = lab->add_subcommand("classifier", "Enumerate the truncated classifier and check round trips");
  unsigned cls_n = 0;
  std::size_t cls_card = 1, cls_base = 1;
  cls->add_option("--n", cls_n, "Truncation")->required();
  cls->add_option("--max-card", cls_card, "Largest set in the universe");
  cls->add_option("--base-size", cls_base, "Size of the constant base diagram");

  auto* expo = lab->add_subcommand("exponential", "Compare the limit of [F,G] with Nat(F,G)");
  std::string expo_fixture;
  std::optional<std::size_t> expo_seeds;
  expo->add_option("--fixture", expo_fixture, "Fixture with base, F and G");
  expo->add_option("--seeds", expo_seeds, "Number of random pairs");

  auto* pn = lab->add_subcommand("pointed-nerve", "Compare pointed chains with chains carrying a point");
  std::vector<std::size_t> pn_universe{1, 2};
  unsigned pn_levels = 3;
  pn->add_option("--universe", pn_universe, "Cardinalities of the sets in the universe")->delimiter(',');
  pn->add_option("--levels", pn_levels, "Highest level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    g.max_dim = max_dim_flag ? *max_dim_flag : max_dim_from_env();
    if (g.max_dim > tltt::simplex::kMaxDim)
      throw UsageError("dimension guard cannot exceed " + std::to_string(tltt::simplex::kMaxDim));

    if (*check) return run_check(g, files, prelude);
    if (*corpus_run) return run_corpus(g, corpus_dir);

    if (*horn) {
      if (horn_k > horn_n) throw UsageError("k must lie in [0, n]");
      require_dim(g, horn_n, "dimension");
      return emit(g, tltt::lab::horn_factor(horn_n, horn_k));
    }
    if (*yon) {
      require_dim(g, yon_levels, "level");
      auto x = tltt::diagram::parse_simplicial_source(load_fixture(yon_fixture), yon_levels);
      return emit(g, tltt::lab::yoneda(x, yon_levels));
    }
    if (*lim) return emit(g, tltt::lab::limits(g.seed, lim_seeds));
    if (*seg) {
      require_dim(g, seg_levels, "level");
      if (seg_levels > 6) throw UsageError("nerves are limited to 6 levels");
      auto x = tltt::diagram::parse_simplicial_source(load_fixture(seg_fixture), seg_levels);
      return emit(g, tltt::lab::segal(x, seg_levels));
    }
    if (*cls) {
      require_dim(g, cls_n, "truncation");
      return emit(g, tltt::lab::classifier(cls_n, cls_card, cls_base));
    }
    if (*expo) {
      if (expo_fixture.empty() && !expo_seeds) throw UsageError("exponential needs --fixture or --seeds");
      if (!expo_fixture.empty()) {
        auto pair = tltt::diagram::parse_diagram_pair(load_fixture(expo_fixture));
        auto o = tltt::lab::exponential_pair(pair.f, pair.g);
        if (!expo_seeds) return emit(g, o);
        auto r = tltt::lab::exponential_random(g.seed, *expo_seeds);
        tltt::lab::Outcome both{{{"fixture", o.report}, {"random", r.report}, {"ok", o.ok && r.ok}}, o.ok && r.ok, o.lines};
        both.lines.insert(both.lines.end(), r.lines.begin(), r.lines.end());
        return emit(g, both);
      }
      return emit(g, tltt::lab::exponential_random(g.seed, *expo_seeds));
    }
    if (*pn) {
      if (pn_levels > 4) throw UsageError("pointed nerve levels are limited to 4");
      return emit(g, tltt::lab::pointed(pn_universe, pn_levels));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const tltt::diagram::FixtureError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const json::exception& e) {
    std::cerr << "error: malformed fixture: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
