#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tltt/core/term.hpp"

namespace tltt {

struct GlobalEntry {
  std::string name;
  TermPtr type;
  TermPtr value;  // null for axioms
  Pos pos;
  std::string file;
};

/// Immutable table of checked globals. `extend` returns a new environment.
class Environment {
 public:
  const GlobalEntry* find(const std::string& name) const {
    auto it = entries_.find(name);
    return it == entries_.end() ? nullptr : it->second.get();
  }

  bool contains(const std::string& name) const { return entries_.count(name) != 0; }

  Environment extend(GlobalEntry entry) const {
    Environment next = *this;
    auto key = entry.name;
    next.entries_[key] = std::make_shared<const GlobalEntry>(std::move(entry));
    next.order_.push_back(key);
    return next;
  }

  std::set<std::string> names() const {
    std::set<std::string> out;
    for (const auto& [k, _] : entries_) out.insert(k);
    return out;
  }

  /// Declaration order.
  const std::vector<std::string>& order() const { return order_; }

  /// Globals reachable from `roots` through types and bodies.
  std::set<std::string> dependencies(const std::set<std::string>& roots) const {
    std::set<std::string> seen;
    std::vector<std::string> work(roots.begin(), roots.end());
    while (!work.empty()) {
      std::string n = work.back();
      work.pop_back();
      const GlobalEntry* e = find(n);
      if (e == nullptr || !seen.insert(n).second) continue;
      std::set<std::string> next;
      collect_globals(e->type, next);
      if (e->value) collect_globals(e->value, next);
      for (const auto& m : next)
        if (!seen.count(m)) work.push_back(m);
    }
    return seen;
  }

 private:
  std::map<std::string, std::shared_ptr<const GlobalEntry>> entries_;
  std::vector<std::string> order_;
};

}  // namespace tltt
