#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace tltt::diagram {

using Family = std::vector<std::size_t>;

/// A finite constraint network: cells with finite value ranges and links
/// demanding `fn[value(from)] == value(to)`. Its solutions are exactly the
/// limits and natural-transformation sets used throughout the lab.
struct FamilyProblem {
  struct Link {
    std::size_t from;
    std::size_t to;
    std::vector<std::size_t> fn;
  };

  std::vector<std::size_t> ranges;
  std::vector<Link> links;

  std::size_t add_cell(std::size_t range) {
    ranges.push_back(range);
    return ranges.size() - 1;
  }
  void link(std::size_t from, std::size_t to, std::vector<std::size_t> fn) {
    links.push_back({from, to, std::move(fn)});
  }
};

class FamilyCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// All solutions, enumerated by backtracking over the cells in `order`
/// (default: cell index order). Solutions come out in lexicographic order of
/// the assignment sequence.
inline std::vector<Family> solve(const FamilyProblem& p, std::vector<std::size_t> order = {},
                                 std::size_t cap = 2'000'000) {
  const std::size_t n = p.ranges.size();
  if (order.empty())
    for (std::size_t i = 0; i < n; ++i) order.push_back(i);
  if (order.size() != n) throw std::invalid_argument("order must list every cell once");

  std::vector<std::size_t> step_of(n, n);
  for (std::size_t s = 0; s < n; ++s) step_of.at(order[s]) = s;
  for (std::size_t s : step_of)
    if (s == n) throw std::invalid_argument("order must list every cell once");

  // Each link is checked at the step where its later endpoint is assigned.
  std::vector<std::vector<const FamilyProblem::Link*>> due(n);
  for (const auto& l : p.links) {
    if (l.from >= n || l.to >= n) throw std::out_of_range("link endpoint out of range");
    if (l.fn.size() != p.ranges[l.from]) throw std::invalid_argument("link function has wrong domain");
    due[std::max(step_of[l.from], step_of[l.to])].push_back(&l);
  }

  std::vector<Family> out;
  Family current(n, 0);
  auto rec = [&](auto& self, std::size_t step) -> void {
    if (step == n) {
      if (out.size() >= cap) throw FamilyCapExceeded("family enumeration exceeds the cap");
      out.push_back(current);
      return;
    }
    std::size_t cell = order[step];
    for (std::size_t v = 0; v < p.ranges[cell]; ++v) {
      current[cell] = v;
      bool ok = true;
      for (const auto* l : due[step])
        if (l->fn[current[l->from]] != current[l->to]) {
          ok = false;
          break;
        }
      if (ok) self(self, step + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace tltt::diagram
