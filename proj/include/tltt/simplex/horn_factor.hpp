#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/simplex/sieve.hpp"

namespace tltt::simplex {

struct HornStep {
  Mask removed;   // the maximal member taken out
  unsigned apex;  // its vertex whose opposite face goes with it
  bool inner;     // apex is neither the minimum nor the maximum of `removed`
  Sieve after;
};

/// A chain of sieves from the horn down to the spine, one horn removal at a time.
struct HornFactorization {
  unsigned n;
  unsigned k;
  Sieve start;  // the horn sieve: powerset minus [0,n] and its k-th face
  std::vector<HornStep> steps;

  const Sieve& end() const { return steps.empty() ? start : steps.back().after; }

  /// Cells removed after the start, two per step.
  std::size_t cells_removed() const { return start.size() - end().size(); }
};

/// Members of the interval `v` in which `k` is internal, largest first and
/// lexicographically among equal sizes.
inline std::vector<Mask> internal_cosieve(Mask v, unsigned k) {
  std::vector<Mask> out;
  for (Mask s = v;; s = (s - 1) & v) {
    if (internal(s, k)) out.push_back(s);
    if (s == 0) break;
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
    return lex_less(a, b);
  });
  return out;
}

namespace detail {

class HornFactorizer {
 public:
  explicit HornFactorizer(Sieve start) : current_(std::move(start)) {}

  void remove(Mask s, unsigned h) {
    current_ = horn_remove(current_, s, h);
    steps_.push_back({s, h, internal(s, h), current_});
  }

  /// Removes every member of `order` at apex `k`.
  void remove_all(const std::vector<Mask>& order, unsigned k) {
    for (Mask s : order) remove(s, k);
  }

  /// From the principal sieve on the interval `v` down to its spine.
  void simplex_to_spine(Mask v) {
    if (popcount(v) <= 2) return;
    unsigned h = min_elem(v) + 1;
    remove(v, h);
    inner_tail(v, h);
  }

  /// Having removed `v` at the internal apex `k`, finishes the interval.
  void inner_tail(Mask v, unsigned k) {
    auto order = internal_cosieve(v, k);
    order.erase(order.begin());  // `v` itself
    remove_all(order, k);
    simplex_to_spine(interval(min_elem(v), k));
    simplex_to_spine(interval(k, max_elem(v)));
  }

  std::vector<HornStep> take_steps() { return std::move(steps_); }

 private:
  Sieve current_;
  std::vector<HornStep> steps_;
};

}  // namespace detail

/// True when the spine of dimension n is contained in the (n, k) horn, which
/// is exactly when a factorization exists.
inline bool horn_factor_defined(unsigned n, unsigned k) {
  if (k > n || n < 2) return false;
  return n >= 3 || k == 1;
}

/// Factors the spine inclusion into the (n, k) horn through horn removals.
/// Inner horns use only inner removals; outer ones use the cosieve of the
/// adjacent inner apex with one swapped step at the start.
inline HornFactorization factor_spine_to_horn(unsigned n, unsigned k) {
  if (n > kMaxDim) throw std::invalid_argument("dimension exceeds the guard");
  if (k > n) throw std::out_of_range("k must lie in [0, n]");
  if (!horn_factor_defined(n, k))
    throw std::domain_error("the spine of dimension " + std::to_string(n) +
                            " is not contained in the horn at " + std::to_string(k));

  Mask top = full_mask(n);
  Sieve start = horn_remove(Sieve::powerset(n), top, k);
  detail::HornFactorizer f(start);

  if (k > 0 && k < n) {
    f.inner_tail(top, k);
  } else {
    // Outer apex: follow the cosieve for the neighbouring inner apex, whose
    // first two removals coincide with the horn plus one outer removal.
    unsigned inner_apex = k == 0 ? n - 1 : 1;
    Mask second = k == 0 ? interval(1, n) : interval(0, n - 1);
    f.remove(top & ~(Mask{1} << inner_apex), k);
    auto order = internal_cosieve(top, inner_apex);
    order.erase(std::remove_if(order.begin(), order.end(),
                               [&](Mask s) { return s == top || s == second; }),
                order.end());
    f.remove_all(order, inner_apex);
    f.simplex_to_spine(interval(0, inner_apex));
    f.simplex_to_spine(interval(inner_apex, n));
  }
  return {n, k, std::move(start), f.take_steps()};
}

/// Re-checks a factorization from scratch. Returns an empty string when it
/// is valid, otherwise a description of the first problem.
inline std::string audit(const HornFactorization& h) {
  Sieve expected_start = horn_remove(Sieve::powerset(h.n), full_mask(h.n), h.k);
  if (!(h.start == expected_start)) return "start is not the horn sieve";
  const Sieve* prev = &h.start;
  bool inner_horn = h.k > 0 && h.k < h.n;
  for (std::size_t i = 0; i < h.steps.size(); ++i) {
    const auto& st = h.steps[i];
    std::string where = "step " + std::to_string(i) + ": ";
    if (!prev->is_maximal(st.removed)) return where + "removed set is not maximal";
    if (!contains(st.removed, st.apex)) return where + "apex not in removed set";
    std::set<Mask> expected = prev->members();
    expected.erase(st.removed);
    expected.erase(st.removed & ~(Mask{1} << st.apex));
    if (expected != st.after.members()) return where + "removal differs from a horn removal";
    if (prev->size() != st.after.size() + 2) return where + "did not remove exactly two sets";
    if (!st.after.is_downward_closed()) return where + "result is not a sieve";
    if (st.inner != internal(st.removed, st.apex)) return where + "inner flag is wrong";
    if (inner_horn && !st.inner) return where + "outer removal in an inner factorization";
    prev = &st.after;
  }
  if (!(*prev == Sieve::spine(h.n))) return "chain does not end at the spine sieve";
  return "";
}

}  // namespace tltt::simplex
