#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace tltt::simplex {

/// Upper bound on the ambient dimension for anything enumerated extensionally.
inline constexpr unsigned kMaxDim = 12;

/// A subset of {0..n} as a bit mask.
using Mask = std::uint32_t;

inline unsigned popcount(Mask m) { return static_cast<unsigned>(std::popcount(m)); }
inline Mask full_mask(unsigned n) { return (Mask{1} << (n + 1)) - 1; }
inline bool contains(Mask m, unsigned i) { return (m >> i) & 1U; }
inline unsigned min_elem(Mask m) { return static_cast<unsigned>(std::countr_zero(m)); }
inline unsigned max_elem(Mask m) { return 31U - static_cast<unsigned>(std::countl_zero(m)); }

/// Interval {a..b}.
inline Mask interval(unsigned a, unsigned b) { return full_mask(b) & ~((Mask{1} << a) - 1); }

inline std::vector<unsigned> elements(Mask m) {
  std::vector<unsigned> out;
  for (unsigned i = 0; m >> i; ++i)
    if (contains(m, i)) out.push_back(i);
  return out;
}

inline Mask mask_of(const std::vector<unsigned>& xs) {
  Mask m = 0;
  for (unsigned x : xs) m |= Mask{1} << x;
  return m;
}

/// `i` belongs to `m` and is neither its minimum nor its maximum.
inline bool internal(Mask m, unsigned i) {
  return contains(m, i) && i != min_elem(m) && i != max_elem(m);
}

/// Lexicographic order on the increasing element sequences of two masks.
inline bool lex_less(Mask a, Mask b) {
  auto ea = elements(a);
  auto eb = elements(b);
  return ea < eb;
}

inline std::string to_string_mask(Mask m) {
  std::string s = "{";
  bool first = true;
  for (unsigned x : elements(m)) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + "}";
}

/// A strictly increasing map [k] -> [n], stored as its image.
class MonotoneMap {
 public:
  MonotoneMap(unsigned codomain, std::vector<unsigned> image)
      : n_(codomain), image_(std::move(image)) {
    if (image_.empty()) throw std::invalid_argument("monotone map needs a non-empty domain");
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (image_[i] > n_) throw std::invalid_argument("monotone map value out of range");
      if (i > 0 && image_[i] <= image_[i - 1])
        throw std::invalid_argument("monotone map is not strictly increasing");
    }
  }

  static MonotoneMap from_mask(unsigned codomain, Mask m) {
    return MonotoneMap(codomain, elements(m));
  }

  static MonotoneMap identity(unsigned n) { return from_mask(n, full_mask(n)); }

  /// The coface [n-1] -> [n] that skips `i`.
  static MonotoneMap coface(unsigned n, unsigned i) {
    if (n == 0 || i > n) throw std::invalid_argument("coface index out of range");
    return from_mask(n, full_mask(n) & ~(Mask{1} << i));
  }

  unsigned codomain() const { return n_; }
  unsigned domain() const { return static_cast<unsigned>(image_.size() - 1); }
  const std::vector<unsigned>& image() const { return image_; }
  Mask mask() const { return mask_of(image_); }
  unsigned operator()(unsigned i) const { return image_.at(i); }

  friend bool operator==(const MonotoneMap&, const MonotoneMap&) = default;
  friend bool operator<(const MonotoneMap& a, const MonotoneMap& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.image_ < b.image_;
  }

 private:
  unsigned n_;
  std::vector<unsigned> image_;
};

/// g after f, for f : [k] -> [m] and g : [m] -> [n].
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (f.codomain() != g.domain())
    throw std::invalid_argument("cannot compose: codomain [" + std::to_string(f.codomain()) +
                                "] differs from domain [" + std::to_string(g.domain()) + "]");
  std::vector<unsigned> img;
  img.reserve(f.image().size());
  for (unsigned x : f.image()) img.push_back(g(x));
  return MonotoneMap(g.codomain(), std::move(img));
}

/// All maps [k] -> [n] in lexicographic order of their images.
inline std::vector<MonotoneMap> enumerate_homs(unsigned n, unsigned k) {
  std::vector<MonotoneMap> out;
  if (k > n) return out;
  std::vector<unsigned> cur(k + 1);
  for (unsigned i = 0; i <= k; ++i) cur[i] = i;
  for (;;) {
    out.emplace_back(n, cur);
    int i = static_cast<int>(k);
    while (i >= 0 && cur[i] == n - k + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++cur[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j <= k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace tltt::simplex
