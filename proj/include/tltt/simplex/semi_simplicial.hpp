#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "tltt/simplex/mono.hpp"

namespace tltt::simplex {

/// A finite semi-simplicial set truncated at level N: finite sets X_0..X_N
/// (elements are indices) with face maps d_i : X_k -> X_{k-1}, 0 <= i <= k.
class FiniteSemiSimplicialSet {
 public:
  using FaceMap = std::vector<std::size_t>;

  /// `faces[k][i]` is d_i on level k; `faces[0]` must be empty.
  FiniteSemiSimplicialSet(std::vector<std::size_t> sizes, std::vector<std::vector<FaceMap>> faces)
      : sizes_(std::move(sizes)), faces_(std::move(faces)) {
    if (sizes_.empty()) throw std::invalid_argument("need at least level 0");
    if (faces_.size() != sizes_.size()) throw std::invalid_argument("face table has wrong length");
    if (!faces_[0].empty()) throw std::invalid_argument("level 0 has no faces");
    for (std::size_t k = 1; k < sizes_.size(); ++k) {
      if (faces_[k].size() != k + 1)
        throw std::invalid_argument("level " + std::to_string(k) + " needs " +
                                    std::to_string(k + 1) + " face maps");
      for (std::size_t i = 0; i <= k; ++i) {
        if (faces_[k][i].size() != sizes_[k])
          throw std::invalid_argument("face map d" + std::to_string(i) + " on level " +
                                      std::to_string(k) + " has wrong length");
        for (std::size_t v : faces_[k][i])
          if (v >= sizes_[k - 1])
            throw std::invalid_argument("face map value out of range on level " +
                                        std::to_string(k));
      }
    }
    if (auto err = identity_violation(); !err.empty()) throw std::invalid_argument(err);
  }

  std::size_t truncation() const { return sizes_.size() - 1; }
  std::size_t size(std::size_t k) const { return sizes_.at(k); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

  std::size_t face(std::size_t k, std::size_t i, std::size_t x) const {
    return faces_.at(k).at(i).at(x);
  }
  const std::vector<std::vector<FaceMap>>& faces() const { return faces_; }

  /// Restriction of x in X_k along the map [m] -> [k] with image `s`:
  /// the missing vertices are deleted from the top down.
  std::size_t restrict(std::size_t k, std::size_t x, Mask s) const {
    std::size_t level = k;
    for (unsigned i = static_cast<unsigned>(k) + 1; i-- > 0;) {
      if (contains(s, i)) continue;
      x = face(level, i, x);
      --level;
    }
    return x;
  }

  /// Empty if d_i d_j = d_{j-1} d_i holds for all i < j, else a witness.
  std::string identity_violation() const {
    for (std::size_t k = 2; k < sizes_.size(); ++k)
      for (std::size_t j = 1; j <= k; ++j)
        for (std::size_t i = 0; i < j; ++i)
          for (std::size_t x = 0; x < sizes_[k]; ++x)
            if (face(k - 1, i, face(k, j, x)) != face(k - 1, j - 1, face(k, i, x)))
              return "semi-simplicial identity d" + std::to_string(i) + " d" + std::to_string(j) +
                     " = d" + std::to_string(j - 1) + " d" + std::to_string(i) +
                     " fails on level " + std::to_string(k) + " at element " + std::to_string(x);
    return "";
  }

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::vector<FaceMap>> faces_;
};

}  // namespace tltt::simplex
