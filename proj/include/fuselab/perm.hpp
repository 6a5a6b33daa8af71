#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace fuselab {

// A permutation of {0, ..., n-1}, stored as its image sequence.
// The image sequence is also the canonical encoding: comparisons are
// lexicographic on it, which makes the identity the least element of any
// permutation group (the first point moved by a non-identity permutation
// must map upward).
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
  }

  static Permutation from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<char> seen(n, 0);
    for (int v : images) {
      input_check(v >= 0 && v < n, "permutation image out of range");
      input_check(!seen[v], "permutation image sequence is not a bijection");
      seen[v] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  // cycles use 0-based points; unmentioned points are fixed
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    input_check(degree >= 1, "permutation degree must be at least 1");
    std::vector<int> images(degree);
    std::iota(images.begin(), images.end(), 0);
    std::vector<char> used(degree, 0);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int a = cyc[i];
        int b = cyc[(i + 1) % cyc.size()];
        input_check(a >= 0 && a < degree && b >= 0 && b < degree, "cycle point out of range");
        input_check(!used[a], "point repeated across cycles");
        used[a] = 1;
        images[a] = b;
      }
    }
    return from_images(std::move(images));
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (int i = 0; i < degree(); ++i)
      if (images_[i] != i) return false;
    return true;
  }

  // (a * b)(x) = a(b(x)): b acts first
  Permutation operator*(const Permutation& b) const {
    internal_check(degree() == b.degree(), "composed permutations of different degree");
    std::vector<int> r(images_.size());
    for (int i = 0; i < degree(); ++i) r[i] = images_[b.images_[i]];
    Permutation p;
    p.images_ = std::move(r);
    return p;
  }

  Permutation inverse() const {
    std::vector<int> r(images_.size());
    for (int i = 0; i < degree(); ++i) r[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(r);
    return p;
  }

  int order() const {
    Permutation acc(degree());
    int k = 1;
    acc = *this;
    while (!acc.is_identity()) {
      acc = acc * *this;
      ++k;
    }
    return k;
  }

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

}  // namespace fuselab
