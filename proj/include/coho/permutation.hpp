#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "coho/errors.hpp"

namespace coho {

/// A permutation of {0, ..., d-1}, stored as its image vector.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<char> seen(images_.size(), 0);
    for (int v : images_) {
      if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[v])
        throw domain_error("image vector is not a permutation");
      seen[v] = 1;
    }
  }

  static Permutation identity(int degree) {
    Permutation p;
    p.images_.resize(degree);
    std::iota(p.images_.begin(), p.images_.end(), 0);
    return p;
  }

  /// Build from disjoint cycles; points not mentioned are fixed.
  static Permutation from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
    Permutation p = identity(degree);
    for (const auto& cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        int from = cyc[i];
        int to = cyc[(i + 1) % cyc.size()];
        if (from < 0 || from >= degree || to < 0 || to >= degree)
          throw domain_error("cycle entry out of range");
        p.images_[from] = to;
      }
    }
    return Permutation(std::move(p.images_)); // revalidates disjointness
  }

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const {
    Permutation p;
    p.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      p.images_[images_[i]] = static_cast<int>(i);
    return p;
  }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i))
        return false;
    return true;
  }

  bool is_involution() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[images_[i]] != static_cast<int>(i))
        return false;
    return true;
  }

  int fixed_points() const {
    int k = 0;
    for (std::size_t i = 0; i < images_.size(); ++i)
      k += images_[i] == static_cast<int>(i);
    return k;
  }

  /// Composition: (s * t)(i) = s(t(i)).
  friend Permutation operator*(const Permutation& s, const Permutation& t) {
    if (s.degree() != t.degree())
      throw domain_error("composing permutations of different degree");
    Permutation p;
    p.images_.resize(s.images_.size());
    for (std::size_t i = 0; i < s.images_.size(); ++i)
      p.images_[i] = s.images_[t.images_[i]];
    return p;
  }

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  std::vector<int> images_;
};

/// How an element of Aut(C) acts on the set of embedding indices.
using GaloisElement = Permutation;

/// Finite closure of a generating set under composition. Always contains
/// the identity; result sorted lexicographically by image vector (so the
/// identity comes first). Throws resource_error past `cap` elements.
inline std::vector<Permutation> group_closure(std::span<const Permutation> generators, int degree,
                                              std::size_t cap = 1'000'000) {
  for (const auto& g : generators)
    if (g.degree() != degree)
      throw domain_error("generator degree mismatch");
  std::vector<Permutation> elems{Permutation::identity(degree)};
  std::vector<Permutation> sorted = elems;
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const Permutation current = elems[head]; // copy: elems may reallocate
    for (const auto& g : generators) {
      Permutation next = g * current;
      auto it = std::lower_bound(sorted.begin(), sorted.end(), next);
      if (it != sorted.end() && *it == next)
        continue;
      if (elems.size() >= cap)
        throw resource_error("group closure exceeds cap of " + std::to_string(cap) + " elements");
      sorted.insert(it, next);
      elems.push_back(std::move(next));
    }
  }
  return sorted;
}

inline bool group_contains(const std::vector<Permutation>& sorted_group, const Permutation& p) {
  auto it = std::lower_bound(sorted_group.begin(), sorted_group.end(), p);
  return it != sorted_group.end() && *it == p;
}

/// Orbit of 0 under the generators covers every point. Forward images
/// suffice: each generator permutes the finite orbit, so its inverse is a
/// power of it.
inline bool acts_transitively(std::span<const Permutation> generators, int degree) {
  if (degree <= 0)
    return false;
  std::vector<char> reached(degree, 0);
  std::vector<int> stack{0};
  reached[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& g : generators) {
      int w = g(v);
      if (!reached[w]) {
        reached[w] = 1;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == degree;
}

} // namespace coho
