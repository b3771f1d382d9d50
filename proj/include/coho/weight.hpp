#pragma once

#include <cassert>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coho/archfield.hpp"
#include "coho/errors.hpp"
#include "coho/permutation.hpp"

namespace coho {

/// A weight for GL(n) over a degree-d field: one integer n-vector per
/// embedding index. Stored flat, row e = component at embedding e.
/// Rank 0 is rejected at construction; dominance is a queried property,
/// not a construction invariant (inputs are classified, not assumed).
class Weight {
public:
  Weight(int rank, int degree) : rank_(check_rank(rank)), degree_(check_degree(degree)) {
    data_.assign(static_cast<std::size_t>(rank_) * degree_, 0);
  }

  static Weight from_components(const std::vector<std::vector<long long>>& comps) {
    if (comps.empty())
      throw domain_error("weight needs at least one embedding component");
    const int n = static_cast<int>(comps.front().size());
    Weight w(n, static_cast<int>(comps.size()));
    for (std::size_t e = 0; e < comps.size(); ++e) {
      if (static_cast<int>(comps[e].size()) != n)
        throw domain_error("ragged weight components: all embeddings need length " + std::to_string(n));
      std::copy(comps[e].begin(), comps[e].end(), w.data_.begin() + static_cast<std::ptrdiff_t>(e) * n);
    }
    return w;
  }

  /// Same vector at every embedding.
  static Weight parallel(int degree, const std::vector<long long>& component) {
    Weight w(static_cast<int>(component.size()), degree);
    for (int e = 0; e < degree; ++e)
      std::copy(component.begin(), component.end(), w.data_.begin() + static_cast<std::ptrdiff_t>(e) * w.rank_);
    return w;
  }

  int rank() const { return rank_; }
  int degree() const { return degree_; }

  std::span<const long long> component(int e) const {
    return {data_.data() + static_cast<std::size_t>(e) * rank_, static_cast<std::size_t>(rank_)};
  }
  std::span<long long> component(int e) {
    return {data_.data() + static_cast<std::size_t>(e) * rank_, static_cast<std::size_t>(rank_)};
  }
  long long entry(int e, int i) const { return data_[static_cast<std::size_t>(e) * rank_ + i]; }

  bool operator==(const Weight&) const = default;

private:
  static int check_rank(int n) {
    if (n < 1)
      throw domain_error("weight rank must be >= 1");
    return n;
  }
  static int check_degree(int d) {
    if (d < 1)
      throw domain_error("weight needs at least one embedding component");
    return d;
  }

  int rank_;
  int degree_;
  std::vector<long long> data_;
};

inline bool weakly_decreasing(std::span<const long long> v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i - 1] < v[i])
      return false;
  return true;
}

/// Every component weakly decreasing.
inline bool is_dominant(const Weight& mu) {
  for (int e = 0; e < mu.degree(); ++e)
    if (!weakly_decreasing(mu.component(e)))
      return false;
  return true;
}

inline void require_dominant(const Weight& mu) {
  if (!is_dominant(mu))
    throw domain_error("weight is not dominant");
}

inline void require_same_embeddings(const ArchField& field, const Weight& mu) {
  if (field.degree() != mu.degree())
    throw domain_error("weight has " + std::to_string(mu.degree()) + " components but field has " +
                       std::to_string(field.degree()) + " embeddings");
}

/// Highest weight of the contragredient: negate-and-reverse each component.
/// Involutive and dominance-preserving.
inline Weight dual_weight(const Weight& mu) {
  const int n = mu.rank();
  Weight out(n, mu.degree());
  for (int e = 0; e < mu.degree(); ++e) {
    auto src = mu.component(e);
    auto dst = out.component(e);
    for (int i = 0; i < n; ++i)
      dst[i] = -src[n - 1 - i];
  }
  return out;
}

/// Conjugated weight: component at iota of the result is the component of
/// mu at sigma^{-1}(iota). Per-component dominance is untouched.
inline Weight conjugate_weight(const ArchField& field, const GaloisElement& sigma, const Weight& mu) {
  require_same_embeddings(field, mu);
  if (sigma.degree() != field.degree())
    throw domain_error("Galois element degree does not match embedding count");
  const Permutation inv = sigma.inverse();
  Weight out(mu.rank(), mu.degree());
  for (int e = 0; e < mu.degree(); ++e) {
    auto src = mu.component(inv(e));
    std::copy(src.begin(), src.end(), out.component(e).begin());
  }
  return out;
}

/// All components equal one self-dual vector: a_j + a_{n-j+1} independent
/// of j. Such weights are strongly pure over every field.
inline bool is_parallel(const Weight& mu) {
  const int n = mu.rank();
  auto first = mu.component(0);
  for (int e = 1; e < mu.degree(); ++e) {
    auto c = mu.component(e);
    if (!std::equal(first.begin(), first.end(), c.begin()))
      return false;
  }
  const long long b = first[0] + first[n - 1];
  for (int j = 0; j < n; ++j)
    if (first[j] + first[n - 1 - j] != b)
      return false;
  return true;
}

/// Sum of each component mod 2. For F = Q, n = 2 at full level the sheaf is
/// nonzero exactly when this is 0 (the central character must kill -1).
inline std::vector<int> central_parity(const Weight& mu) {
  std::vector<int> out(mu.degree());
  for (int e = 0; e < mu.degree(); ++e) {
    long long s = 0;
    for (long long a : mu.component(e))
      s += a;
    out[e] = static_cast<int>(((s % 2) + 2) % 2);
  }
  return out;
}

/// Lift along a field extension: restriction[e~] names the base embedding
/// under e~, and the lifted weight repeats the base component there.
/// Parallel weights lift to parallel weights.
inline Weight base_change_lift(const Weight& mu, const std::vector<int>& restriction) {
  if (restriction.empty())
    throw domain_error("restriction map must cover at least one extension embedding");
  Weight out(mu.rank(), static_cast<int>(restriction.size()));
  for (std::size_t e = 0; e < restriction.size(); ++e) {
    if (restriction[e] < 0 || restriction[e] >= mu.degree())
      throw domain_error("restriction hits embedding " + std::to_string(restriction[e]) +
                         " which the base weight lacks");
    auto src = mu.component(restriction[e]);
    std::copy(src.begin(), src.end(), out.component(static_cast<int>(e)).begin());
  }
  assert(!is_parallel(mu) || is_parallel(out));
  return out;
}

} // namespace coho
