#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coho/archfield.hpp"
#include "coho/errors.hpp"
#include "coho/weight.hpp"

namespace coho {

enum class TriState { Yes, No, Unknown };

inline const char* to_string(TriState t) {
  switch (t) {
  case TriState::Yes:
    return "yes";
  case TriState::No:
    return "no";
  default:
    return "unknown";
  }
}

/// A Galois conjugate that fails the purity test.
struct PurityWitness {
  GaloisElement sigma;
  Weight conjugated;
};

struct PurityReport {
  bool is_pure = false;
  std::optional<long long> purity_weight; // w(mu), present iff pure
  TriState strongly_pure = TriState::Unknown;
  std::optional<PurityWitness> witness; // present iff strongly_pure == No
  bool is_parallel = false;
};

/// The purity weight w(mu), or nullopt when mu is not pure.
///
/// Purity demands a single integer w with, at every real embedding,
/// mu_i + mu_{n-i+1} = w, and across every conjugate pair,
/// bar-component_i + component_{n-i+1} = w. The candidate w is read off the
/// first embedding and then checked everywhere; any disagreement means not
/// pure, since one coordinate pair already forces w.
inline std::optional<long long> purity_weight_of(const ArchField& field, const Weight& mu) {
  require_same_embeddings(field, mu);
  require_dominant(mu);
  const int n = mu.rank();
  const long long w = mu.entry(field.conjugate(0), 0) + mu.entry(0, n - 1);
  for (int e = 0; e < mu.degree(); ++e) {
    auto paired = mu.component(field.conjugate(e));
    auto own = mu.component(e);
    for (int i = 0; i < n; ++i)
      if (paired[i] + own[n - 1 - i] != w)
        return std::nullopt;
  }
  return w;
}

/// Purity part of the report. Impurity already settles strong purity
/// negatively (the identity conjugate fails), so that much is filled in;
/// for pure weights strong purity is left Unknown here.
inline PurityReport purity(const ArchField& field, const Weight& mu) {
  PurityReport r;
  r.is_parallel = is_parallel(mu);
  if (auto w = purity_weight_of(field, mu)) {
    r.is_pure = true;
    r.purity_weight = *w;
  } else {
    r.is_pure = false;
    r.strongly_pure = TriState::No;
    r.witness = PurityWitness{Permutation::identity(mu.degree()), mu};
  }
  return r;
}

/// Full strong-purity classification.
///
/// Over totally real and CM fields, pure and strongly pure coincide, so the
/// answer is delegated to the purity test. In General mode with Galois
/// generators the whole closure is searched for a conjugate that breaks
/// purity. Without group data the honest answer for a non-parallel pure
/// weight is Unknown: the Aut(C)-image is field-specific data this library
/// cannot infer. Parallel weights are strongly pure over every field.
inline PurityReport strong_purity(const ArchField& field, const Weight& mu,
                                  std::size_t closure_cap = ArchField::kDefaultClosureCap) {
  PurityReport r = purity(field, mu);
  if (!r.is_pure)
    return r;
  switch (field.mode()) {
  case FieldMode::TotallyReal:
  case FieldMode::CM:
    r.strongly_pure = TriState::Yes;
    return r;
  case FieldMode::General:
    break;
  }
  if (field.has_galois_data()) {
    for (const auto& sigma : field.galois_closure(closure_cap)) {
      Weight conj = conjugate_weight(field, sigma, mu);
      if (!purity_weight_of(field, conj)) {
        r.strongly_pure = TriState::No;
        r.witness = PurityWitness{sigma, std::move(conj)};
        return r;
      }
    }
    r.strongly_pure = TriState::Yes;
    return r;
  }
  r.strongly_pure = r.is_parallel ? TriState::Yes : TriState::Unknown;
  return r;
}

/// All weakly decreasing integer vectors of the given length with entries in
/// [-bound, bound], ascending lexicographically.
inline std::vector<std::vector<long long>> dominant_vectors(int length, long long bound) {
  std::vector<std::vector<long long>> out;
  std::vector<long long> cur(length);
  auto rec = [&](auto&& self, int pos, long long hi) -> void {
    if (pos == length) {
      out.push_back(cur);
      return;
    }
    for (long long v = -bound; v <= hi; ++v) {
      cur[pos] = v;
      self(self, pos + 1, v);
    }
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

/// Brute-force scan of the strongly pure weights with the given purity
/// weight and all coordinates in [-bound, bound], in lexicographic order of
/// the concatenated components. The candidate space has
/// (#dominant vectors)^d elements; past `cap` the scan refuses to start.
inline std::vector<Weight> enumerate_strongly_pure(const ArchField& field, int rank, long long bound,
                                                   long long purity_weight, std::size_t cap = 20'000'000,
                                                   std::size_t closure_cap = ArchField::kDefaultClosureCap) {
  if (rank < 1)
    throw domain_error("weight rank must be >= 1");
  if (bound < 0)
    throw domain_error("coordinate bound must be >= 0");
  const auto doms = dominant_vectors(rank, bound);
  const int d = field.degree();
  double space = 1.0;
  for (int e = 0; e < d; ++e)
    space *= static_cast<double>(doms.size());
  if (space > static_cast<double>(cap))
    throw resource_error("enumeration space of " + std::to_string(space) + " candidates exceeds cap of " +
                         std::to_string(cap));

  std::vector<Weight> found;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  Weight candidate(rank, d);
  for (;;) {
    for (int e = 0; e < d; ++e) {
      const auto& v = doms[idx[e]];
      std::copy(v.begin(), v.end(), candidate.component(e).begin());
    }
    auto w = purity_weight_of(field, candidate);
    if (w && *w == purity_weight && strong_purity(field, candidate, closure_cap).strongly_pure == TriState::Yes)
      found.push_back(candidate);
    // odometer: last index varies fastest, so candidates come out in
    // lexicographic order of the concatenation
    int e = d - 1;
    while (e >= 0 && ++idx[e] == doms.size()) {
      idx[e] = 0;
      --e;
    }
    if (e < 0)
      break;
  }
  return found;
}

} // namespace coho
