#pragma once

#include <array>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "coho/cohomological.hpp"
#include "coho/errors.hpp"
#include "coho/halfint.hpp"
#include "coho/params.hpp"
#include "coho/weight.hpp"

namespace coho {

/// Infinity type of the Hecke character driving automorphic induction:
/// one integer exponent per archimedean place of the auxiliary CM field.
struct HeckeInfinityType {
  std::vector<long long> f;
};

namespace detail {

inline std::span<const long long> parallel_zero_component(const Weight& mu) {
  if (!is_parallel(mu))
    throw domain_error("automorphic induction needs a parallel weight");
  auto comp = mu.component(0);
  if (!weakly_decreasing(comp))
    throw domain_error("weight is not dominant");
  const std::size_t N = comp.size();
  if (comp[0] + comp[N - 1] != 0)
    throw domain_error("automorphic induction needs purity weight 0, got " +
                       std::to_string(comp[0] + comp[N - 1]));
  if (N % 2 != 0)
    throw domain_error("automorphic induction targets GL(2n): rank must be even");
  return comp;
}

} // namespace detail

/// f = (ell_1, ..., ell_n), the first half of ell = 2 mu + 2 rho computed
/// from the common component of a parallel weight of rank 2n. Entries are
/// odd (ell_i = 2 mu_i + 2n - 2i + 1), positive, strictly decreasing.
inline HeckeInfinityType hecke_infinity_type(const Weight& mu) {
  auto comp = detail::parallel_zero_component(mu);
  const int N = static_cast<int>(comp.size());
  const int n = N / 2;
  const HalfIntVector rho = gl_rho(N);
  HeckeInfinityType t;
  t.f.reserve(n);
  for (int i = 0; i < n; ++i) {
    const long long ell = 2 * comp[i] + rho[i].doubled();
    assert(ell % 2 != 0 && ell > 0);
    assert(i == 0 || t.f.back() > ell);
    t.f.push_back(ell);
  }
  return t;
}

/// Archimedean component of the automorphically induced representation:
/// exactly the generic cohomological representation for the parallel weight
/// at a place of the given kind. The full exponent vector ell = 2 mu + 2 rho
/// satisfies ell_{2n-i+1} = -ell_i.
inline InducedRep induced_pi_infinity(const Weight& mu, PlaceKind place) {
  auto comp = detail::parallel_zero_component(mu);
  const int N = static_cast<int>(comp.size());
  const HalfIntVector rho = gl_rho(N);
  for (int i = 0; i < N; ++i)
    assert(2 * comp[i] + rho[i].doubled() == -(2 * comp[N - 1 - i] + rho[N - 1 - i].doubled()));
  if (place == PlaceKind::Real)
    return generic_cohomological_rep_real(comp);
  return generic_cohomological_rep_complex(comp, comp);
}

/// The weight the twisted transfer is cohomological for, completed to a
/// pure dominant weight by mu_3 = w - mu_2, mu_4 = w - mu_1.
struct RamakrishnanSolution {
  long long w;
  std::array<long long, 4> mu;
  bool dominant;
  bool pure;
};

/// The GL(2) x GL(2) -> GL(4) transfer of a pair of eigenforms of weights
/// k1 > k2, at infinity. The naive product is blocked by a parity
/// congruence; the half-integral Tate twist repairs it.
struct RamakrishnanReport {
  long long k1 = 0, k2 = 0;
  int eps1 = 0, eps2 = 0; // eps_j = k_j mod 2
  InducedRep untwisted;
  InducedRep twisted;
  bool parity_obstruction = false;
  long long obstruction_two_mu1 = 0; // required value of 2*mu_1; always odd
  RamakrishnanSolution solution{};
  bool identities_hold = false;
};

/// Compute the report for a pair of modular-form weights k1 > k2 >= 2.
///
/// The untwisted representation at infinity is
/// (D_{k1+k2-2} x D_{k1-k2})((eps1+eps2)/2); being cohomological for a pure
/// weight would force 2 mu_1 = k1 + k2 - 5 + eps1 + eps2, an odd number.
/// Twisting by | |^{1/2} shifts w to eps1 + eps2 + 1 and the solution
/// mu_1 = (k1+k2+eps1+eps2)/2 - 2, mu_2 = (k1-k2+eps1+eps2)/2 works; the
/// report verifies 2 mu_1 + 3 - w = k1 + k2 - 2 and 2 mu_2 + 1 - w = k1 - k2.
inline RamakrishnanReport ramakrishnan_transfer(long long k1, long long k2) {
  if (k2 < 2)
    throw domain_error("modular form weights must be >= 2");
  if (k1 == k2)
    throw domain_error("k1 = k2 makes the second block D(0): weights must differ");
  if (k1 < k2)
    throw domain_error("weights must satisfy k1 > k2");
  const int eps1 = static_cast<int>(k1 % 2);
  const int eps2 = static_cast<int>(k2 % 2);
  std::vector<RepBlock> blocks{DiscreteSeriesBlock{k1 + k2 - 2}, DiscreteSeriesBlock{k1 - k2}};

  RamakrishnanReport r{
      k1,
      k2,
      eps1,
      eps2,
      InducedRep(blocks, HalfInt::from_doubled(eps1 + eps2)),
      InducedRep(blocks, HalfInt::from_doubled(eps1 + eps2 + 1)),
      true,
      k1 + k2 - 5 + eps1 + eps2,
      {},
      false,
  };
  assert(r.obstruction_two_mu1 % 2 != 0);

  const long long w = eps1 + eps2 + 1;
  const long long mu1 = (k1 + k2 + eps1 + eps2) / 2 - 2;
  const long long mu2 = (k1 - k2 + eps1 + eps2) / 2;
  r.solution.w = w;
  r.solution.mu = {mu1, mu2, w - mu2, w - mu1};
  r.solution.dominant = mu1 >= mu2 && mu2 >= w - mu2 && w - mu2 >= w - mu1;
  r.solution.pure = true; // mu_1 + mu_4 = mu_2 + mu_3 = w by construction
  r.identities_hold = (2 * mu1 + 3 - w == k1 + k2 - 2) && (2 * mu2 + 1 - w == k1 - k2);
  return r;
}

} // namespace coho
