#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "coho/archfield.hpp"
#include "coho/errors.hpp"
#include "coho/halfint.hpp"
#include "coho/params.hpp"
#include "coho/weight.hpp"

namespace coho {

/// Half sum of positive roots of gl(N): ((N-1)/2, (N-3)/2, ..., -(N-1)/2).
/// Entries sum to zero and are antisymmetric under negate-and-reverse.
inline HalfIntVector gl_rho(int N) {
  if (N < 1)
    throw domain_error("gl_rho needs N >= 1");
  HalfIntVector rho;
  rho.reserve(N);
  for (int i = 1; i <= N; ++i)
    rho.push_back(HalfInt::from_doubled(N + 1 - 2 * i));
  return rho;
}

enum class PlaceKind { Real, Complex };

namespace detail {

inline void require_self_dual_zero(std::span<const long long> paired, std::span<const long long> own,
                                   const char* what) {
  const std::size_t N = own.size();
  if (paired.size() != N)
    throw domain_error("component pair has mismatched lengths");
  if (!weakly_decreasing(own) || !weakly_decreasing(paired))
    throw domain_error(std::string(what) + ": component is not dominant");
  for (std::size_t i = 0; i < N; ++i)
    if (paired[i] + own[N - 1 - i] != 0)
      throw domain_error(std::string(what) + ": component is not pure of purity weight 0");
}

} // namespace detail

/// J_v(mu) at a real place: the unique generic representation of GL(N,R)
/// cohomological for the self-dual component mu_v with w = 0. With
/// ell = 2*mu_v + 2*rho the blocks are D(ell_1), ..., D(ell_n) from the
/// (2,...,2)-parabolic, plus sgn^(n mod 2) when N = 2n+1 is odd.
inline InducedRep generic_cohomological_rep_real(std::span<const long long> mu_v) {
  const int N = static_cast<int>(mu_v.size());
  detail::require_self_dual_zero(mu_v, mu_v, "real place");
  const HalfIntVector rho = gl_rho(N);
  const int n = N / 2;
  std::vector<RepBlock> blocks;
  blocks.reserve(n + (N % 2));
  for (int i = 0; i < n; ++i) {
    const long long ell = 2 * mu_v[i] + rho[i].doubled();
    blocks.push_back(DiscreteSeriesBlock{ell});
  }
  if (N % 2 == 1)
    blocks.push_back(SignCharacter{n % 2});
  return InducedRep(std::move(blocks));
}

/// J_v(mu) at a complex place, for a component pair satisfying the w = 0
/// purity pairing. Each character is z^{a_j} zbar^{-a_j} with
/// a = mu^iota + rho; the pairing b = -a is the general rule (for a parallel
/// component it reads a = mu + rho, b = -mu - rho). Blocks are listed with
/// strictly decreasing a.
inline InducedRep generic_cohomological_rep_complex(std::span<const long long> mu_iota,
                                                    std::span<const long long> mu_bar_iota) {
  const int N = static_cast<int>(mu_iota.size());
  detail::require_self_dual_zero(mu_bar_iota, mu_iota, "complex place");
  const HalfIntVector rho = gl_rho(N);
  std::vector<RepBlock> blocks;
  blocks.reserve(N);
  for (int j = 0; j < N; ++j) {
    const HalfInt a = HalfInt::from_doubled(2 * mu_iota[j] + rho[j].doubled());
    blocks.push_back(ComplexCharacter{a, -a});
  }
  return InducedRep(std::move(blocks));
}

/// J at the place carrying the given embedding. Complex embeddings use the
/// pair (component(e), component(conjugate(e))) with e playing iota_v.
inline InducedRep generic_cohomological_rep(const ArchField& field, const Weight& mu, int embedding) {
  require_same_embeddings(field, mu);
  if (embedding < 0 || embedding >= field.degree())
    throw domain_error("embedding index out of range");
  if (field.is_real(embedding))
    return generic_cohomological_rep_real(mu.component(embedding));
  return generic_cohomological_rep_complex(mu.component(embedding), mu.component(field.conjugate(embedding)));
}

/// One difference between two block lists. `what` names the field that
/// disagrees ("ell", "eps", "a_doubled", "b_doubled", "kind",
/// "tate_twist_doubled", "block_count"); block = -1 for list-level entries.
struct MatchDiff {
  int block;
  std::string what;
  long long expected;
  long long got;
  bool operator==(const MatchDiff&) const = default;
};

struct MatchReport {
  bool match = false;
  std::vector<MatchDiff> diffs;
};

namespace detail {

inline std::tuple<int, long long, long long> block_key(const RepBlock& b) {
  if (const auto* ds = std::get_if<DiscreteSeriesBlock>(&b))
    return {0, ds->ell, 0};
  if (const auto* sg = std::get_if<SignCharacter>(&b))
    return {1, sg->eps, 0};
  const auto& cc = std::get<ComplexCharacter>(b);
  return {2, cc.a.doubled(), cc.b.doubled()};
}

inline void diff_blocks(int index, const RepBlock& expected, const RepBlock& got, std::vector<MatchDiff>& out) {
  if (expected.index() != got.index()) {
    out.push_back({index, "kind", static_cast<long long>(expected.index()), static_cast<long long>(got.index())});
    return;
  }
  if (const auto* de = std::get_if<DiscreteSeriesBlock>(&expected)) {
    const auto& dg = std::get<DiscreteSeriesBlock>(got);
    if (de->ell != dg.ell)
      out.push_back({index, "ell", de->ell, dg.ell});
  } else if (const auto* se = std::get_if<SignCharacter>(&expected)) {
    const auto& sg = std::get<SignCharacter>(got);
    if (se->eps != sg.eps)
      out.push_back({index, "eps", se->eps, sg.eps});
  } else {
    const auto& ce = std::get<ComplexCharacter>(expected);
    const auto& cg = std::get<ComplexCharacter>(got);
    if (ce.a != cg.a)
      out.push_back({index, "a_doubled", ce.a.doubled(), cg.a.doubled()});
    if (ce.b != cg.b)
      out.push_back({index, "b_doubled", ce.b.doubled(), cg.b.doubled()});
  }
}

} // namespace detail

/// Do two induced representations carry the same parameter? Equality means
/// equal block multisets and equal Tate twists; representations of different
/// dimension cannot be meaningfully compared and raise an error. The diffs
/// walk the lists pairwise (the interesting failures, like the all-ones
/// ell-shift of the even orthogonal transfer, show up blockwise).
inline MatchReport matches_transfer(const InducedRep& expected, const InducedRep& got) {
  if (expected.dimension() != got.dimension())
    throw domain_error("cannot compare representations of GL(" + std::to_string(expected.dimension()) +
                       ") and GL(" + std::to_string(got.dimension()) + ")");
  MatchReport report;
  const auto& eb = expected.blocks();
  const auto& gb = got.blocks();
  if (eb.size() != gb.size()) {
    report.diffs.push_back({-1, "block_count", static_cast<long long>(eb.size()), static_cast<long long>(gb.size())});
  } else {
    for (std::size_t i = 0; i < eb.size(); ++i)
      detail::diff_blocks(static_cast<int>(i), eb[i], gb[i], report.diffs);
  }
  if (expected.tate_twist() != got.tate_twist())
    report.diffs.push_back({-1, "tate_twist_doubled", expected.tate_twist().doubled(), got.tate_twist().doubled()});

  auto ekeys = [&] {
    std::vector<std::tuple<int, long long, long long>> k;
    for (const auto& b : eb)
      k.push_back(detail::block_key(b));
    std::sort(k.begin(), k.end());
    return k;
  }();
  auto gkeys = [&] {
    std::vector<std::tuple<int, long long, long long>> k;
    for (const auto& b : gb)
      k.push_back(detail::block_key(b));
    std::sort(k.begin(), k.end());
    return k;
  }();
  report.match = ekeys == gkeys && expected.tate_twist() == got.tate_twist();
  return report;
}

} // namespace coho
