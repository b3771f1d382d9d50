#pragma once

#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "coho/archfield.hpp"
#include "coho/cohomological.hpp"
#include "coho/errors.hpp"
#include "coho/halfint.hpp"
#include "coho/params.hpp"
#include "coho/purity.hpp"
#include "coho/weight.hpp"

namespace coho {

/// The endoscopy groups the calculus transfers from.
///   Sp2n:    Sp(2n)      -> GL(2n+1)  (totally real, odd rank)
///   SOodd:   SO(2n+1)    -> GL(2n)    (totally real, even rank)
///   Unitary: U(n)        -> GL(n)/C   (CM, complex places)
///   SOeven:  SO(2n)      -> GL(2n)    (the obstructed transfer)
enum class CaseTag { Sp2n, SOodd, Unitary, SOeven };

inline const char* to_string(CaseTag t) {
  switch (t) {
  case CaseTag::Sp2n:
    return "Sp2n";
  case CaseTag::SOodd:
    return "SOodd";
  case CaseTag::Unitary:
    return "Unitary";
  default:
    return "SOeven";
  }
}

struct TransferCase {
  CaseTag tag;
  int n; // rank of the endoscopy group's weight

  int gl_rank() const {
    switch (tag) {
    case CaseTag::Sp2n:
      return 2 * n + 1;
    case CaseTag::SOodd:
    case CaseTag::SOeven:
      return 2 * n;
    default:
      return n;
    }
  }

  bool operator==(const TransferCase&) const = default;
};

inline TransferCase make_case(CaseTag tag, int n) {
  if (n < 1)
    throw case_error("endoscopy rank n must be >= 1");
  return TransferCase{tag, n};
}

/// Case for a GL weight of the given rank; rejects parity mismatches
/// (e.g. an Sp(2n) transfer target must have odd rank).
inline TransferCase case_for_gl_rank(CaseTag tag, int N) {
  switch (tag) {
  case CaseTag::Sp2n:
    if (N < 3 || N % 2 == 0)
      throw case_error("Sp2n transfers to GL(2n+1): rank " + std::to_string(N) + " is not odd >= 3");
    return TransferCase{tag, (N - 1) / 2};
  case CaseTag::SOodd:
  case CaseTag::SOeven:
    if (N < 2 || N % 2 != 0)
      throw case_error(std::string(to_string(tag)) + " transfers to GL(2n): rank " + std::to_string(N) +
                       " is not even >= 2");
    return TransferCase{tag, N / 2};
  default:
    if (N < 1)
      throw case_error("Unitary transfers to GL(n): rank must be >= 1");
    return TransferCase{tag, N};
  }
}

/// Half sum of positive roots of the endoscopy group:
///   Sp(2n):    (n, n-1, ..., 1)
///   SO(2n+1):  (n-1/2, n-3/2, ..., 1/2)
///   U(n):      ((n-1)/2, (n-3)/2, ..., (1-n)/2)
///   SO(2n):    (n-1, n-2, ..., 1, 0)
inline HalfIntVector rho_prime(const TransferCase& c) {
  HalfIntVector rho;
  rho.reserve(c.n);
  for (int i = 1; i <= c.n; ++i) {
    switch (c.tag) {
    case CaseTag::Sp2n:
      rho.push_back(HalfInt(c.n + 1 - i));
      break;
    case CaseTag::SOodd:
      rho.push_back(HalfInt::from_doubled(2 * (c.n - i) + 1));
      break;
    case CaseTag::Unitary:
      rho.push_back(HalfInt::from_doubled(c.n + 1 - 2 * i));
      break;
    case CaseTag::SOeven:
      rho.push_back(HalfInt(c.n - i));
      break;
    }
  }
  return rho;
}

/// Middle degree of discrete-series cohomology: half the dimension of the
/// symmetric space G'(R)/K'.
///   Sp(2n,R)/U(n) and SO(n,n+1)/S(O(n)xO(n+1)): (n^2+n)/2
///   U(p,q)/(U(p)xU(q)) with (p,q) = (ceil(n/2), floor(n/2)): p*q
///   SO(n,n) resp. SO(n-1,n+1) for odd n: floor(n^2/2) either way
inline int middle_degree(const TransferCase& c) {
  const int n = c.n;
  switch (c.tag) {
  case CaseTag::Sp2n:
  case CaseTag::SOodd:
    return n * (n + 1) / 2;
  case CaseTag::Unitary:
    return ((n + 1) / 2) * (n / 2);
  default:
    return n * n / 2;
  }
}

namespace detail {

inline void require_place_kind(const TransferCase& c, const ArchField& field, int embedding) {
  if (embedding < 0 || embedding >= field.degree())
    throw domain_error("embedding index out of range");
  const bool real = field.is_real(embedding);
  if (c.tag == CaseTag::Unitary) {
    if (real)
      throw domain_error("unitary transfer is defined at complex places");
  } else if (!real) {
    throw domain_error(std::string(to_string(c.tag)) + " transfer is defined at real places");
  }
}

} // namespace detail

/// mu' = (mu_1, ..., mu_n): the first n coordinates of the component at the
/// given embedding (at a complex place, of the iota_v component). Requires
/// mu pure of purity weight 0; with dominance that forces the symmetric
/// shape mu_1 >= ... >= mu_n >= 0 >= -mu_n >= ... >= -mu_1 the transfer
/// truncates.
inline std::vector<long long> transfer_weight(const TransferCase& c, const ArchField& field, const Weight& mu,
                                              int embedding) {
  require_same_embeddings(field, mu);
  if (mu.rank() != c.gl_rank())
    throw case_error("weight of rank " + std::to_string(mu.rank()) + " does not fit " + to_string(c.tag) +
                     " with n = " + std::to_string(c.n) + " (GL rank " + std::to_string(c.gl_rank()) + ")");
  detail::require_place_kind(c, field, embedding);
  auto w = purity_weight_of(field, mu);
  if (!w)
    throw domain_error("transfer requires a pure weight");
  if (*w != 0)
    throw domain_error("transfer requires purity weight 0, got " + std::to_string(*w));
  auto comp = mu.component(embedding);
  std::vector<long long> mu_prime(comp.begin(), comp.begin() + c.n);
  assert(c.tag == CaseTag::Unitary || mu_prime.back() >= 0);
  return mu_prime;
}

/// Harish-Chandra parameter Lambda' = mu' + rho' of the discrete series the
/// transfer starts from, with the middle cohomology degree.
struct DiscreteSeriesDatum {
  TransferCase transfer_case;
  std::vector<long long> mu_prime;
  HalfIntVector rho_prime;
  HalfIntVector lambda_prime;
  int middle_degree;
};

inline DiscreteSeriesDatum harish_chandra_param(const TransferCase& c, const ArchField& field, const Weight& mu,
                                                int embedding) {
  DiscreteSeriesDatum d{c, transfer_weight(c, field, mu, embedding), rho_prime(c), {}, middle_degree(c)};
  d.lambda_prime.reserve(c.n);
  for (int i = 0; i < c.n; ++i)
    d.lambda_prime.push_back(HalfInt(d.mu_prime[i]) + d.rho_prime[i]);
  // Lambda' is regular: consecutive entries differ by mu'_i - mu'_{i+1} + 1
  for (int i = 1; i < c.n; ++i)
    assert(d.lambda_prime[i - 1] > d.lambda_prime[i]);
  return d;
}

/// ell = 2 Lambda', the C^x-exponents of the parameter. Even throughout in
/// the Sp2n and SOeven cases, odd positive in the SOodd case.
inline std::vector<long long> ell_param(const TransferCase& c, const ArchField& field, const Weight& mu,
                                        int embedding) {
  return doubled(harish_chandra_param(c, field, mu, embedding).lambda_prime);
}

/// The archimedean Langlands parameter of the transferred representation:
///   Sp2n:    Ind(chi_{ell_1}) + ... + Ind(chi_{ell_n}) + sgn^n
///   SOodd:   Ind(chi_{ell_1}) + ... + Ind(chi_{ell_n})
///   Unitary: z^{a_1} zbar^{-a_1} + ... + z^{a_n} zbar^{-a_n}, a = Lambda'
///   SOeven:  Ind(chi_{ell'_1}) + ... + Ind(chi_{ell'_n})
inline ArchParam arch_langlands_param(const TransferCase& c, const ArchField& field, const Weight& mu,
                                      int embedding) {
  const auto ell = ell_param(c, field, mu, embedding);
  std::vector<ParamSummand> summands;
  summands.reserve(ell.size() + 1);
  if (c.tag == CaseTag::Unitary) {
    for (long long a2 : ell) {
      const HalfInt a = HalfInt::from_doubled(a2);
      summands.push_back(ComplexCharacter{a, -a});
    }
  } else {
    for (long long l : ell) {
      assert(c.tag == CaseTag::SOodd ? l % 2 != 0 && l > 0 : l % 2 == 0);
      summands.push_back(TwoDimInduced{l});
    }
    if (c.tag == CaseTag::Sp2n)
      summands.push_back(SignCharacter{c.n % 2});
  }
  ArchParam param(std::move(summands));
  assert(param.dimension() == c.gl_rank());
  return param;
}

/// The transferred representation of GL(N) at the given place, block for
/// block the same data as the parameter: D(ell) per induced summand, the
/// sign character, or the complex characters. No Tate twist.
inline InducedRep transferred_rep(const TransferCase& c, const ArchField& field, const Weight& mu, int embedding) {
  const ArchParam param = arch_langlands_param(c, field, mu, embedding);
  std::vector<RepBlock> blocks;
  blocks.reserve(param.summands().size());
  for (const auto& s : param.summands()) {
    if (const auto* t = std::get_if<TwoDimInduced>(&s))
      blocks.push_back(DiscreteSeriesBlock{t->ell});
    else if (const auto* sg = std::get_if<SignCharacter>(&s))
      blocks.push_back(*sg);
    else
      blocks.push_back(std::get<ComplexCharacter>(s));
  }
  return InducedRep(std::move(blocks));
}

/// Why SO(2n) fails: its transfer lands on ell' = 2(mu' + (n-1, ..., 1, 0)),
/// while cohomology with respect to mu needs ell = (2 mu_i + 2n - 2i + 1).
/// The two differ by 1 in every coordinate, and no half-integral Tate twist
/// repairs an odd/even mismatch of D-parameters.
struct So2nObstruction {
  std::vector<long long> ell_prime;
  std::vector<long long> ell_required;
  std::vector<long long> mismatch;
};

inline So2nObstruction so2n_obstruction(const ArchField& field, const Weight& mu, int embedding) {
  const TransferCase c = case_for_gl_rank(CaseTag::SOeven, mu.rank());
  So2nObstruction o;
  o.ell_prime = ell_param(c, field, mu, embedding);
  auto comp = mu.component(embedding);
  o.ell_required.reserve(c.n);
  o.mismatch.reserve(c.n);
  for (int i = 1; i <= c.n; ++i)
    o.ell_required.push_back(2 * comp[i - 1] + 2 * (c.n - i) + 1);
  for (int i = 0; i < c.n; ++i)
    o.mismatch.push_back(o.ell_required[i] - o.ell_prime[i]);
  return o;
}

/// Everything the CLI reports for one place, including the comparison with
/// the generic cohomological representation J(mu) there.
struct TransferReport {
  TransferCase transfer_case;
  int embedding;
  std::vector<long long> mu_prime;
  HalfIntVector rho_prime;
  HalfIntVector lambda_prime;
  std::vector<long long> ell;
  ArchParam param;
  InducedRep rep;
  int middle_degree;
  MatchReport match;
  bool limit_of_discrete_series;
};

inline TransferReport transfer_report(const TransferCase& c, const ArchField& field, const Weight& mu,
                                      int embedding) {
  DiscreteSeriesDatum d = harish_chandra_param(c, field, mu, embedding);
  std::vector<long long> ell = doubled(d.lambda_prime);
  ArchParam param = arch_langlands_param(c, field, mu, embedding);
  InducedRep rep = transferred_rep(c, field, mu, embedding);
  InducedRep j = generic_cohomological_rep(field, mu, embedding);
  MatchReport match = matches_transfer(j, rep);
  const bool limit = rep.has_limit_block();
  return TransferReport{c,
                        embedding,
                        std::move(d.mu_prime),
                        std::move(d.rho_prime),
                        std::move(d.lambda_prime),
                        std::move(ell),
                        std::move(param),
                        std::move(rep),
                        d.middle_degree,
                        std::move(match),
                        limit};
}

/// One report per relevant archimedean place: every real embedding for the
/// totally real cases, one representative per conjugate pair for the
/// unitary case. The field signature must fit the case.
inline std::vector<TransferReport> transfer_reports(const TransferCase& c, const ArchField& field,
                                                    const Weight& mu) {
  require_same_embeddings(field, mu);
  std::vector<int> places;
  if (c.tag == CaseTag::Unitary) {
    if (field.real_embeddings() != 0)
      throw domain_error("unitary transfer needs a totally imaginary field");
    places = field.complex_place_representatives();
  } else {
    if (field.complex_pairs() != 0)
      throw domain_error(std::string(to_string(c.tag)) + " transfer needs a totally real field");
    places = field.real_embedding_indices();
  }
  std::vector<TransferReport> reports;
  reports.reserve(places.size());
  for (int e : places)
    reports.push_back(transfer_report(c, field, mu, e));
  return reports;
}

} // namespace coho
