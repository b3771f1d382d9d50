#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coho/errors.hpp"
#include "coho/halfint.hpp"

namespace coho {

/// Ind_{C^x}^{W_R}(chi_ell): the irreducible 2-dimensional summand of a real
/// Weil-group parameter with C^x-exponents (ell/2, -ell/2).
struct TwoDimInduced {
  long long ell;
  bool operator==(const TwoDimInduced&) const = default;
};

/// sgn^eps, eps in {0,1}.
struct SignCharacter {
  int eps;
  bool operator==(const SignCharacter&) const = default;
};

/// z^a zbar^b on C^x.
struct ComplexCharacter {
  HalfInt a;
  HalfInt b;
  bool operator==(const ComplexCharacter&) const = default;
};

using ParamSummand = std::variant<TwoDimInduced, SignCharacter, ComplexCharacter>;

inline int dimension_of(const ParamSummand& s) {
  return std::holds_alternative<TwoDimInduced>(s) ? 2 : 1;
}

/// An archimedean Langlands parameter as a formal sum of summands.
class ArchParam {
public:
  explicit ArchParam(std::vector<ParamSummand> summands) : summands_(std::move(summands)) {
    for (const auto& s : summands_)
      validate(s);
  }

  const std::vector<ParamSummand>& summands() const { return summands_; }

  int dimension() const {
    int dim = 0;
    for (const auto& s : summands_)
      dim += dimension_of(s);
    return dim;
  }

  bool operator==(const ArchParam&) const = default;

private:
  static void validate(const ParamSummand& s) {
    if (const auto* t = std::get_if<TwoDimInduced>(&s)) {
      if (t->ell < 0)
        throw domain_error("induced summand needs ell >= 0");
    } else if (const auto* sg = std::get_if<SignCharacter>(&s)) {
      if (sg->eps != 0 && sg->eps != 1)
        throw domain_error("sign exponent must be 0 or 1");
    }
  }

  std::vector<ParamSummand> summands_;
};

/// D(ell): the discrete series of GL(2,R) with parameter ell. ell = 0 is the
/// limit-of-discrete-series boundary, admitted but flagged.
struct DiscreteSeriesBlock {
  long long ell;
  bool operator==(const DiscreteSeriesBlock&) const = default;
};

using RepBlock = std::variant<DiscreteSeriesBlock, SignCharacter, ComplexCharacter>;

inline int dimension_of(const RepBlock& b) {
  return std::holds_alternative<DiscreteSeriesBlock>(b) ? 2 : 1;
}

/// A parabolically induced representation of GL(N) over R or C, described by
/// its ordered block list plus a global half-integral Tate twist.
class InducedRep {
public:
  explicit InducedRep(std::vector<RepBlock> blocks, HalfInt tate_twist = 0)
      : blocks_(std::move(blocks)), tate_twist_(tate_twist) {
    for (const auto& b : blocks_)
      validate(b);
  }

  const std::vector<RepBlock>& blocks() const { return blocks_; }
  HalfInt tate_twist() const { return tate_twist_; }

  int dimension() const {
    int dim = 0;
    for (const auto& b : blocks_)
      dim += dimension_of(b);
    return dim;
  }

  /// Some D(0) block present (mu_n = 0 pushes the last parameter to the
  /// discrete-series boundary).
  bool has_limit_block() const {
    for (const auto& b : blocks_)
      if (const auto* ds = std::get_if<DiscreteSeriesBlock>(&b); ds && ds->ell == 0)
        return true;
    return false;
  }

  bool operator==(const InducedRep&) const = default;

private:
  static void validate(const RepBlock& b) {
    if (const auto* ds = std::get_if<DiscreteSeriesBlock>(&b)) {
      if (ds->ell < 0)
        throw domain_error("discrete series block needs ell >= 0");
    } else if (const auto* sg = std::get_if<SignCharacter>(&b)) {
      if (sg->eps != 0 && sg->eps != 1)
        throw domain_error("sign exponent must be 0 or 1");
    }
  }

  std::vector<RepBlock> blocks_;
  HalfInt tate_twist_;
};

} // namespace coho
