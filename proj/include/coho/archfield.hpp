#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coho/errors.hpp"
#include "coho/permutation.hpp"

namespace coho {

enum class FieldMode { TotallyReal, CM, General };

/// Archimedean data of a number field: the set of embeddings into C
/// (abstract indices 0..d-1), the complex-conjugation pairing on them, and
/// optionally the image of Aut(C) in Sym(embeddings) as a generated
/// permutation group. The field itself is never represented; the weight
/// calculus only ever touches this combinatorial shadow.
///
/// Invariants: d = r1 + 2*r2; the conjugation is an involution fixing
/// exactly the r1 real embeddings. In CM mode embeddings are ordered as
/// adjacent conjugate pairs (iota_1, bar-iota_1, iota_2, bar-iota_2, ...),
/// and the first member of each pair is the distinguished iota_v. That
/// choice of iota_v is a convention, not canonical; swapping a pair swaps
/// the two components of every weight at that place.
class ArchField {
public:
  static constexpr std::size_t kDefaultClosureCap = 1'000'000;

  /// d real embeddings, trivial conjugation. Strong purity delegates to
  /// purity in this mode, so no Galois data is carried.
  static ArchField totally_real(int degree) {
    if (degree < 1)
      throw domain_error("totally real field needs degree >= 1");
    ArchField f;
    f.mode_ = FieldMode::TotallyReal;
    f.conjugation_ = Permutation::identity(degree);
    f.r1_ = degree;
    f.r2_ = 0;
    return f;
  }

  /// Totally imaginary quadratic extension of a totally real field:
  /// no real embeddings, conjugation swaps adjacent pairs.
  static ArchField cm(int degree) {
    if (degree < 2 || degree % 2 != 0)
      throw domain_error("CM field degree must be even and >= 2");
    ArchField f;
    f.mode_ = FieldMode::CM;
    std::vector<int> img(degree);
    for (int i = 0; i < degree; i += 2) {
      img[i] = i + 1;
      img[i + 1] = i;
    }
    f.conjugation_ = Permutation(std::move(img));
    f.r1_ = 0;
    f.r2_ = degree / 2;
    return f;
  }

  /// Arbitrary signature, with the Aut(C)-action supplied by the caller as
  /// permutation-group generators. Generators may be omitted, in which case
  /// strong-purity queries on non-parallel weights come back "unknown".
  static ArchField general(int degree, Permutation conjugation,
                           std::optional<std::vector<Permutation>> galois_generators = std::nullopt,
                           std::size_t closure_cap = kDefaultClosureCap) {
    ArchField f;
    f.mode_ = FieldMode::General;
    if (conjugation.degree() != degree)
      throw domain_error("conjugation degree does not match embedding count");
    if (!conjugation.is_involution())
      throw domain_error("conjugation must be an involution on embedding indices");
    f.r1_ = conjugation.fixed_points();
    f.r2_ = (degree - f.r1_) / 2;
    f.conjugation_ = std::move(conjugation);
    if (galois_generators) {
      f.attach_galois_generators(std::move(*galois_generators), closure_cap);
    }
    return f;
  }

  FieldMode mode() const { return mode_; }
  int degree() const { return conjugation_.degree(); }
  int real_embeddings() const { return r1_; }
  int complex_pairs() const { return r2_; }
  const Permutation& conjugation() const { return conjugation_; }

  bool is_real(int embedding) const { return conjugation_(embedding) == embedding; }
  int conjugate(int embedding) const { return conjugation_(embedding); }

  bool has_galois_data() const { return galois_generators_.has_value(); }
  const std::vector<Permutation>& galois_generators() const {
    if (!galois_generators_)
      throw domain_error("field carries no Galois generators");
    return *galois_generators_;
  }

  /// False when the supplied generators do not act transitively on the
  /// embeddings; such group data is recorded but untrusted.
  bool galois_group_transitive() const { return galois_group_transitive_; }

  /// Full finite group generated by the Galois generators, identity first.
  std::vector<GaloisElement> galois_closure(std::size_t cap = kDefaultClosureCap) const {
    return group_closure(galois_generators(), degree(), cap);
  }

  /// Real embedding indices, ascending.
  std::vector<int> real_embedding_indices() const {
    std::vector<int> out;
    for (int e = 0; e < degree(); ++e)
      if (is_real(e))
        out.push_back(e);
    return out;
  }

  /// One representative per complex place: the smaller index of each
  /// conjugate pair (the conventional iota_v), ascending.
  std::vector<int> complex_place_representatives() const {
    std::vector<int> out;
    for (int e = 0; e < degree(); ++e)
      if (!is_real(e) && e < conjugate(e))
        out.push_back(e);
    return out;
  }

  bool operator==(const ArchField& o) const {
    return mode_ == o.mode_ && conjugation_ == o.conjugation_ && galois_generators_ == o.galois_generators_;
  }

private:
  ArchField() = default;

  void attach_galois_generators(std::vector<Permutation> gens, std::size_t closure_cap) {
    for (const auto& g : gens)
      if (g.degree() != degree())
        throw domain_error("Galois generator degree does not match embedding count");
    auto closure = group_closure(gens, degree(), closure_cap);
    if (!group_contains(closure, conjugation_))
      throw domain_error("Galois group does not contain the conjugation involution");
    galois_group_transitive_ = acts_transitively(gens, degree());
    galois_generators_ = std::move(gens);
  }

  friend ArchField attach_galois_data(ArchField, std::vector<Permutation>, std::size_t);

  FieldMode mode_ = FieldMode::TotallyReal;
  Permutation conjugation_;
  int r1_ = 0;
  int r2_ = 0;
  std::optional<std::vector<Permutation>> galois_generators_;
  bool galois_group_transitive_ = true;
};

/// Attach explicit Aut(C)-image data to a field built in any mode (used when
/// deserializing, e.g. a CM field whose stored form carries generators).
inline ArchField attach_galois_data(ArchField f, std::vector<Permutation> gens,
                                    std::size_t closure_cap = ArchField::kDefaultClosureCap) {
  f.attach_galois_generators(std::move(gens), closure_cap);
  return f;
}

/// The spec-level group_closure operation on a field.
inline std::vector<GaloisElement> group_closure(const ArchField& field,
                                                std::size_t cap = ArchField::kDefaultClosureCap) {
  return field.galois_closure(cap);
}

} // namespace coho
