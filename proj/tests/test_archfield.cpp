#include <catch2/catch_amalgamated.hpp>

#include "coho/archfield.hpp"

using coho::ArchField;
using coho::FieldMode;
using coho::Permutation;

TEST_CASE("totally real fields") {
  const auto q = ArchField::totally_real(1); // F = Q
  CHECK(q.degree() == 1);
  CHECK(q.real_embeddings() == 1);
  CHECK(q.complex_pairs() == 0);

  const auto cubic = ArchField::totally_real(3);
  CHECK(cubic.real_embeddings() == 3);
  CHECK(cubic.complex_pairs() == 0);
  CHECK(cubic.degree() == cubic.real_embeddings() + 2 * cubic.complex_pairs());

  const auto quad = ArchField::totally_real(2);
  CHECK(quad.conjugation().is_identity());
  CHECK(quad.conjugation().fixed_points() == 2);
  CHECK(!quad.has_galois_data());
  CHECK_THROWS_AS(ArchField::totally_real(0), coho::domain_error);
}

TEST_CASE("CM fields pair adjacent embeddings") {
  const auto im_quad = ArchField::cm(2);
  CHECK(im_quad.conjugation() == Permutation::from_cycles(2, {{0, 1}}));
  CHECK(im_quad.real_embeddings() == 0);
  CHECK(im_quad.complex_pairs() == 1);

  const auto quartic = ArchField::cm(4);
  CHECK(quartic.conjugation() == Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
  CHECK(quartic.conjugation().fixed_points() == 0);
  CHECK(quartic.complex_place_representatives() == std::vector<int>{0, 2});
  CHECK(quartic.real_embedding_indices().empty());

  CHECK_THROWS_AS(ArchField::cm(3), coho::domain_error);
  CHECK_THROWS_AS(ArchField::cm(0), coho::domain_error);
}

TEST_CASE("conjugation is an involution on every field") {
  for (const auto& f : {ArchField::totally_real(4), ArchField::cm(6),
                        ArchField::general(3, Permutation::from_cycles(3, {{1, 2}}))}) {
    const auto& c = f.conjugation();
    CHECK((c * c).is_identity());
    CHECK(f.degree() == f.real_embeddings() + 2 * f.complex_pairs());
  }
}

TEST_CASE("general mode with a mixed-signature cubic and S3 action") {
  const std::vector<Permutation> s3_gens{Permutation::from_cycles(3, {{0, 1, 2}}),
                                         Permutation::from_cycles(3, {{1, 2}})};
  const auto f = ArchField::general(3, Permutation::from_cycles(3, {{1, 2}}), s3_gens);
  CHECK(f.mode() == FieldMode::General);
  CHECK(f.real_embeddings() == 1);
  CHECK(f.complex_pairs() == 1);
  CHECK(f.galois_group_transitive());
  CHECK(f.galois_closure().size() == 6);
  CHECK(f.real_embedding_indices() == std::vector<int>{0});
  CHECK(f.complex_place_representatives() == std::vector<int>{1});
}

TEST_CASE("general mode structurally matching cm(2)") {
  const auto f = ArchField::general(2, Permutation::from_cycles(2, {{0, 1}}),
                                    std::vector<Permutation>{Permutation::from_cycles(2, {{0, 1}})});
  const auto cm = ArchField::cm(2);
  CHECK(f.conjugation() == cm.conjugation());
  CHECK(f.real_embeddings() == cm.real_embeddings());
  CHECK(f.complex_pairs() == cm.complex_pairs());
}

TEST_CASE("general mode validation") {
  // not an involution
  CHECK_THROWS_AS(ArchField::general(3, Permutation::from_cycles(3, {{0, 1, 2}})), coho::domain_error);
  // group missing the conjugation
  CHECK_THROWS_AS(ArchField::general(2, Permutation::from_cycles(2, {{0, 1}}),
                                     std::vector<Permutation>{Permutation::identity(2)}),
                  coho::domain_error);
  // degree mismatch between conjugation and embedding count
  CHECK_THROWS_AS(ArchField::general(3, Permutation::identity(2)), coho::domain_error);

  // intransitive group: accepted, flagged untrusted
  const auto f = ArchField::general(4, Permutation::from_cycles(4, {{0, 1}}),
                                    std::vector<Permutation>{Permutation::from_cycles(4, {{0, 1}})});
  CHECK(f.has_galois_data());
  CHECK(!f.galois_group_transitive());
}

TEST_CASE("galois closure obeys the cap") {
  const std::vector<Permutation> s4_gens{Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                         Permutation::from_cycles(4, {{0, 1}})};
  CHECK_THROWS_AS(ArchField::general(4, Permutation::identity(4), s4_gens, 5), coho::resource_error);
  const auto f = ArchField::general(4, Permutation::identity(4), s4_gens);
  CHECK_THROWS_AS(f.galois_closure(5), coho::resource_error);
  CHECK(coho::group_closure(f).size() == 24);
}

TEST_CASE("fields without group data refuse closure queries") {
  CHECK_THROWS_AS(ArchField::totally_real(2).galois_closure(), coho::domain_error);
}
