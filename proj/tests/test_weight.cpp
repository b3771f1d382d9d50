#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "coho/archfield.hpp"
#include "coho/weight.hpp"

using coho::ArchField;
using coho::Permutation;
using coho::Weight;

TEST_CASE("weight construction and shape validation") {
  const auto w = Weight::from_components({{2, 0, -2}, {1, 0, -1}});
  CHECK(w.rank() == 3);
  CHECK(w.degree() == 2);
  CHECK(w.entry(1, 2) == -1);

  CHECK_THROWS_AS(Weight::from_components({{1, 0}, {1}}), coho::domain_error); // ragged
  CHECK_THROWS_AS(Weight::from_components({}), coho::domain_error);
  CHECK_THROWS_AS(Weight(0, 1), coho::domain_error); // rank 0 rejected

  const auto p = Weight::parallel(3, {1, 0, -1});
  CHECK(p.degree() == 3);
  CHECK(p.component(2)[0] == 1);
}

TEST_CASE("dominance") {
  CHECK(coho::is_dominant(Weight::parallel(2, {2, 1, 0})));
  CHECK(!coho::is_dominant(Weight::from_components({{0, 1}})));
  CHECK(coho::is_dominant(Weight(4, 2))); // zero weight
  CHECK(!coho::is_dominant(Weight::from_components({{2, 1, 0}, {2, 1, 3}})));
}

TEST_CASE("dual weight negates and reverses each component") {
  const auto mu = Weight::from_components({{3, 1, -3}});
  CHECK(coho::dual_weight(mu) == Weight::from_components({{3, -1, -3}}));
  CHECK(coho::is_dominant(coho::dual_weight(mu)));

  // involution, on a small exhaustive family
  for (long long a = -2; a <= 2; ++a)
    for (long long b = -2; b <= a; ++b)
      for (long long c = -2; c <= b; ++c) {
        const auto w = Weight::from_components({{a, b, c}, {c + 1, c, c - 1}});
        CHECK(coho::dual_weight(coho::dual_weight(w)) == w);
        CHECK(coho::is_dominant(coho::dual_weight(w)));
      }
}

TEST_CASE("conjugate weight permutes components through sigma inverse") {
  const auto field = ArchField::general(3, Permutation::from_cycles(3, {{1, 2}}),
                                        std::vector<Permutation>{Permutation::from_cycles(3, {{0, 1, 2}}),
                                                                 Permutation::from_cycles(3, {{1, 2}})});
  const auto mu = Weight::from_components({{5}, {7}, {9}}); // components A, B, C

  SECTION("identity") {
    CHECK(coho::conjugate_weight(field, Permutation::identity(3), mu) == mu);
  }
  SECTION("transposition (0 1) gives (B, A, C)") {
    const auto conj = coho::conjugate_weight(field, Permutation::from_cycles(3, {{0, 1}}), mu);
    CHECK(conj == Weight::from_components({{7}, {5}, {9}}));
  }
  SECTION("3-cycle") {
    // sigma = (0 1 2): component at iota comes from sigma^{-1}(iota)
    const auto sigma = Permutation::from_cycles(3, {{0, 1, 2}});
    const auto conj = coho::conjugate_weight(field, sigma, mu);
    for (int e = 0; e < 3; ++e)
      CHECK(conj.component(e)[0] == mu.component(sigma.inverse()(e))[0]);
  }
  SECTION("degree mismatch is rejected") {
    CHECK_THROWS_AS(coho::conjugate_weight(field, Permutation::identity(2), mu), coho::domain_error);
  }
}

TEST_CASE("conjugation by the CM involution swaps pair components") {
  const auto field = ArchField::cm(2);
  const auto mu = Weight::from_components({{2, 1}, {-1, -2}});
  const auto swapped = coho::conjugate_weight(field, field.conjugation(), mu);
  CHECK(swapped == Weight::from_components({{-1, -2}, {2, 1}}));
}

TEST_CASE("parallel weights") {
  CHECK(coho::is_parallel(Weight::parallel(3, {2, 0, -2})));   // a_j + a_{n-j+1} = 0
  CHECK(coho::is_parallel(Weight::parallel(2, {1, 0})));       // constant 1
  CHECK(!coho::is_parallel(Weight::from_components({{2, -2}, {1, -1}})));
  CHECK(!coho::is_parallel(Weight::parallel(2, {3, 1, 0})));   // 3+0 != 1+1
  CHECK(coho::is_parallel(Weight::parallel(4, {0})));          // n = 1 is always self-dual
}

TEST_CASE("central parity is the component sum mod 2") {
  CHECK(coho::central_parity(Weight::from_components({{3, 1}})) == std::vector<int>{0});
  CHECK(coho::central_parity(Weight::from_components({{2, 1}})) == std::vector<int>{1});
  CHECK(coho::central_parity(Weight(2, 1)) == std::vector<int>{0});
  CHECK(coho::central_parity(Weight::from_components({{1, 0}, {-1, -2}})) == std::vector<int>{1, 1});
}

TEST_CASE("base change lift") {
  const auto mu = Weight::from_components({{1, -1}, {2, -2}});

  SECTION("identity restriction") {
    CHECK(coho::base_change_lift(mu, {0, 1}) == mu);
  }
  SECTION("degree-2 extension duplicates components fiberwise") {
    const auto lifted = coho::base_change_lift(mu, {0, 0, 1, 1});
    CHECK(lifted == Weight::from_components({{1, -1}, {1, -1}, {2, -2}, {2, -2}}));
  }
  SECTION("parallel weights lift to parallel weights") {
    const auto par = Weight::parallel(2, {3, 0, -3});
    for (const auto& restriction : {std::vector<int>{0, 1, 1}, std::vector<int>{1, 0, 0, 1}}) {
      const auto lifted = coho::base_change_lift(par, restriction);
      CHECK(coho::is_parallel(lifted));
      CHECK(lifted.degree() == static_cast<int>(restriction.size()));
    }
  }
  SECTION("restriction must land in the base embeddings") {
    CHECK_THROWS_AS(coho::base_change_lift(mu, {0, 2}), coho::domain_error);
    CHECK_THROWS_AS(coho::base_change_lift(mu, {}), coho::domain_error);
  }
}
