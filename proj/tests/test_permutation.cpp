#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <vector>

#include "coho/permutation.hpp"

using coho::Permutation;

namespace {

// Independent enumeration of all of Sym(d) via std::next_permutation.
std::vector<Permutation> full_symmetric_group(int d) {
  std::vector<int> img(d);
  std::iota(img.begin(), img.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

} // namespace

TEST_CASE("permutation construction validates image vectors") {
  CHECK_THROWS_AS(Permutation({0, 0}), coho::domain_error);
  CHECK_THROWS_AS(Permutation({1, 2}), coho::domain_error);
  CHECK(Permutation::identity(3).is_identity());
  CHECK(Permutation::from_cycles(3, {{1, 2}}) == Permutation({0, 2, 1}));
  CHECK(Permutation::from_cycles(4, {{0, 1}, {2, 3}}).is_involution());
}

TEST_CASE("composition, inverse and fixed points") {
  const Permutation s = Permutation::from_cycles(3, {{0, 1, 2}});
  const Permutation t = Permutation::from_cycles(3, {{1, 2}});
  CHECK((s * s * s).is_identity());
  CHECK((s * t)(0) == s(t(0)));
  CHECK((s * s.inverse()).is_identity());
  CHECK(t.fixed_points() == 1);
  CHECK(Permutation::identity(5).fixed_points() == 5);
  CHECK_THROWS_AS(s * Permutation::identity(4), coho::domain_error);

  for (const auto& g : full_symmetric_group(4)) {
    CHECK((g * g.inverse()).is_identity());
    CHECK((g.inverse() * g).is_identity());
  }
}

TEST_CASE("group closure of {(0 1)} is {id, (0 1)}") {
  const std::vector<Permutation> gens{Permutation::from_cycles(2, {{0, 1}})};
  const auto group = coho::group_closure(gens, 2);
  REQUIRE(group.size() == 2);
  CHECK(group[0].is_identity());
  CHECK(group[1] == gens[0]);
}

TEST_CASE("group closure of {(0 1 2), (1 2)} is S3") {
  const std::vector<Permutation> gens{Permutation::from_cycles(3, {{0, 1, 2}}),
                                      Permutation::from_cycles(3, {{1, 2}})};
  const auto group = coho::group_closure(gens, 3);
  auto expected = full_symmetric_group(3);
  std::sort(expected.begin(), expected.end());
  REQUIRE(group.size() == 6);
  CHECK(group == expected);
  CHECK(group.front().is_identity()); // identity is lexicographically least
}

TEST_CASE("empty generator list closes to the trivial group") {
  const auto group = coho::group_closure(std::vector<Permutation>{}, 4);
  REQUIRE(group.size() == 1);
  CHECK(group[0].is_identity());
}

TEST_CASE("closure is closed under composition and inverse") {
  const std::vector<std::vector<Permutation>> generator_sets{
      {Permutation::from_cycles(4, {{0, 1, 2, 3}})},
      {Permutation::from_cycles(4, {{0, 1}, {2, 3}}), Permutation::from_cycles(4, {{0, 2}, {1, 3}})},
      {Permutation::from_cycles(4, {{0, 1, 2, 3}}), Permutation::from_cycles(4, {{0, 1}})},
      {Permutation::from_cycles(3, {{0, 1, 2}}), Permutation::from_cycles(3, {{1, 2}})},
  };
  for (const auto& gens : generator_sets) {
    const auto group = coho::group_closure(gens, gens[0].degree());
    REQUIRE(group.size() <= 24);
    for (const auto& a : group) {
      CHECK(coho::group_contains(group, a.inverse()));
      for (const auto& b : group)
        CHECK(coho::group_contains(group, a * b));
    }
  }
}

TEST_CASE("closure respects the element cap") {
  const std::vector<Permutation> gens{Permutation::from_cycles(4, {{0, 1, 2, 3}}),
                                      Permutation::from_cycles(4, {{0, 1}})};
  CHECK_THROWS_AS(coho::group_closure(gens, 4, 10), coho::resource_error);
  CHECK(coho::group_closure(gens, 4, 24).size() == 24);
}

TEST_CASE("transitivity detection") {
  const std::vector<Permutation> cyclic{Permutation::from_cycles(3, {{0, 1, 2}})};
  CHECK(coho::acts_transitively(cyclic, 3));
  const std::vector<Permutation> fixing{Permutation::from_cycles(3, {{1, 2}})};
  CHECK(!coho::acts_transitively(fixing, 3));
  CHECK(!coho::acts_transitively(std::vector<Permutation>{}, 2));
}
