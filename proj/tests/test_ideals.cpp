#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "regt/ideals.hpp"
#include "regt/partition.hpp"
#include "regt/semigroup.hpp"
#include "regt/transformation.hpp"

using regt::CardinalVector;
using regt::Partition;
using regt::Transformation;
using regt::VectorContext;

namespace {
Transformation t(std::vector<int> img) {
  return Transformation{std::move(img)};
}
Partition const kE22 = Partition::from_block_sizes({2, 2});

CardinalVector sizes(std::vector<int> v) {
  return CardinalVector{std::move(v), VectorContext::ImageSizes};
}
CardinalVector bound(std::vector<int> v) {
  return CardinalVector{std::move(v), VectorContext::BoundVector};
}
}  // namespace

TEST_CASE("card vectors") {
  CHECK(regt::card_vector(t({0, 0, 2, 2}), kE22).r
        == std::vector<int>{1, 1});
  CHECK(regt::card_vector(t({1, 0, 2, 2}), kE22).r
        == std::vector<int>{2, 1});
  CHECK(regt::card_vector(Transformation::identity(4), kE22).r
        == std::vector<int>{2, 2});
}

TEST_CASE("bound vector validation") {
  CHECK_NOTHROW(regt::validate_bound_vector(bound({2, 3}), kE22));
  CHECK_THROWS_WITH_AS(regt::validate_bound_vector(bound({1, 3}), kE22),
                       doctest::Contains("index 0"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(regt::validate_bound_vector(bound({2, 4}), kE22),
                       doctest::Contains("index 1"),
                       std::invalid_argument);
  CHECK_THROWS_AS(regt::validate_bound_vector(bound({2}), kE22),
                  std::invalid_argument);
}

TEST_CASE("dominance examples") {
  auto w = regt::dominance_exists(sizes({1, 1}), sizes({2, 1}), false);
  REQUIRE(w.has_value());
  CHECK_FALSE(
      regt::dominance_exists(sizes({2, 1}), sizes({1, 1}), false));
  // any returned permutation is an actual witness
  std::vector<int> const a{1, 1}, b{2, 1};
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a[i] <= b[static_cast<std::size_t>((*w)[i])]);
  }
}

TEST_CASE("dominance: sorted-greedy equals the factorial search") {
  for (int a0 = 1; a0 <= 3; ++a0) {
    for (int a1 = 1; a1 <= 3; ++a1) {
      for (int b0 = 1; b0 <= 3; ++b0) {
        for (int b1 = 1; b1 <= 3; ++b1) {
          for (bool strict : {false, true}) {
            CHECK(regt::dominance_exists(sizes({a0, a1}), sizes({b0, b1}),
                                         strict)
                      .has_value()
                  == regt::dominance_exists_allperms(sizes({a0, a1}),
                                                     sizes({b0, b1}),
                                                     strict)
                         .has_value());
          }
        }
      }
    }
  }
}

TEST_CASE("divisibility examples") {
  CHECK(regt::divides(t({0, 0, 2, 2}), t({1, 0, 2, 2}), kE22));
  CHECK_FALSE(regt::divides(t({1, 0, 2, 2}), t({0, 0, 2, 2}), kE22));
  CHECK(regt::divides(t({1, 0, 2, 2}), t({1, 0, 2, 2}), kE22));
}

TEST_CASE("factorization recomposes") {
  Transformation a = t({0, 0, 2, 2});
  Transformation b = t({1, 0, 2, 2});
  auto [lambda, mu] = regt::construct_factorization(a, b, kE22);
  CHECK(compose(compose(lambda, b), mu) == a);

  auto [l2, m2] = regt::construct_factorization(a, a, kE22);
  CHECK(compose(compose(l2, a), m2) == a);
}

TEST_CASE("q_set sizes on blocks 2,2") {
  auto r = regt::enumerate(regt::SemigroupKind::RegT, kE22);
  CHECK(regt::q_set(bound({2, 2}), r).members.size() == 8);
  CHECK(regt::q_set(bound({3, 3}), r).members.size() == 32);
  // r=(2,3): exactly the elements strictly dominated under a permutation
  auto q23 = regt::q_set(bound({2, 3}), r);
  for (std::size_t i = 0; i < r.size(); ++i) {
    bool in = std::binary_search(q23.members.begin(), q23.members.end(),
                                 static_cast<int>(i));
    CHECK(in
          == regt::dominance_exists_allperms(
                 regt::card_vector(r.elements[i], kE22), bound({2, 3}),
                 true)
                 .has_value());
  }
  CHECK(regt::is_ideal(r, q23.members));
}

TEST_CASE("principal ideals") {
  auto r = regt::enumerate(regt::SemigroupKind::RegT, kE22);
  auto p = regt::principal_ideal(t({0, 0, 2, 2}), r);
  CHECK(p.members == regt::kernel_q2(r).members);
  CHECK(p.members.size() == 8);
  auto whole = regt::principal_ideal(Transformation::identity(4), r);
  CHECK(whole.members.size() == 32);
}

TEST_CASE("kernel q2 facts") {
  auto r = regt::enumerate(regt::SemigroupKind::RegT, kE22);
  auto k = regt::kernel_q2(r);
  CHECK(k.members.size() == 8);  // |I|! * prod |A_i| = 2 * 4
  for (auto const& w : regt::enumerate_ideals(r)) {
    CHECK(std::includes(w.members.begin(), w.members.end(),
                        k.members.begin(), k.members.end()));
  }
}

TEST_CASE("ideal enumeration and principality, blocks 2,2") {
  auto r      = regt::enumerate(regt::SemigroupKind::RegT, kE22);
  auto ideals = regt::enumerate_ideals(r);
  // Q(2) is the unique minimum of the family
  auto k = regt::kernel_q2(r);
  int  minima = 0;
  for (auto const& w : ideals) {
    minima += (w.members == k.members) ? 1 : 0;
  }
  CHECK(minima == 1);
  for (auto const& w : ideals) {
    CHECK(regt::is_ideal(r, w.members));
  }
}

TEST_CASE("a genuine non-principal union exists on blocks 2,3") {
  Partition e = Partition::from_block_sizes({2, 3});
  auto      r = regt::enumerate(regt::SemigroupKind::RegT, e);
  auto      ideals = regt::enumerate_ideals(r);
  bool      found_non_principal = false;
  for (auto const& w : ideals) {
    auto [principal, gen] = regt::is_principal(w, r);
    if (!principal) {
      found_non_principal = true;
      CHECK_FALSE(gen.has_value());
    } else {
      REQUIRE(gen.has_value());
      CHECK(regt::principal_ideal(*gen, r).members == w.members);
    }
  }
  CHECK(found_non_principal);
}
