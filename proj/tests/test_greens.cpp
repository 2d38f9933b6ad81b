#include <doctest.h>

#include <vector>

#include "regt/greens.hpp"
#include "regt/partition.hpp"
#include "regt/semigroup.hpp"
#include "regt/transformation.hpp"

using regt::Partition;
using regt::Transformation;

namespace {
Transformation t(std::vector<int> img) {
  return Transformation{std::move(img)};
}
Partition const kE22 = Partition::from_block_sizes({2, 2});
}  // namespace

TEST_CASE("L: equal images") {
  CHECK(regt::l_related(t({2, 3, 0, 1}), Transformation::identity(4),
                        kE22));
  CHECK(regt::l_related(t({0, 0, 2, 2}), t({2, 2, 0, 0}), kE22));
  CHECK_FALSE(regt::l_related(t({0, 0, 2, 2}), t({1, 1, 3, 3}), kE22));
}

TEST_CASE("R: equal kernel partitions") {
  CHECK(regt::r_related(t({0, 0, 2, 2}), t({2, 2, 0, 0}), kE22));
  CHECK(regt::r_related(Transformation::identity(4), t({2, 3, 0, 1}),
                        kE22));
  CHECK_FALSE(
      regt::r_related(Transformation::identity(4), t({0, 0, 2, 2}), kE22));
}

TEST_CASE("H = L and R") {
  CHECK(regt::h_related(t({0, 0, 2, 2}), t({2, 2, 0, 0}), kE22));
  Transformation a = t({0, 0, 2, 2});
  CHECK(regt::h_related(a, a, kE22));
  CHECK_FALSE(
      regt::h_related(Transformation::identity(4), t({0, 0, 2, 2}), kE22));
}

TEST_CASE("relations reject non-regular input") {
  // [0,1,0,1] is not even E*-preserving here
  CHECK_THROWS_AS(regt::l_related(t({0, 1, 0, 1}), t({0, 1, 0, 1}), kE22),
                  std::invalid_argument);
}

TEST_CASE("D: witness-producing decision") {
  auto res = regt::d_related(t({0, 0, 2, 2}), t({1, 1, 3, 3}), kE22);
  CHECK(res.related);
  REQUIRE(res.witness.has_value());
  CHECK(res.witness->delta == t({1, 0, 3, 2}));

  CHECK_FALSE(regt::d_related(t({0, 0, 2, 2}), t({1, 0, 2, 2}), kE22)
                  .related);

  Transformation a   = t({0, 0, 2, 2});
  auto           ref = regt::d_related(a, a, kE22);
  CHECK(ref.related);
  REQUIRE(ref.witness.has_value());
  CHECK(regt::is_E_star_preserving(ref.witness->delta, kE22));
}

TEST_CASE("D witness contract holds on every related pair, blocks 2,2") {
  auto r = regt::enumerate(regt::SemigroupKind::RegT, kE22);
  for (auto const& a : r.elements) {
    for (auto const& b : r.elements) {
      auto res = regt::d_related(a, b, kE22);
      if (!res.related) {
        continue;
      }
      REQUIRE(res.witness.has_value());
      Transformation const& d = res.witness->delta;
      CHECK(regt::is_E_star_preserving(d, kE22));
      // restricted to image(a): injective with image exactly image(b)
      std::vector<int> mapped;
      for (int x : regt::image(a)) {
        mapped.push_back(d[x]);
      }
      std::sort(mapped.begin(), mapped.end());
      CHECK(std::adjacent_find(mapped.begin(), mapped.end())
            == mapped.end());
      CHECK(mapped == regt::image(b));
    }
  }
}

TEST_CASE("J examples") {
  Transformation a = t({0, 0, 2, 2});
  CHECK(regt::j_related(a, a, kE22));
  CHECK_FALSE(regt::j_related(a, Transformation::identity(4), kE22));
}

TEST_CASE("J coincides with D on the blocks 2,2 instance") {
  auto r = regt::enumerate(regt::SemigroupKind::RegT, kE22);
  for (auto const& a : r.elements) {
    for (auto const& b : r.elements) {
      CHECK(regt::j_related(a, b, kE22, &r)
            == regt::d_related(a, b, kE22).related);
    }
  }
}

TEST_CASE("derived D profile criterion matches the witness route") {
  for (auto const& e : {Partition::from_block_sizes({2, 2}),
                        Partition::from_block_sizes({1, 3}),
                        Partition::from_block_sizes({2, 3})}) {
    auto r = regt::enumerate(regt::SemigroupKind::RegT, e);
    for (auto const& a : r.elements) {
      for (auto const& b : r.elements) {
        CHECK(regt::d_related_profile(a, b, e)
              == regt::d_related(a, b, e).related);
      }
    }
  }
}
