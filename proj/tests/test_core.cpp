#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "regt/partition.hpp"
#include "regt/predicates.hpp"
#include "regt/transformation.hpp"

using regt::Partition;
using regt::Transformation;

namespace {
Transformation t(std::vector<int> img) {
  return Transformation{std::move(img)};
}
}  // namespace

TEST_CASE("partition canonical form and lookups") {
  Partition e(4, {{2, 3}, {1, 0}});
  CHECK(e.num_blocks() == 2);
  CHECK(e.block(0) == std::vector<int>{0, 1});  // reordered by least element
  CHECK(e.block(1) == std::vector<int>{2, 3});
  CHECK(e.class_of(0) == 0);
  CHECK(e.class_of(3) == 1);
  CHECK(e == Partition(4, {{0, 1}, {2, 3}}));

  CHECK(Partition::universal(3).num_blocks() == 1);
  CHECK(Partition::discrete(3).num_blocks() == 3);
  CHECK(Partition::from_block_sizes({2, 2}) == e);
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition(4, {{0, 1}, {1, 2, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(4, {{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(0, {}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(2, {{0, 1}, {}}), std::invalid_argument);
}

TEST_CASE("compose evaluates left to right") {
  Transformation id = Transformation::identity(4);
  Transformation a  = t({2, 3, 0, 1});
  CHECK(compose(id, a) == a);
  CHECK(compose(a, id) == a);
  CHECK(compose(t({2, 3, 0, 1}), t({0, 0, 2, 2})) == t({2, 2, 0, 0}));
  CHECK(compose(t({2, 2, 0, 0}), t({2, 2, 0, 0})) == t({0, 0, 2, 2}));
}

TEST_CASE("compose is associative on random triples") {
  std::mt19937                       rng(7);
  std::uniform_int_distribution<int> point(0, 4);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<int> x(5), y(5), z(5);
    for (int i = 0; i < 5; ++i) {
      x[static_cast<std::size_t>(i)] = point(rng);
      y[static_cast<std::size_t>(i)] = point(rng);
      z[static_cast<std::size_t>(i)] = point(rng);
    }
    Transformation a = t(x), b = t(y), c = t(z);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
  }
}

TEST_CASE("image and rank") {
  CHECK(regt::image(t({0, 0, 2, 2})) == std::vector<int>{0, 2});
  CHECK(regt::image(Transformation::identity(4))
        == std::vector<int>{0, 1, 2, 3});
  CHECK(regt::image(t({1, 1, 1, 1})) == std::vector<int>{1});
  CHECK(regt::rank(t({1, 1, 1, 1})) == 1);
}

TEST_CASE("kernel data: fibers and star map") {
  auto kd = regt::kernel_data(t({0, 0, 2, 2}));
  CHECK(kd.classes
        == std::vector<std::vector<int>>{{0, 1}, {2, 3}});
  CHECK(kd.star_map == std::vector<int>{0, 2});

  auto kid = regt::kernel_data(Transformation::identity(3));
  CHECK(kid.classes == std::vector<std::vector<int>>{{0}, {1}, {2}});

  auto kc = regt::kernel_data(t({1, 1, 1, 1}));
  CHECK(kc.classes == std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(kc.star_map == std::vector<int>{1});

  // two points share a fiber iff they have equal images
  Transformation a = t({2, 0, 2, 1});
  auto           ka = regt::kernel_data(a);
  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      bool same_fiber = false;
      for (auto const& f : ka.classes) {
        bool hx = std::find(f.begin(), f.end(), x) != f.end();
        bool hy = std::find(f.begin(), f.end(), y) != f.end();
        same_fiber = same_fiber || (hx && hy);
      }
      CHECK(same_fiber == (a[x] == a[y]));
    }
  }
}

TEST_CASE("E-preservation, one direction") {
  Partition e = Partition::from_block_sizes({2, 2});
  CHECK(regt::is_E_preserving(t({0, 1, 0, 1}), e));
  CHECK_FALSE(regt::is_E_preserving(t({0, 2, 0, 2}), e));
  CHECK(regt::is_E_preserving(Transformation::identity(4), e));
}

TEST_CASE("E*-preservation, both directions") {
  Partition e = Partition::from_block_sizes({2, 2});
  CHECK_FALSE(regt::is_E_star_preserving(t({0, 1, 0, 1}), e));
  CHECK(regt::is_E_star_preserving(t({2, 3, 0, 1}), e));
  CHECK(regt::is_E_star_preserving(t({1, 0, 2, 2}), e));
}

TEST_CASE("E*-preservation agrees with the pairwise oracle on all maps") {
  for (auto const& e : {Partition::from_block_sizes({2, 2}),
                        Partition::from_block_sizes({1, 3}),
                        Partition::universal(4),
                        Partition::discrete(4)}) {
    std::vector<int> img(4, 0);
    for (;;) {
      Transformation a{img};
      CHECK(regt::is_E_star_preserving(a, e)
            == regt::is_E_star_preserving_pairwise(a, e));
      int pos = 0;
      while (pos < 4 && img[static_cast<std::size_t>(pos)] == 3) {
        img[static_cast<std::size_t>(pos)] = 0;
        ++pos;
      }
      if (pos == 4) {
        break;
      }
      img[static_cast<std::size_t>(pos)] += 1;
    }
  }
}

TEST_CASE("induced class map") {
  Partition e = Partition::from_block_sizes({2, 2});
  CHECK(regt::induced_class_map(t({2, 2, 0, 0}), e)
        == std::vector<int>{1, 0});
  CHECK(regt::induced_class_map(Transformation::identity(4), e)
        == std::vector<int>{0, 1});
  CHECK(regt::induced_class_map(t({1, 0, 2, 2}), e)
        == std::vector<int>{0, 1});
}

TEST_CASE("Z(a): classes missed by the image") {
  Partition e = Partition::from_block_sizes({2, 2});
  CHECK(regt::z_set(t({0, 0, 0, 0}), e) == std::vector<int>{1});
  CHECK(regt::z_set(Transformation::identity(4), e).empty());
}

TEST_CASE("regularity criterion examples") {
  Partition      e = Partition::from_block_sizes({2, 2});
  Transformation a = t({2, 3, 0, 1});
  CHECK(regt::is_regular_element(a, e));
  CHECK(compose(compose(a, a), a) == a);  // involution witnesses itself
  Transformation b = t({0, 0, 2, 2});
  CHECK(regt::is_regular_element(b, e));
  CHECK(compose(compose(b, b), b) == b);  // idempotent witnesses itself
}
