#include <doctest.h>

#include <set>
#include <vector>

#include "regt/budget.hpp"
#include "regt/partition.hpp"
#include "regt/semigroup.hpp"
#include "regt/transformation.hpp"

using regt::Partition;
using regt::SemigroupKind;
using regt::Transformation;

namespace {
Transformation t(std::vector<int> img) {
  return Transformation{std::move(img)};
}
}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(regt::enumerate(SemigroupKind::T, Partition::universal(2)).size()
        == 4);
  Partition e22 = Partition::from_block_sizes({2, 2});
  auto      s22 = regt::enumerate(SemigroupKind::T_Estar, e22);
  CHECK(s22.size() == 32);
  CHECK(regt::enumerate(SemigroupKind::RegT, e22).elements
        == s22.elements);

  // product construction count = sum over sigma of prod |A_{i sigma}|^|A_i|
  CHECK(regt::enumerate(SemigroupKind::T_Estar,
                        Partition::from_block_sizes({2, 3}))
            .size()
        == 180);
  CHECK(regt::enumerate(SemigroupKind::T_Estar,
                        Partition::from_block_sizes({2, 2, 2}))
            .size()
        == 384);
  CHECK(regt::enumerate(SemigroupKind::T_Estar,
                        Partition::from_block_sizes({3, 3}))
            .size()
        == 1458);
  CHECK(regt::enumerate(SemigroupKind::T_Estar,
                        Partition::from_block_sizes({2, 4}))
            .size()
        == 1280);
}

TEST_CASE("enumeration agrees with the filtered full sweep") {
  Partition e   = Partition::from_block_sizes({2, 2});
  auto      all = regt::enumerate(SemigroupKind::T, e);
  std::vector<Transformation> filtered;
  for (auto const& a : all.elements) {
    if (regt::is_E_star_preserving(a, e)) {
      filtered.push_back(a);
    }
  }
  CHECK(filtered == regt::enumerate(SemigroupKind::T_Estar, e).elements);
}

TEST_CASE("closure") {
  Partition e = Partition::from_block_sizes({2, 2});
  auto      c1 = regt::closure({Transformation::identity(4)}, e);
  CHECK(c1.size() == 1);

  auto c2 = regt::closure({t({2, 3, 0, 1})}, e);
  CHECK(c2.size() == 2);
  CHECK(c2.contains(Transformation::identity(4)));

  auto c3 = regt::closure({t({2, 2, 0, 0})}, e);
  CHECK(c3.elements
        == std::vector<Transformation>{t({0, 0, 2, 2}), t({2, 2, 0, 0})});
}

TEST_CASE("greens oracle: structural properties") {
  Partition e = Partition::from_block_sizes({2, 2});
  auto      r = regt::enumerate(SemigroupKind::RegT, e);
  auto      g = regt::greens_oracle_all(r);
  int const m = static_cast<int>(r.size());
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // H = L and R
      CHECK(g.H.same_class(i, j)
            == (g.L.same_class(i, j) && g.R.same_class(i, j)));
      // L, R below D, D below J
      if (g.L.same_class(i, j) || g.R.same_class(i, j)) {
        CHECK(g.D.same_class(i, j));
      }
      if (g.D.same_class(i, j)) {
        CHECK(g.J.same_class(i, j));
      }
    }
  }
  // D = J on finite semigroups
  CHECK(g.D.class_of == g.J.class_of);
}

TEST_CASE("greens oracle: a group is a single class in every relation") {
  Partition e = Partition::from_block_sizes({2, 2});
  auto      grp = regt::closure({t({2, 3, 0, 1})}, e);
  auto      g   = regt::greens_oracle_all(grp);
  CHECK(g.L.classes.size() == 1);
  CHECK(g.R.classes.size() == 1);
  CHECK(g.H.classes.size() == 1);
  CHECK(g.D.classes.size() == 1);
  CHECK(g.J.classes.size() == 1);
}

TEST_CASE("R-class count equals the kernel-partition census") {
  Partition e = Partition::from_block_sizes({2, 2});
  auto      r = regt::enumerate(SemigroupKind::RegT, e);
  auto      g = regt::greens_oracle(r, regt::GreensRelation::R);
  std::set<std::vector<std::vector<int>>> kernels;
  for (auto const& a : r.elements) {
    kernels.insert(regt::kernel_data(a).classes);
  }
  CHECK(g.classes.size() == kernels.size());
}

TEST_CASE("is_ideal") {
  Partition e = Partition::from_block_sizes({2, 2});
  auto      r = regt::enumerate(SemigroupKind::RegT, e);
  std::vector<int> whole(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    whole[i] = static_cast<int>(i);
  }
  CHECK(regt::is_ideal(r, whole));
  CHECK_FALSE(
      regt::is_ideal(r, {r.index_of(Transformation::identity(4))}));
  CHECK_FALSE(regt::is_ideal(r, {}));
}

TEST_CASE("budget limits raise CapacityError") {
  regt::Budget tight;
  tight.max_ground_size = 3;
  CHECK_THROWS_AS(regt::enumerate(SemigroupKind::T,
                                  Partition::universal(4), tight),
                  regt::CapacityError);
  regt::Budget small;
  small.max_elements = 10;
  CHECK_THROWS_AS(regt::enumerate(SemigroupKind::T_Estar,
                                  Partition::from_block_sizes({2, 2}),
                                  small),
                  regt::CapacityError);
}

TEST_CASE("budget parses the environment override format") {
  regt::Budget b = regt::Budget::parse("n=8,elements=500,oracle=100,ideals=9");
  CHECK(b.max_ground_size == 8);
  CHECK(b.max_elements == 500);
  CHECK(b.max_oracle_elements == 100);
  CHECK(b.max_principal_ideals == 9);
}
