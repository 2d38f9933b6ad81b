#include <doctest.h>

#include <algorithm>
#include <vector>

#include "regt/cayley.hpp"
#include "regt/kernel.hpp"
#include "regt/partition.hpp"
#include "regt/semigroup.hpp"
#include "regt/transformation.hpp"

using regt::CayleyTable;
using regt::Partition;
using regt::Transformation;

TEST_CASE("table ingestion rejects non-associative tables") {
  // 0*(0*1) = 1 but (0*0)*1 = 0
  CHECK_THROWS_WITH_AS(
      CayleyTable(2, {{1, 0}, {0, 0}}, {}),
      doctest::Contains("associative at triple"), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(2, {{0, 2}, {1, 0}}, {}),
                  std::invalid_argument);
}

TEST_CASE("right-group recognition") {
  CHECK(regt::is_right_group(regt::tables::right_zero(2)));
  CHECK(regt::is_right_group(regt::tables::cyclic_group(5)));
  auto bad = regt::check_right_group(regt::tables::left_zero(2));
  CHECK_FALSE(bad.ok);
  REQUIRE(bad.bad_pair.has_value());
  // the witness pair really has no unique solution
  auto [a, b] = *bad.bad_pair;
  int  count  = 0;
  for (int x = 0; x < 2; ++x) {
    count += (regt::tables::left_zero(2).at(a, x) == b) ? 1 : 0;
  }
  CHECK(count != 1);
  CHECK_FALSE(regt::is_right_group(regt::tables::chain_semilattice_2()));
}

TEST_CASE("analyze: right-zero semigroup") {
  auto a = regt::analyze_right_group(regt::tables::right_zero(2));
  CHECK(a.idempotents == std::vector<int>{0, 1});
  CHECK(a.classes.size() == 1);  // one class [s] = S
  CHECK(a.induced == Partition(2, {{0, 1}}));
}

TEST_CASE("analyze: cyclic group Z3") {
  auto a = regt::analyze_right_group(regt::tables::cyclic_group(3));
  CHECK(a.idempotents == std::vector<int>{0});
  CHECK(a.classes.size() == 3);  // singleton classes
  CHECK(a.induced == Partition::discrete(3));
}

TEST_CASE("analyze: Z2 x R2") {
  CayleyTable s = regt::make_right_group(regt::tables::cyclic_group(2), 2);
  auto        a = regt::analyze_right_group(s);
  CHECK(a.idempotents.size() == 2);
  CHECK(a.classes.size() == 2);
  for (auto const& c : a.classes) {
    CHECK(c.size() == 2);
  }
  // xe_i = x inside Se_i; e_i e_j = e_j throughout
  for (std::size_t i = 0; i < a.subgroups.size(); ++i) {
    for (int x : a.subgroups[i]) {
      CHECK(s.at(x, a.idempotents[i]) == x);
    }
  }
  for (int e : a.idempotents) {
    for (int f : a.idempotents) {
      CHECK(s.at(e, f) == f);
    }
  }
}

TEST_CASE("make_right_group basics") {
  CayleyTable r2 = regt::make_right_group(regt::tables::trivial_group(), 2);
  CHECK(r2.table == regt::tables::right_zero(2).table);
  CayleyTable z2 = regt::make_right_group(regt::tables::cyclic_group(2), 1);
  CHECK(z2.table == regt::tables::cyclic_group(2).table);
  CHECK_THROWS_AS(regt::make_right_group(regt::tables::right_zero(2), 1),
                  std::invalid_argument);
}

TEST_CASE("regular representation") {
  CayleyTable r2 = regt::tables::right_zero(2);
  CHECK(regt::regular_representation(r2, 0)
        == Transformation{std::vector<int>{0, 0}});
  CHECK(regt::regular_representation(r2, 1)
        == Transformation{std::vector<int>{1, 1}});
  CayleyTable z3 = regt::tables::cyclic_group(3);
  CHECK(regt::regular_representation(z3, 1)
        == Transformation{std::vector<int>{1, 2, 0}});
}

TEST_CASE("embedding: right-zero semigroup maps to constants") {
  auto emb = regt::embed(regt::tables::right_zero(2));
  CHECK(emb.report.ok());
  CHECK(emb.E == Partition(2, {{0, 1}}));
  CHECK(emb.psi[0] == Transformation{std::vector<int>{0, 0}});
  CHECK(emb.psi[1] == Transformation{std::vector<int>{1, 1}});
}

TEST_CASE("embedding: a group embeds by Cayley permutations") {
  auto emb = regt::embed(regt::tables::cyclic_group(3));
  CHECK(emb.report.ok());
  CHECK(emb.E == Partition::discrete(3));
  for (auto const& rho : emb.psi) {
    CHECK(regt::rank(rho) == 3);  // permutations
  }
}

TEST_CASE("embedding: Z2 x R2 lands inside the 8-element kernel") {
  CayleyTable s = regt::make_right_group(regt::tables::cyclic_group(2), 2);
  auto        emb = regt::embed(s);
  CHECK(emb.report.ok());
  CHECK(emb.E.num_blocks() == 2);
  auto kern = regt::kernel_elements(emb.E);
  CHECK(kern.size() == 8);
  std::vector<Transformation> distinct = emb.psi;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  CHECK(distinct.size() == 4);
  for (auto const& rho : emb.psi) {
    CHECK(std::find(kern.begin(), kern.end(), rho) != kern.end());
  }
}

TEST_CASE("embedding refuses non-right-groups with a witness") {
  CHECK_THROWS_AS(regt::embed(regt::tables::left_zero(2)),
                  regt::NotRightGroupError);
  try {
    regt::embed(regt::tables::chain_semilattice_2());
    FAIL("expected NotRightGroupError");
  } catch (regt::NotRightGroupError const& ex) {
    CHECK(ex.solution_count != 1);
  }
}

TEST_CASE("embedded copy is closed and reproduces the table") {
  for (int k = 1; k <= 3; ++k) {
    CayleyTable s =
        regt::make_right_group(regt::tables::cyclic_group(2), k);
    auto emb = regt::embed(s);
    for (int x = 0; x < s.order; ++x) {
      for (int y = 0; y < s.order; ++y) {
        CHECK(compose(emb.psi[static_cast<std::size_t>(x)],
                      emb.psi[static_cast<std::size_t>(y)])
              == emb.psi[static_cast<std::size_t>(s.at(x, y))]);
      }
    }
  }
}
