#include <doctest.h>

#include <algorithm>
#include <vector>

#include "regt/kernel.hpp"
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

TEST_CASE("kernel elements: size and membership") {
  auto kern = regt::kernel_elements(kE22);
  CHECK(kern.size() == 8);  // |I|! * prod |A_i|
  for (auto const& a : kern) {
    CHECK(regt::is_in_kernel(a, kE22));
    // each block collapses to a point
    CHECK(regt::card_vector(a, kE22).r == std::vector<int>{1, 1});
  }
  CHECK_FALSE(regt::is_in_kernel(Transformation::identity(4), kE22));

  // one-block instance of size 3: kernel = the 3 constants
  auto consts = regt::kernel_elements(Partition::universal(3));
  CHECK(consts.size() == 3);
  for (auto const& a : consts) {
    CHECK(regt::rank(a) == 1);
  }
}

TEST_CASE("kernel equals Q(2) of the enumerated instance") {
  auto r = regt::enumerate(regt::SemigroupKind::RegT, kE22);
  auto q = regt::kernel_q2(r);
  std::vector<Transformation> via_q2;
  for (int i : q.members) {
    via_q2.push_back(r.elements[static_cast<std::size_t>(i)]);
  }
  CHECK(via_q2 == regt::kernel_elements(kE22));
}

TEST_CASE("idempotence in the kernel: fixed classes") {
  CHECK(regt::is_idempotent_in_q2(t({0, 0, 2, 2}), kE22));
  CHECK_FALSE(regt::is_idempotent_in_q2(t({2, 2, 0, 0}), kE22));
  CHECK(compose(t({2, 2, 0, 0}), t({2, 2, 0, 0})) == t({0, 0, 2, 2}));

  int idem = 0;
  for (auto const& a : regt::kernel_elements(kE22)) {
    idem += regt::is_idempotent_in_q2(a, kE22) ? 1 : 0;
  }
  CHECK(idem == 4);  // prod |A_i|
}

TEST_CASE("kernel is a right group by both definitions") {
  CHECK(regt::is_right_group(regt::kernel_elements(kE22)));
  CHECK(regt::is_right_group(
      regt::kernel_elements(Partition::from_block_sizes({2, 3}))));
  // a group qualifies
  CHECK(regt::is_right_group(
      {Transformation::identity(4), t({2, 3, 0, 1})}));
  // the whole reg(T) does not (ax = b is not uniquely solvable)
  CHECK_FALSE(regt::is_right_group(
      regt::enumerate(regt::SemigroupKind::RegT, kE22).elements));
}

TEST_CASE("H-class decomposition of the kernel, blocks 2,2") {
  auto groups = regt::h_class_decomposition(kE22);
  REQUIRE(groups.size() == 4);
  bool seen_02 = false;
  for (auto const& g : groups) {
    CHECK(g.elements.size() == 2);  // |I|!
    if (g.cross_section == std::vector<int>{0, 2}) {
      seen_02 = true;
      CHECK(g.identity == t({0, 0, 2, 2}));
      std::vector<Transformation> want{t({0, 0, 2, 2}), t({2, 2, 0, 0})};
      std::vector<Transformation> got = g.elements;
      std::sort(got.begin(), got.end());
      CHECK(got == want);
    }
  }
  CHECK(seen_02);
}

TEST_CASE("H-class decomposition, one block of 3 points") {
  auto groups = regt::h_class_decomposition(Partition::universal(3));
  CHECK(groups.size() == 3);
  for (auto const& g : groups) {
    CHECK(g.elements.size() == 1);  // S_1
    CHECK(g.identity == g.elements.front());
  }
}

TEST_CASE("total kernel size equals the sum of class sizes") {
  for (auto const& e : {Partition::from_block_sizes({2, 2}),
                        Partition::from_block_sizes({2, 3}),
                        Partition::from_block_sizes({2, 2, 2})}) {
    std::size_t total = 0;
    for (auto const& g : regt::h_class_decomposition(e)) {
      total += g.elements.size();
    }
    CHECK(total == regt::kernel_elements(e).size());
  }
}

TEST_CASE("isomorphism-to-full criterion") {
  auto multi = regt::iso_to_full_transformation_criterion(kE22);
  CHECK_FALSE(multi.iso_to_full);
  REQUIRE(multi.non_idempotent_witness.has_value());
  CHECK(*multi.non_idempotent_witness == t({2, 2, 0, 0}));

  CHECK(regt::iso_to_full_transformation_criterion(
            Partition::universal(3))
            .iso_to_full);
  CHECK(regt::iso_to_full_transformation_criterion(
            Partition::universal(1))
            .iso_to_full);
}
