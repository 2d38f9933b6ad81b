#ifndef REGT_KERNEL_HPP_
#define REGT_KERNEL_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "budget.hpp"
#include "ideals.hpp"
#include "partition.hpp"
#include "predicates.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace regt {

namespace detail {

inline bool closed_under_compose(std::vector<Transformation> const& elems) {
  std::vector<Transformation> sorted = elems;
  sort_unique(sorted);
  for (auto const& a : sorted) {
    for (auto const& b : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), compose(a, b))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

// Right group test by unique solvability of a x = b, cross-checked
// against the equivalent (regular and left cancellative) description.
inline bool is_right_group(std::vector<Transformation> const& elems) {
  if (elems.empty()) {
    throw std::invalid_argument("is_right_group: empty element set");
  }
  if (!detail::closed_under_compose(elems)) {
    throw std::invalid_argument(
        "is_right_group: element set is not closed under composition");
  }
  bool unique_solvable = true;
  for (auto const& a : elems) {
    for (auto const& b : elems) {
      int solutions = 0;
      for (auto const& x : elems) {
        if (compose(a, x) == b) {
          ++solutions;
        }
      }
      if (solutions != 1) {
        unique_solvable = false;
        break;
      }
    }
    if (!unique_solvable) {
      break;
    }
  }

  bool regular = true;
  for (auto const& a : elems) {
    bool has = false;
    for (auto const& x : elems) {
      if (compose(compose(a, x), a) == a) {
        has = true;
        break;
      }
    }
    if (!has) {
      regular = false;
      break;
    }
  }
  bool left_cancellative = true;
  for (auto const& c : elems) {
    std::vector<Transformation> products;
    for (auto const& a : elems) {
      products.push_back(compose(c, a));
    }
    std::sort(products.begin(), products.end());
    if (std::adjacent_find(products.begin(), products.end())
        != products.end()) {
      left_cancellative = false;
      break;
    }
  }
  if (unique_solvable != (regular && left_cancellative)) {
    throw std::logic_error(
        "is_right_group: the two right-group criteria disagree");
  }
  return unique_solvable;
}

// Direct generation of Q(2): for each permutation sigma of the block
// indices, each choice of one target point per block.  Size
// |I|! * prod |A_i|.
inline std::vector<Transformation> kernel_elements(Partition const& E) {
  int const        k = E.num_blocks();
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);
  std::vector<Transformation> out;
  do {
    std::vector<int> choice(static_cast<std::size_t>(k), 0);
    while (true) {
      std::vector<int> img(static_cast<std::size_t>(E.size()));
      for (int i = 0; i < k; ++i) {
        int target = sigma[static_cast<std::size_t>(i)];
        int point  = E.block(target)[static_cast<std::size_t>(
            choice[static_cast<std::size_t>(i)])];
        for (int x : E.block(i)) {
          img[static_cast<std::size_t>(x)] = point;
        }
      }
      out.push_back(Transformation(std::move(img)));
      int pos = k - 1;
      while (pos >= 0
             && choice[static_cast<std::size_t>(pos)]
                    == E.block_size(sigma[static_cast<std::size_t>(pos)]) - 1) {
        choice[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++choice[static_cast<std::size_t>(pos)];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  detail::sort_unique(out);
  return out;
}

inline bool is_in_kernel(Transformation const& a, Partition const& E) {
  if (!is_E_star_preserving(a, E) || !z_set(a, E).empty()) {
    return false;
  }
  for (int v : card_vector(a, E).r) {
    if (v != 1) {
      return false;
    }
  }
  return true;
}

// Idempotence in Q(2), computed both as a a = a and by the class-fixing
// criterion A_i a contained in A_i; the two must agree.
inline bool is_idempotent_in_q2(Transformation const& a,
                                Partition const&      E) {
  if (!is_in_kernel(a, E)) {
    throw std::invalid_argument("is_idempotent_in_q2: element not in Q(2)");
  }
  bool by_square = (compose(a, a) == a);
  bool by_classes = true;
  for (int i = 0; i < E.num_blocks(); ++i) {
    if (E.class_of(a[E.block(i).front()]) != i) {
      by_classes = false;
      break;
    }
  }
  if (by_square != by_classes) {
    throw std::logic_error(
        "is_idempotent_in_q2: square test and class-fixing test disagree");
  }
  return by_square;
}

// One H-class of Q(2): all kernel elements sharing a cross-section as
// image, a group isomorphic to the symmetric group on that cross-section.
struct HClassGroup {
  std::vector<int>              cross_section;  // sorted shared image
  std::vector<Transformation>   elements;
  Transformation                identity;
  // perm_table[k][j]: position in cross_section of elements[k] applied to
  // cross_section[j]; the isomorphism onto Sym(cross_section)
  std::vector<std::vector<int>> perm_table;
};

// Partitions Q(2) by image and certifies the group structure of every
// class.  The symmetric-group isomorphism is materialized in full for
// |I| <= 6 and spot-checked on random pairs above that.
inline std::vector<HClassGroup> h_class_decomposition(Partition const& E,
                                                      unsigned seed = 0) {
  std::map<std::vector<int>, std::vector<Transformation>> by_image;
  for (auto& a : kernel_elements(E)) {
    by_image[image(a)].push_back(std::move(a));
  }
  std::vector<HClassGroup> out;
  for (auto& [cs, members] : by_image) {
    // locate the identity by squaring-scan; it is the unique idempotent
    std::optional<Transformation> identity;
    for (auto const& m : members) {
      if (compose(m, m) == m) {
        if (identity) {
          throw std::logic_error(
              "h_class_decomposition: two idempotents in one H-class");
        }
        identity = m;
      }
    }
    if (!identity) {
      throw std::logic_error(
          "h_class_decomposition: H-class without idempotent");
    }
    for (auto const& m : members) {
      if (compose(*identity, m) != m || compose(m, *identity) != m) {
        throw std::logic_error(
            "h_class_decomposition: identity fails in its class");
      }
      bool has_inverse = false;
      for (auto const& inv : members) {
        if (compose(m, inv) == *identity && compose(inv, m) == *identity) {
          has_inverse = true;
          break;
        }
      }
      if (!has_inverse) {
        throw std::logic_error(
            "h_class_decomposition: member without inverse");
      }
    }

    // restriction to the cross-section as a permutation
    std::vector<std::vector<int>> perms;
    for (auto const& m : members) {
      std::vector<int> p;
      for (int x : cs) {
        auto it = std::lower_bound(cs.begin(), cs.end(), m[x]);
        if (it == cs.end() || *it != m[x]) {
          throw std::logic_error(
              "h_class_decomposition: member does not permute its "
              "cross-section");
        }
        p.push_back(static_cast<int>(it - cs.begin()));
      }
      perms.push_back(std::move(p));
    }

    std::size_t const k = cs.size();
    if (k <= 6) {
      // surjectivity: the restriction map hits every permutation
      std::vector<std::vector<int>> all;
      std::vector<int>              p(k);
      std::iota(p.begin(), p.end(), 0);
      do {
        all.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::vector<std::vector<int>> got = perms;
      std::sort(got.begin(), got.end());
      got.erase(std::unique(got.begin(), got.end()), got.end());
      if (got != all) {
        throw std::logic_error(
            "h_class_decomposition: restriction map is not a bijection "
            "onto Sym(cross-section)");
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = 0; j < members.size(); ++j) {
          Transformation prod = compose(members[i], members[j]);
          auto it = std::find(members.begin(), members.end(), prod);
          if (it == members.end()) {
            throw std::logic_error(
                "h_class_decomposition: class not closed");
          }
          std::vector<int> expect(k);
          for (std::size_t t = 0; t < k; ++t) {
            expect[t] = perms[j][static_cast<std::size_t>(perms[i][t])];
          }
          if (perms[static_cast<std::size_t>(it - members.begin())]
              != expect) {
            throw std::logic_error(
                "h_class_decomposition: restriction map is not a "
                "homomorphism");
          }
        }
      }
    } else {
      std::mt19937 rng(seed);
      std::uniform_int_distribution<std::size_t> pick(0, members.size() - 1);
      for (int trial = 0; trial < 1000; ++trial) {
        std::size_t    i = pick(rng), j = pick(rng);
        Transformation prod = compose(members[i], members[j]);
        auto it = std::find(members.begin(), members.end(), prod);
        if (it == members.end()) {
          throw std::logic_error("h_class_decomposition: class not closed");
        }
        for (std::size_t t = 0; t < k; ++t) {
          if (perms[static_cast<std::size_t>(it - members.begin())][t]
              != perms[j][static_cast<std::size_t>(perms[i][t])]) {
            throw std::logic_error(
                "h_class_decomposition: restriction map is not a "
                "homomorphism");
          }
        }
      }
    }

    out.push_back(HClassGroup{cs, std::move(members), *identity,
                              std::move(perms)});
  }
  return out;
}

struct IsoCriterionResult {
  bool                          iso_to_full;  // E = X x X
  std::optional<Transformation> non_idempotent_witness;
};

// reg(T) is isomorphic to a full transformation semigroup T(Z) exactly
// when E is universal; on multi-block instances a non-idempotent kernel
// element is exhibited (the two-class swap from the proof).
inline IsoCriterionResult iso_to_full_transformation_criterion(
    Partition const& E) {
  if (E.num_blocks() == 1) {
    // kernel = constants, all idempotent
    for (auto const& a : kernel_elements(E)) {
      if (!is_idempotent_in_q2(a, E)) {
        throw std::logic_error(
            "iso criterion: single-block kernel has a non-idempotent");
      }
    }
    return IsoCriterionResult{true, std::nullopt};
  }
  std::vector<int> img(static_cast<std::size_t>(E.size()));
  int a = E.block(0).front();
  int b = E.block(1).front();
  for (int x : E.block(0)) {
    img[static_cast<std::size_t>(x)] = b;
  }
  for (int x : E.block(1)) {
    img[static_cast<std::size_t>(x)] = a;
  }
  for (int i = 2; i < E.num_blocks(); ++i) {
    for (int x : E.block(i)) {
      img[static_cast<std::size_t>(x)] = E.block(i).front();
    }
  }
  Transformation beta(std::move(img));
  if (!is_in_kernel(beta, E) || is_idempotent_in_q2(beta, E)) {
    throw std::logic_error("iso criterion: witness construction failed");
  }
  return IsoCriterionResult{false, beta};
}

}  // namespace regt

#endif  // REGT_KERNEL_HPP_
