#ifndef REGT_PREDICATES_HPP_
#define REGT_PREDICATES_HPP_

#include <stdexcept>
#include <vector>

#include "partition.hpp"
#include "transformation.hpp"

namespace regt {

namespace detail {
inline void check_sizes(Transformation const& a, Partition const& E) {
  if (a.degree() != E.size()) {
    throw std::invalid_argument(
        "transformation degree does not match partition ground-set size");
  }
}
}  // namespace detail

// (x, y) in E implies (xa, ya) in E, i.e. every block maps into a single
// block of E.
inline bool is_E_preserving(Transformation const& a, Partition const& E) {
  detail::check_sizes(a, E);
  for (auto const& block : E.blocks()) {
    int target = E.class_of(a[block.front()]);
    for (int x : block) {
      if (E.class_of(a[x]) != target) {
        return false;
      }
    }
  }
  return true;
}

// (x, y) in E iff (xa, ya) in E.  Decided by the induced-class-map
// criterion: every block maps into a single block, and distinct blocks
// map into distinct blocks.
inline bool is_E_star_preserving(Transformation const& a,
                                 Partition const& E) {
  detail::check_sizes(a, E);
  std::vector<bool> hit(static_cast<std::size_t>(E.num_blocks()), false);
  for (auto const& block : E.blocks()) {
    int target = E.class_of(a[block.front()]);
    for (int x : block) {
      if (E.class_of(a[x]) != target) {
        return false;
      }
    }
    if (hit[static_cast<std::size_t>(target)]) {
      return false;
    }
    hit[static_cast<std::size_t>(target)] = true;
  }
  return true;
}

// The O(n^2) pairwise definition, kept as a test oracle for
// is_E_star_preserving.
inline bool is_E_star_preserving_pairwise(Transformation const& a,
                                          Partition const&      E) {
  detail::check_sizes(a, E);
  for (int x = 0; x < E.size(); ++x) {
    for (int y = x + 1; y < E.size(); ++y) {
      if (E.related(x, y) != E.related(a[x], a[y])) {
        return false;
      }
    }
  }
  return true;
}

// The permutation tau on block indices with A_i a contained in A_{i tau}.
// Requires a in T_{E*}(X).
inline std::vector<int> induced_class_map(Transformation const& a,
                                          Partition const&      E) {
  if (!is_E_star_preserving(a, E)) {
    throw std::invalid_argument(
        "induced_class_map: transformation is not E*-preserving");
  }
  std::vector<int> tau(static_cast<std::size_t>(E.num_blocks()));
  for (int i = 0; i < E.num_blocks(); ++i) {
    tau[static_cast<std::size_t>(i)] = E.class_of(a[E.block(i).front()]);
  }
  return tau;
}

// Indices of the blocks disjoint from the image of a.
inline std::vector<int> z_set(Transformation const& a, Partition const& E) {
  detail::check_sizes(a, E);
  std::vector<bool> met(static_cast<std::size_t>(E.num_blocks()), false);
  for (int x = 0; x < a.degree(); ++x) {
    met[static_cast<std::size_t>(E.class_of(a[x]))] = true;
  }
  std::vector<int> z;
  for (int i = 0; i < E.num_blocks(); ++i) {
    if (!met[static_cast<std::size_t>(i)]) {
      z.push_back(i);
    }
  }
  return z;
}

// Regularity of a in T_{E*}(X): the image meets every block.
// Requires a in T_{E*}(X).
inline bool is_regular_element(Transformation const& a, Partition const& E) {
  if (!is_E_star_preserving(a, E)) {
    throw std::invalid_argument(
        "is_regular_element: transformation is not E*-preserving");
  }
  return z_set(a, E).empty();
}

// Membership in reg(T), used as the precondition of most derived
// operations.
inline void require_regular(Transformation const& a,
                            Partition const&      E,
                            char const*           who) {
  if (!is_E_star_preserving(a, E) || !z_set(a, E).empty()) {
    throw std::invalid_argument(std::string(who)
                                + ": element is not in reg(T)");
  }
}

}  // namespace regt

#endif  // REGT_PREDICATES_HPP_
