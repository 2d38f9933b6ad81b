#ifndef REGT_IDEALS_HPP_
#define REGT_IDEALS_HPP_

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "budget.hpp"
#include "partition.hpp"
#include "predicates.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace regt {

enum class VectorContext { ImageSizes, BoundVector };

// Per-class cardinal data: either the image sizes |A_i a| of an element
// (1 <= r_i <= |A_i|) or a Q(r) bound vector (2 <= r_i <= |A_i| + 1).
// All cardinal arithmetic is over the naturals; the successor r' is r+1.
struct CardinalVector {
  std::vector<int> r;
  VectorContext    context;
};

inline CardinalVector card_vector(Transformation const& a,
                                  Partition const&      E) {
  if (!is_E_star_preserving(a, E)) {
    throw std::invalid_argument(
        "card_vector: transformation is not E*-preserving");
  }
  std::vector<int> r(static_cast<std::size_t>(E.num_blocks()));
  for (int i = 0; i < E.num_blocks(); ++i) {
    std::vector<int> im;
    for (int x : E.block(i)) {
      im.push_back(a[x]);
    }
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    r[static_cast<std::size_t>(i)] = static_cast<int>(im.size());
  }
  return CardinalVector{std::move(r), VectorContext::ImageSizes};
}

// Validates a Q(r) bound vector against the partition; throws naming the
// violated index.
inline void validate_bound_vector(CardinalVector const& r,
                                  Partition const&      E) {
  if (static_cast<int>(r.r.size()) != E.num_blocks()) {
    throw std::invalid_argument("bound vector length does not match |X/E|");
  }
  for (int i = 0; i < E.num_blocks(); ++i) {
    int v = r.r[static_cast<std::size_t>(i)];
    if (v < 2 || v > E.block_size(i) + 1) {
      throw std::invalid_argument(
          "bound vector violates 2 <= r_i <= |A_i|+1 at index "
          + std::to_string(i));
    }
  }
}

namespace detail {

template <typename Rel>
std::optional<std::vector<int>> dominance_sorted(std::vector<int> const& a,
                                                 std::vector<int> const& b,
                                                 Rel rel) {
  std::size_t const k = a.size();
  std::vector<int>  ai(k), bi(k);
  std::iota(ai.begin(), ai.end(), 0);
  std::iota(bi.begin(), bi.end(), 0);
  auto by_val = [](std::vector<int> const& v) {
    return [&v](int x, int y) {
      return v[static_cast<std::size_t>(x)] != v[static_cast<std::size_t>(y)]
                 ? v[static_cast<std::size_t>(x)]
                       < v[static_cast<std::size_t>(y)]
                 : x < y;
    };
  };
  std::sort(ai.begin(), ai.end(), by_val(a));
  std::sort(bi.begin(), bi.end(), by_val(b));
  std::vector<int> perm(k);
  for (std::size_t t = 0; t < k; ++t) {
    if (!rel(a[static_cast<std::size_t>(ai[t])],
             b[static_cast<std::size_t>(bi[t])])) {
      return std::nullopt;
    }
    perm[static_cast<std::size_t>(ai[t])] = bi[t];
  }
  return perm;
}

template <typename Rel>
std::optional<std::vector<int>> dominance_allperms(std::vector<int> const& a,
                                                   std::vector<int> const& b,
                                                   Rel rel) {
  std::size_t const k = a.size();
  std::vector<int>  perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < k; ++i) {
      if (!rel(a[i], b[static_cast<std::size_t>(perm[i])])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      return perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace detail

// A permutation rho with a_i <= b_{i rho} (or < when strict) for all i,
// decided by the sorted-greedy matching.  The |I|! search below is the
// oracle form.
inline std::optional<std::vector<int>> dominance_exists(
    CardinalVector const& a, CardinalVector const& b, bool strict) {
  if (a.r.size() != b.r.size()) {
    throw std::invalid_argument("dominance_exists: length mismatch");
  }
  if (strict) {
    return detail::dominance_sorted(a.r, b.r,
                                    [](int x, int y) { return x < y; });
  }
  return detail::dominance_sorted(a.r, b.r,
                                  [](int x, int y) { return x <= y; });
}

// Brute force over all permutations of I, exactly as in the Q(r)
// membership definition.
inline std::optional<std::vector<int>> dominance_exists_allperms(
    CardinalVector const& a, CardinalVector const& b, bool strict) {
  if (a.r.size() != b.r.size()) {
    throw std::invalid_argument(
        "dominance_exists_allperms: length mismatch");
  }
  if (strict) {
    return detail::dominance_allperms(a.r, b.r,
                                      [](int x, int y) { return x < y; });
  }
  return detail::dominance_allperms(a.r, b.r,
                                    [](int x, int y) { return x <= y; });
}

// Divisibility in reg(T): a = lambda b mu for some lambda, mu in reg(T),
// equivalently non-strict dominance of the per-class image counts.
inline bool divides(Transformation const& a,
                    Transformation const& b,
                    Partition const&      E) {
  require_regular(a, E, "divides");
  require_regular(b, E, "divides");
  return dominance_exists(card_vector(a, E), card_vector(b, E), false)
      .has_value();
}

// The constructive content of the factorization: lambda, mu in reg(T)
// with lambda b mu = a, built from per-class injections sigma_i, the
// piecewise map mu, and lambda = a sigma gamma (gamma choosing preimages
// under b).  The output is re-verified by composition before returning.
inline std::pair<Transformation, Transformation> construct_factorization(
    Transformation const& a, Transformation const& b, Partition const& E) {
  require_regular(a, E, "construct_factorization");
  require_regular(b, E, "construct_factorization");
  if (a == b) {
    Transformation id = Transformation::identity(E.size());
    return {id, id};  // id * b * id = a trivially
  }
  auto rho = dominance_exists(card_vector(a, E), card_vector(b, E), false);
  if (!rho) {
    throw std::invalid_argument(
        "construct_factorization: divides(a, b) does not hold");
  }
  int const k = E.num_blocks();

  // per-class sorted image lists
  auto block_image = [&E](Transformation const& t, int i) {
    std::vector<int> im;
    for (int x : E.block(i)) {
      im.push_back(t[x]);
    }
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  };

  std::vector<int> tau_b = induced_class_map(b, E);

  // sigma_i : A_i a -> A_{i rho} b, injective (sorted-order pairing);
  // sigma is their union on X a
  std::vector<int> sigma_of(static_cast<std::size_t>(E.size()), -1);
  std::vector<int> sigma_inv(static_cast<std::size_t>(E.size()), -1);
  for (int i = 0; i < k; ++i) {
    std::vector<int> ai = block_image(a, i);
    std::vector<int> bi = block_image(b, (*rho)[static_cast<std::size_t>(i)]);
    for (std::size_t t = 0; t < ai.size(); ++t) {
      sigma_of[static_cast<std::size_t>(ai[t])]  = bi[t];
      sigma_inv[static_cast<std::size_t>(bi[t])] = ai[t];
    }
  }

  // mu acts on A_{i tau} (the class containing A_{i rho} b) as
  // sigma_i^{-1} on A_{i rho} b and as the constant y_0 elsewhere
  std::vector<int> mu_img(static_cast<std::size_t>(E.size()), -1);
  for (int i = 0; i < k; ++i) {
    int j   = (*rho)[static_cast<std::size_t>(i)];
    int itau = tau_b[static_cast<std::size_t>(j)];
    std::vector<int> ai = block_image(a, i);
    std::vector<int> bi = block_image(b, j);
    for (int x : E.block(itau)) {
      mu_img[static_cast<std::size_t>(x)] = ai.front();  // y_0
    }
    for (std::size_t t = 0; t < bi.size(); ++t) {
      int inv = sigma_inv[static_cast<std::size_t>(bi[t])];
      if (inv >= 0) {
        mu_img[static_cast<std::size_t>(bi[t])] = inv;
      }
    }
  }
  Transformation mu{std::move(mu_img)};

  // gamma chooses a b-preimage of each point of im(sigma); lambda = a
  // followed by sigma followed by gamma
  std::vector<int> preimage(static_cast<std::size_t>(E.size()), -1);
  for (int x = E.size() - 1; x >= 0; --x) {
    preimage[static_cast<std::size_t>(b[x])] = x;  // least preimage wins
  }
  std::vector<int> lambda_img(static_cast<std::size_t>(E.size()));
  for (int x = 0; x < E.size(); ++x) {
    int s = sigma_of[static_cast<std::size_t>(a[x])];
    lambda_img[static_cast<std::size_t>(x)]
        = preimage[static_cast<std::size_t>(s)];
  }
  Transformation lambda{std::move(lambda_img)};

  if (compose(compose(lambda, b), mu) != a) {
    throw std::logic_error(
        "construct_factorization: recomposition check failed");
  }
  require_regular(lambda, E, "construct_factorization (lambda)");
  require_regular(mu, E, "construct_factorization (mu)");
  return {std::move(lambda), std::move(mu)};
}

enum class IdealProvenance { QOfR, PrincipalOf, Union, BruteForce };

inline char const* provenance_name(IdealProvenance p) {
  switch (p) {
    case IdealProvenance::QOfR: return "Q-of-r";
    case IdealProvenance::PrincipalOf: return "principal-of-g";
    case IdealProvenance::Union: return "union";
    case IdealProvenance::BruteForce: return "bruteforce";
  }
  return "?";
}

// An ideal of reg(T), stored as sorted element indices into the ambient
// instance's canonical ordering.
struct IdealSet {
  std::vector<int>              members;
  IdealProvenance               provenance;
  std::optional<Transformation> generator;  // for principal ideals
};

namespace detail {

inline void require_reg_instance(SemigroupInstance const& S,
                                 char const*              who) {
  if (S.kind != SemigroupKind::RegT && S.kind != SemigroupKind::T_Estar) {
    throw std::invalid_argument(std::string(who)
                                + ": instance must be regT or T_Estar");
  }
}

}  // namespace detail

// Q(r) = {a in reg(T) : exists sigma in Sym(I), |A_i a| < r_{i sigma}}.
// Membership intentionally ranges sigma over all of Sym(I); the sorted
// test stays a gated equivalence checked in the suites.
inline IdealSet q_set(CardinalVector const&    r,
                      SemigroupInstance const& reg) {
  detail::require_reg_instance(reg, "q_set");
  validate_bound_vector(r, reg.E);
  IdealSet out{{}, IdealProvenance::QOfR, std::nullopt};
  for (std::size_t idx = 0; idx < reg.size(); ++idx) {
    CardinalVector cv = card_vector(reg.elements[idx], reg.E);
    if (dominance_exists_allperms(cv, r, true)) {
      out.members.push_back(static_cast<int>(idx));
    }
  }
  return out;
}

// reg(T) g reg(T) = Q(card_vector(g) + 1).
inline IdealSet principal_ideal(Transformation const&    g,
                                SemigroupInstance const& reg) {
  detail::require_reg_instance(reg, "principal_ideal");
  require_regular(g, reg.E, "principal_ideal");
  CardinalVector bound = card_vector(g, reg.E);
  for (int& v : bound.r) {
    v += 1;  // cardinal successor
  }
  bound.context = VectorContext::BoundVector;
  IdealSet out  = q_set(bound, reg);
  out.provenance = IdealProvenance::PrincipalOf;
  out.generator  = g;
  return out;
}

// The kernel Q(2): the unique minimal ideal, the elements collapsing
// every block to a point.
inline IdealSet kernel_q2(SemigroupInstance const& reg) {
  CardinalVector two{std::vector<int>(
                         static_cast<std::size_t>(reg.E.num_blocks()), 2),
                     VectorContext::BoundVector};
  return q_set(two, reg);
}

// All ideals of reg(T): unions of principal ideals, generated over
// antichains of the (finitely many) distinct principal ideals and
// deduplicated.
inline std::vector<IdealSet> enumerate_ideals(SemigroupInstance const& reg,
                                              Budget const& budget
                                              = Budget::active()) {
  detail::require_reg_instance(reg, "enumerate_ideals");
  // distinct principal ideals
  std::map<std::vector<int>, IdealSet> principals;
  for (auto const& g : reg.elements) {
    IdealSet p = principal_ideal(g, reg);
    principals.emplace(p.members, std::move(p));
  }
  if (principals.size() > budget.max_principal_ideals) {
    throw CapacityError(
        "enumerate_ideals: distinct principal ideals exceed budget "
        "max_principal_ideals="
        + std::to_string(budget.max_principal_ideals));
  }
  std::vector<IdealSet> ps;
  for (auto& [members, ideal] : principals) {
    ps.push_back(std::move(ideal));
  }

  // antichains: subsets of pairwise incomparable principal ideals
  auto subset_of = [](std::vector<int> const& a, std::vector<int> const& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::map<std::vector<int>, IdealSet> found;
  std::vector<std::size_t>             chosen;
  auto emit = [&]() {
    if (chosen.empty()) {
      return;
    }
    std::vector<int> u;
    for (std::size_t i : chosen) {
      std::vector<int> merged;
      std::set_union(u.begin(), u.end(), ps[i].members.begin(),
                     ps[i].members.end(), std::back_inserter(merged));
      u = std::move(merged);
    }
    if (chosen.size() == 1) {
      found.emplace(u, ps[chosen.front()]);
    } else {
      found.emplace(u, IdealSet{u, IdealProvenance::Union, std::nullopt});
    }
  };
  auto rec = [&](auto&& self, std::size_t next) -> void {
    emit();
    for (std::size_t i = next; i < ps.size(); ++i) {
      bool comparable = false;
      for (std::size_t j : chosen) {
        if (subset_of(ps[i].members, ps[j].members)
            || subset_of(ps[j].members, ps[i].members)) {
          comparable = true;
          break;
        }
      }
      if (!comparable) {
        chosen.push_back(i);
        self(self, i + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);

  std::vector<IdealSet> out;
  for (auto& [members, ideal] : found) {
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](IdealSet const& a, IdealSet const& b) {
    return a.members.size() != b.members.size()
               ? a.members.size() < b.members.size()
               : a.members < b.members;
  });
  return out;
}

// Exhaustive generator search: the ideal is principal iff it equals
// principal_ideal(g) for one of its own members.
inline std::pair<bool, std::optional<Transformation>> is_principal(
    IdealSet const& ideal, SemigroupInstance const& reg) {
  for (int idx : ideal.members) {
    Transformation const& g = reg.elements[static_cast<std::size_t>(idx)];
    if (principal_ideal(g, reg).members == ideal.members) {
      return {true, g};
    }
  }
  return {false, std::nullopt};
}

}  // namespace regt

#endif  // REGT_IDEALS_HPP_
