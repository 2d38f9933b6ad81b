#ifndef REGT_CAYLEY_HPP_
#define REGT_CAYLEY_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ideals.hpp"
#include "kernel.hpp"
#include "partition.hpp"
#include "predicates.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace regt {

// An abstract finite semigroup given by its multiplication table over
// element indices 0..m-1.  Associativity is checked on construction; the
// first failing triple is reported.
struct CayleyTable {
  int                           order;
  std::vector<std::vector<int>> table;
  std::vector<std::string>      labels;

  CayleyTable(int                           m,
              std::vector<std::vector<int>> tab,
              std::vector<std::string>      labs = {})
      : order(m), table(std::move(tab)), labels(std::move(labs)) {
    if (order <= 0) {
      throw std::invalid_argument("CayleyTable: order must be >= 1");
    }
    if (static_cast<int>(table.size()) != order) {
      throw std::invalid_argument("CayleyTable: table has wrong row count");
    }
    for (auto const& row : table) {
      if (static_cast<int>(row.size()) != order) {
        throw std::invalid_argument(
            "CayleyTable: table has a row of wrong length");
      }
      for (int v : row) {
        if (v < 0 || v >= order) {
          throw std::invalid_argument("CayleyTable: entry out of range");
        }
      }
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != order) {
      throw std::invalid_argument("CayleyTable: wrong number of labels");
    }
    for (int a = 0; a < order; ++a) {
      for (int b = 0; b < order; ++b) {
        for (int c = 0; c < order; ++c) {
          if (at(at(a, b), c) != at(a, at(b, c))) {
            throw std::invalid_argument(
                "CayleyTable: not associative at triple (" + std::to_string(a)
                + ", " + std::to_string(b) + ", " + std::to_string(c) + ")");
          }
        }
      }
    }
  }

  int at(int a, int b) const {
    return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }
};

struct RightGroupCheck {
  bool                               ok;
  // when !ok: a pair (a, b) whose equation a x = b has bad_count
  // solutions (0 or >= 2)
  std::optional<std::pair<int, int>> bad_pair;
  int                                bad_count = -1;
};

inline RightGroupCheck check_right_group(CayleyTable const& T) {
  for (int a = 0; a < T.order; ++a) {
    for (int b = 0; b < T.order; ++b) {
      int count = 0;
      for (int x = 0; x < T.order; ++x) {
        if (T.at(a, x) == b) {
          ++count;
        }
      }
      if (count != 1) {
        return RightGroupCheck{false, std::make_pair(a, b), count};
      }
    }
  }
  return RightGroupCheck{true, std::nullopt, -1};
}

inline bool is_right_group(CayleyTable const& T) {
  return check_right_group(T).ok;
}

struct NotRightGroupError : std::invalid_argument {
  std::pair<int, int> pair;
  int                 solution_count;

  NotRightGroupError(std::pair<int, int> p, int count)
      : std::invalid_argument(
          "not a right group: a x = b has " + std::to_string(count)
          + " solutions for (a, b) = (" + std::to_string(p.first) + ", "
          + std::to_string(p.second) + ")"),
        pair(p),
        solution_count(count) {}
};

// The structural decomposition of a finite right group: the right-zero
// idempotent set E(S), the disjoint subgroups Se_i, the classes
// [s] = {s e_i} forming a partition of S, and the group inverse of each
// element within its subgroup.
struct RightGroupAnalysis {
  std::vector<int>              idempotents;
  std::vector<std::vector<int>> subgroups;  // subgroups[i] = S e_i, sorted
  std::vector<std::vector<int>> classes;    // the [s] blocks
  Partition                     induced;    // {[s]} as a Partition on S
  std::vector<int>              inverse;    // within the element's Se_i
};

inline RightGroupAnalysis analyze_right_group(CayleyTable const& T) {
  RightGroupCheck rc = check_right_group(T);
  if (!rc.ok) {
    throw NotRightGroupError(*rc.bad_pair, rc.bad_count);
  }
  std::vector<int> idem;
  for (int e = 0; e < T.order; ++e) {
    if (T.at(e, e) == e) {
      idem.push_back(e);
    }
  }
  if (idem.empty()) {
    throw std::logic_error("analyze_right_group: no idempotents");
  }
  for (int e : idem) {
    for (int f : idem) {
      if (T.at(e, f) != f) {
        throw std::logic_error(
            "analyze_right_group: E(S) is not a right-zero subsemigroup");
      }
    }
  }

  std::vector<std::vector<int>> subgroups;
  std::vector<int>              owner(static_cast<std::size_t>(T.order), -1);
  for (std::size_t i = 0; i < idem.size(); ++i) {
    std::vector<int> se;
    for (int s = 0; s < T.order; ++s) {
      se.push_back(T.at(s, idem[i]));
    }
    std::sort(se.begin(), se.end());
    se.erase(std::unique(se.begin(), se.end()), se.end());
    for (int x : se) {
      if (owner[static_cast<std::size_t>(x)] != -1) {
        throw std::logic_error(
            "analyze_right_group: subgroups S e_i are not disjoint");
      }
      owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
      if (T.at(x, idem[i]) != x) {
        throw std::logic_error(
            "analyze_right_group: e_i is not a right identity on S e_i");
      }
    }
    subgroups.push_back(std::move(se));
  }
  for (int o : owner) {
    if (o < 0) {
      throw std::logic_error(
          "analyze_right_group: subgroups do not cover S");
    }
  }

  // group inverse within Se_i
  std::vector<int> inverse(static_cast<std::size_t>(T.order), -1);
  for (int x = 0; x < T.order; ++x) {
    int e = idem[static_cast<std::size_t>(owner[static_cast<std::size_t>(x)])];
    for (int y : subgroups[static_cast<std::size_t>(
             owner[static_cast<std::size_t>(x)])]) {
      if (T.at(x, y) == e && T.at(y, x) == e) {
        inverse[static_cast<std::size_t>(x)] = y;
        break;
      }
    }
    if (inverse[static_cast<std::size_t>(x)] < 0) {
      throw std::logic_error("analyze_right_group: missing group inverse");
    }
  }

  // classes [s] = {s e_i : i}
  std::vector<std::vector<int>> classes;
  std::vector<bool> placed(static_cast<std::size_t>(T.order), false);
  for (int s = 0; s < T.order; ++s) {
    if (placed[static_cast<std::size_t>(s)]) {
      continue;
    }
    std::vector<int> cls;
    for (int e : idem) {
      cls.push_back(T.at(s, e));
    }
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    for (int x : cls) {
      if (placed[static_cast<std::size_t>(x)]) {
        throw std::logic_error(
            "analyze_right_group: the [s] classes do not form a partition");
      }
      placed[static_cast<std::size_t>(x)] = true;
    }
    classes.push_back(std::move(cls));
  }

  Partition induced(T.order, classes);
  return RightGroupAnalysis{std::move(idem), std::move(subgroups),
                            std::move(classes), std::move(induced),
                            std::move(inverse)};
}

// Test-input generator: the direct product of a group G with the
// right-zero semigroup R_k, (g, i)(h, j) = (gh, j).
inline CayleyTable make_right_group(CayleyTable const& G, int k) {
  if (k < 1) {
    throw std::invalid_argument("make_right_group: k must be >= 1");
  }
  // group check: a two-sided identity and two-sided inverses
  int identity = -1;
  for (int e = 0; e < G.order; ++e) {
    bool is_id = true;
    for (int x = 0; x < G.order; ++x) {
      if (G.at(e, x) != x || G.at(x, e) != x) {
        is_id = false;
        break;
      }
    }
    if (is_id) {
      identity = e;
      break;
    }
  }
  if (identity < 0) {
    throw std::invalid_argument("make_right_group: G has no identity");
  }
  for (int x = 0; x < G.order; ++x) {
    bool invertible = false;
    for (int y = 0; y < G.order; ++y) {
      if (G.at(x, y) == identity && G.at(y, x) == identity) {
        invertible = true;
        break;
      }
    }
    if (!invertible) {
      throw std::invalid_argument("make_right_group: G is not a group");
    }
  }
  int const                     m = G.order * k;
  std::vector<std::vector<int>> tab(
      static_cast<std::size_t>(m),
      std::vector<int>(static_cast<std::size_t>(m)));
  std::vector<std::string> labels;
  auto idx = [k](int g, int i) { return g * k + i; };
  for (int g = 0; g < G.order; ++g) {
    for (int i = 0; i < k; ++i) {
      for (int h = 0; h < G.order; ++h) {
        for (int j = 0; j < k; ++j) {
          tab[static_cast<std::size_t>(idx(g, i))]
             [static_cast<std::size_t>(idx(h, j))] = idx(G.at(g, h), j);
        }
      }
    }
  }
  for (int g = 0; g < G.order; ++g) {
    for (int i = 0; i < k; ++i) {
      std::string gl = G.labels.empty() ? std::to_string(g)
                                        : G.labels[static_cast<std::size_t>(g)];
      labels.push_back("(" + gl + "," + std::to_string(i) + ")");
    }
  }
  return CayleyTable(m, std::move(tab), std::move(labels));
}

// The inner right translation rho_s : x -> x s as a transformation of the
// ground set {0..m-1}.
inline Transformation regular_representation(CayleyTable const& T, int s) {
  if (s < 0 || s >= T.order) {
    throw std::invalid_argument(
        "regular_representation: element index out of range");
  }
  std::vector<int> img(static_cast<std::size_t>(T.order));
  for (int x = 0; x < T.order; ++x) {
    img[static_cast<std::size_t>(x)] = T.at(x, s);
  }
  return Transformation(std::move(img));
}

struct EmbeddingReport {
  bool all_e_star_preserving = false;
  bool all_regular           = false;
  bool all_collapse_classes  = false;  // |[t] rho_s| = 1 for all t, s
  bool homomorphism          = false;
  bool injective             = false;

  bool ok() const {
    return all_e_star_preserving && all_regular && all_collapse_classes
           && homomorphism && injective;
  }
};

struct Embedding {
  Partition                   E;    // the partition {[s]} of S
  std::vector<Transformation> psi;  // psi[s] = rho_s
  EmbeddingReport             report;
};

// The regular representation of a right group S into Q(2) of
// reg(T_{E*}(S)), fully certified.  Membership of each rho_s in Q(2) is
// established by the three predicates (E*-preserving, regular, per-class
// image size 1), so no enumeration of the ambient semigroup is needed.
// Any certification failure would falsify the underlying theorem and is
// surfaced as a hard error.
inline Embedding embed(CayleyTable const& T) {
  RightGroupAnalysis analysis = analyze_right_group(T);
  Partition const&   E        = analysis.induced;

  std::vector<Transformation> psi;
  for (int s = 0; s < T.order; ++s) {
    psi.push_back(regular_representation(T, s));
  }

  EmbeddingReport rep;
  rep.all_e_star_preserving = true;
  rep.all_regular           = true;
  rep.all_collapse_classes  = true;
  for (auto const& rho : psi) {
    if (!is_E_star_preserving(rho, E)) {
      rep.all_e_star_preserving = false;
    } else if (!z_set(rho, E).empty()) {
      rep.all_regular = false;
    } else {
      for (int v : card_vector(rho, E).r) {
        if (v != 1) {
          rep.all_collapse_classes = false;
        }
      }
    }
  }
  rep.homomorphism = true;
  for (int s = 0; s < T.order; ++s) {
    for (int t = 0; t < T.order; ++t) {
      if (compose(psi[static_cast<std::size_t>(s)],
                  psi[static_cast<std::size_t>(t)])
          != psi[static_cast<std::size_t>(T.at(s, t))]) {
        rep.homomorphism = false;
      }
    }
  }
  std::vector<Transformation> distinct = psi;
  detail::sort_unique(distinct);
  rep.injective = distinct.size() == psi.size();

  if (!rep.ok()) {
    throw std::logic_error(
        "embed: certification failed; this would falsify the embedding "
        "theorem");
  }
  return Embedding{E, std::move(psi), rep};
}

// Small stock tables for tests and demos.
namespace tables {

inline CayleyTable trivial_group() {
  return CayleyTable(1, {{0}}, {"e"});
}

inline CayleyTable cyclic_group(int n) {
  std::vector<std::vector<int>> tab(
      static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
          = (i + j) % n;
    }
  }
  return CayleyTable(n, std::move(tab));
}

inline CayleyTable klein_four() {
  std::vector<std::vector<int>> tab(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
    }
  }
  return CayleyTable(4, std::move(tab));
}

// S_3 as the sorted permutations of three points under left-to-right
// composition.
inline CayleyTable symmetric_group_3() {
  std::vector<std::vector<int>> perms;
  std::vector<int>              p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  int const                     m = static_cast<int>(perms.size());
  std::vector<std::vector<int>> tab(
      static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      std::vector<int> prod(3);
      for (int x = 0; x < 3; ++x) {
        prod[static_cast<std::size_t>(x)]
            = perms[static_cast<std::size_t>(j)][static_cast<std::size_t>(
                perms[static_cast<std::size_t>(i)]
                     [static_cast<std::size_t>(x)])];
      }
      tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]
          = static_cast<int>(std::find(perms.begin(), perms.end(), prod)
                             - perms.begin());
    }
  }
  return CayleyTable(m, std::move(tab));
}

inline CayleyTable right_zero(int k) {
  std::vector<std::vector<int>> tab(
      static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = j;
    }
  }
  return CayleyTable(k, std::move(tab));
}

inline CayleyTable left_zero(int k) {
  std::vector<std::vector<int>> tab(
      static_cast<std::size_t>(k), std::vector<int>(static_cast<std::size_t>(k)));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i;
    }
  }
  return CayleyTable(k, std::move(tab));
}

// the two-element chain semilattice {0 < 1}, xy = min(x, y)
inline CayleyTable chain_semilattice_2() {
  return CayleyTable(2, {{0, 0}, {0, 1}});
}

}  // namespace tables

}  // namespace regt

#endif  // REGT_CAYLEY_HPP_
