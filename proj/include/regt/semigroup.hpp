#ifndef REGT_SEMIGROUP_HPP_
#define REGT_SEMIGROUP_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "budget.hpp"
#include "partition.hpp"
#include "predicates.hpp"
#include "transformation.hpp"

namespace regt {

enum class SemigroupKind { T, T_E, T_Estar, RegT, CustomClosure };

inline char const* kind_name(SemigroupKind k) {
  switch (k) {
    case SemigroupKind::T: return "t";
    case SemigroupKind::T_E: return "te";
    case SemigroupKind::T_Estar: return "testar";
    case SemigroupKind::RegT: return "regt";
    case SemigroupKind::CustomClosure: return "closure";
  }
  return "?";
}

inline SemigroupKind kind_from_name(std::string const& s) {
  if (s == "T" || s == "t") return SemigroupKind::T;
  if (s == "T_E" || s == "te") return SemigroupKind::T_E;
  if (s == "T_Estar" || s == "testar") return SemigroupKind::T_Estar;
  if (s == "regT" || s == "regt") return SemigroupKind::RegT;
  if (s == "custom-closure" || s == "closure") {
    return SemigroupKind::CustomClosure;
  }
  throw std::invalid_argument("unknown semigroup kind \"" + s + "\"");
}

// A concrete finite semigroup of transformations over a fixed partition,
// with canonically (lexicographically) ordered elements.  Immutable after
// construction.
struct SemigroupInstance {
  Partition                   E;
  SemigroupKind               kind;
  std::vector<Transformation> elements;

  std::size_t size() const noexcept {
    return elements.size();
  }

  // Index in the canonical ordering, or -1 if absent.
  int index_of(Transformation const& t) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), t);
    if (it != elements.end() && *it == t) {
      return static_cast<int>(it - elements.begin());
    }
    return -1;
  }

  bool contains(Transformation const& t) const {
    return index_of(t) >= 0;
  }
};

namespace detail {

inline void sort_unique(std::vector<Transformation>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Closure is checked exhaustively when the instance is small enough for
// the quadratic pass; larger constructed enumerations are trusted.
inline void check_closed(std::vector<Transformation> const& elements) {
  if (elements.size() > 2048) {
    return;
  }
  for (auto const& a : elements) {
    for (auto const& b : elements) {
      Transformation p = compose(a, b);
      if (!std::binary_search(elements.begin(), elements.end(), p)) {
        throw std::invalid_argument(
            "SemigroupInstance: element set is not closed under "
            "composition");
      }
    }
  }
}

}  // namespace detail

inline SemigroupInstance make_instance(Partition                   E,
                                       SemigroupKind               kind,
                                       std::vector<Transformation> elements,
                                       bool check_closed = true) {
  detail::sort_unique(elements);
  if (elements.empty()) {
    throw std::invalid_argument("SemigroupInstance: empty element set");
  }
  if (check_closed) {
    detail::check_closed(elements);
  }
  return SemigroupInstance{std::move(E), kind, std::move(elements)};
}

namespace detail {

// All n^n self-maps, in lexicographic order.
inline std::vector<Transformation> all_maps(int n, Budget const& budget) {
  if (n > budget.max_ground_size) {
    throw CapacityError("enumerate: ground-set size " + std::to_string(n)
                        + " exceeds budget max_ground_size="
                        + std::to_string(budget.max_ground_size));
  }
  double count = 1;
  for (int i = 0; i < n; ++i) {
    count *= n;
  }
  if (count > static_cast<double>(budget.max_elements)) {
    throw CapacityError("enumerate: n^n exceeds budget max_elements="
                        + std::to_string(budget.max_elements));
  }
  std::vector<Transformation> out;
  std::vector<int>            img(static_cast<std::size_t>(n), 0);
  while (true) {
    out.push_back(Transformation(img));
    int pos = n - 1;
    while (pos >= 0 && img[static_cast<std::size_t>(pos)] == n - 1) {
      img[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) {
      break;
    }
    ++img[static_cast<std::size_t>(pos)];
  }
  return out;
}

// Direct product construction of T_{E*}(X): for each permutation sigma of
// the block indices, all maps sending block A_i into A_{i sigma}.  This
// avoids the n^n sweep and is itself the structural fact behind the
// finite collapse reg(T) = T_{E*}(X).
inline std::vector<Transformation> all_e_star_maps(Partition const& E,
                                                   Budget const& budget) {
  int const        k = E.num_blocks();
  std::vector<int> sigma(static_cast<std::size_t>(k));
  std::iota(sigma.begin(), sigma.end(), 0);

  double predicted = 0;
  do {
    double term = 1;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < E.block_size(i); ++j) {
        term *= E.block_size(sigma[static_cast<std::size_t>(i)]);
      }
    }
    predicted += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  if (predicted > static_cast<double>(budget.max_elements)) {
    throw CapacityError(
        "enumerate: predicted |T_Estar| exceeds budget max_elements="
        + std::to_string(budget.max_elements));
  }

  std::vector<Transformation> out;
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    // odometer over the choice of image point for every ground point,
    // each point x in A_i ranging over A_{i sigma}
    std::vector<int> choice(static_cast<std::size_t>(E.size()), 0);
    std::vector<int> limit(static_cast<std::size_t>(E.size()));
    for (int x = 0; x < E.size(); ++x) {
      limit[static_cast<std::size_t>(x)] = E.block_size(
          sigma[static_cast<std::size_t>(E.class_of(x))]);
    }
    while (true) {
      std::vector<int> img(static_cast<std::size_t>(E.size()));
      for (int x = 0; x < E.size(); ++x) {
        int target = sigma[static_cast<std::size_t>(E.class_of(x))];
        img[static_cast<std::size_t>(x)]
            = E.block(target)[static_cast<std::size_t>(
                choice[static_cast<std::size_t>(x)])];
      }
      out.push_back(Transformation(std::move(img)));
      int pos = E.size() - 1;
      while (pos >= 0
             && choice[static_cast<std::size_t>(pos)]
                    == limit[static_cast<std::size_t>(pos)] - 1) {
        choice[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) {
        break;
      }
      ++choice[static_cast<std::size_t>(pos)];
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace detail

// Full enumeration of the requested ambient semigroup.
inline SemigroupInstance enumerate(SemigroupKind    kind,
                                   Partition const& E,
                                   Budget const&    budget
                                   = Budget::active()) {
  std::vector<Transformation> elements;
  switch (kind) {
    case SemigroupKind::T:
      elements = detail::all_maps(E.size(), budget);
      break;
    case SemigroupKind::T_E: {
      for (auto& t : detail::all_maps(E.size(), budget)) {
        if (is_E_preserving(t, E)) {
          elements.push_back(std::move(t));
        }
      }
      break;
    }
    case SemigroupKind::T_Estar:
      elements = detail::all_e_star_maps(E, budget);
      break;
    case SemigroupKind::RegT: {
      for (auto& t : detail::all_e_star_maps(E, budget)) {
        if (is_regular_element(t, E)) {
          elements.push_back(std::move(t));
        }
      }
      break;
    }
    case SemigroupKind::CustomClosure:
      throw std::invalid_argument(
          "enumerate: custom-closure instances come from closure()");
  }
  return make_instance(E, kind, std::move(elements), /* check_closed = */
                       kind != SemigroupKind::T);
}

// Smallest composition-closed superset of the generators.
inline SemigroupInstance closure(std::vector<Transformation> const& gens,
                                 Partition const&                   E,
                                 Budget const& budget = Budget::active()) {
  if (gens.empty()) {
    throw std::invalid_argument("closure: no generators");
  }
  for (auto const& g : gens) {
    if (g.degree() != E.size()) {
      throw std::invalid_argument("closure: generator degree mismatch");
    }
  }
  std::set<Transformation>    seen(gens.begin(), gens.end());
  std::vector<Transformation> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<Transformation> next;
    for (auto const& f : frontier) {
      for (auto const& s : seen) {
        for (Transformation p : {compose(f, s), compose(s, f)}) {
          if (!seen.count(p)) {
            next.push_back(p);
          }
        }
      }
    }
    for (auto& p : next) {
      if (seen.insert(p).second && seen.size() > budget.max_elements) {
        throw CapacityError("closure: exceeds budget max_elements="
                            + std::to_string(budget.max_elements));
      }
    }
    frontier = std::move(next);
    detail::sort_unique(frontier);
  }
  return make_instance(E,
                       SemigroupKind::CustomClosure,
                       {seen.begin(), seen.end()},
                       /* check_closed = */ false);
}

// Convenience overload inferring a discrete-free ambient partition is not
// meaningful here; callers without a partition use the universal one.
inline SemigroupInstance closure(std::vector<Transformation> const& gens,
                                 Budget const& budget = Budget::active()) {
  if (gens.empty()) {
    throw std::invalid_argument("closure: no generators");
  }
  return closure(gens, Partition::universal(gens.front().degree()), budget);
}

// Precomputed multiplication table over element indices.
struct MulTable {
  std::size_t           m;
  std::vector<uint32_t> tab;

  uint32_t at(std::size_t i, std::size_t j) const {
    return tab[i * m + j];
  }
};

inline MulTable mul_table(SemigroupInstance const& S,
                          Budget const&            budget
                          = Budget::active()) {
  if (S.size() > budget.max_oracle_elements) {
    throw CapacityError("mul_table: " + std::to_string(S.size())
                        + " elements exceed budget max_oracle_elements="
                        + std::to_string(budget.max_oracle_elements));
  }
  MulTable t{S.size(), {}};
  t.tab.resize(S.size() * S.size());
  for (std::size_t i = 0; i < S.size(); ++i) {
    for (std::size_t j = 0; j < S.size(); ++j) {
      int idx = S.index_of(compose(S.elements[i], S.elements[j]));
      if (idx < 0) {
        throw std::invalid_argument("mul_table: instance is not closed");
      }
      t.tab[i * S.size() + j] = static_cast<uint32_t>(idx);
    }
  }
  return t;
}

namespace detail {

// Fixed-size bit vector used for principal-ideal comparison.
class Bitset {
 public:
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) {
    w_[i >> 6] |= uint64_t(1) << (i & 63);
  }

  bool test(std::size_t i) const {
    return (w_[i >> 6] >> (i & 63)) & 1;
  }

  friend bool operator==(Bitset const&, Bitset const&) = default;

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (uint64_t x : w_) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }

 private:
  std::size_t           n_;
  std::vector<uint64_t> w_;
};

struct BitsetHash {
  std::size_t operator()(Bitset const& b) const noexcept {
    return b.hash();
  }
};

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)]
          = parent[static_cast<std::size_t>(
              parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  void unite(int a, int b) {
    parent[static_cast<std::size_t>(find(a))] = find(b);
  }
};

}  // namespace detail

enum class GreensRelation { L, R, H, D, J };

inline char const* relation_name(GreensRelation r) {
  switch (r) {
    case GreensRelation::L: return "L";
    case GreensRelation::R: return "R";
    case GreensRelation::H: return "H";
    case GreensRelation::D: return "D";
    case GreensRelation::J: return "J";
  }
  return "?";
}

inline GreensRelation relation_from_name(std::string const& s) {
  if (s == "L") return GreensRelation::L;
  if (s == "R") return GreensRelation::R;
  if (s == "H") return GreensRelation::H;
  if (s == "D") return GreensRelation::D;
  if (s == "J") return GreensRelation::J;
  throw std::invalid_argument("unknown Green's relation \"" + s + "\"");
}

struct GreensClassification {
  GreensRelation                relation;
  std::vector<std::vector<int>> classes;   // canonical: by least member
  std::vector<int>              class_of;  // element index -> class id

  bool same_class(int a, int b) const {
    return class_of[static_cast<std::size_t>(a)]
           == class_of[static_cast<std::size_t>(b)];
  }
};

struct GreensAll {
  GreensClassification L, R, H, D, J;
};

namespace detail {

inline GreensClassification canonicalize(GreensRelation          rel,
                                         std::vector<int> const& raw_ids) {
  // renumber class ids by least member, build member lists
  std::unordered_map<int, int> first_seen;
  std::vector<int>             ids(raw_ids.size());
  for (std::size_t i = 0; i < raw_ids.size(); ++i) {
    auto [it, inserted]
        = first_seen.emplace(raw_ids[i], static_cast<int>(first_seen.size()));
    ids[i] = it->second;
  }
  std::vector<std::vector<int>> classes(first_seen.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    classes[static_cast<std::size_t>(ids[i])].push_back(
        static_cast<int>(i));
  }
  return GreensClassification{rel, std::move(classes), std::move(ids)};
}

}  // namespace detail

// Definitional Green's relations, computed from principal ideals via the
// multiplication table.  Serves as the oracle for the characterized fast
// paths.
inline GreensAll greens_oracle_all(SemigroupInstance const& S,
                                   Budget const& budget = Budget::active()) {
  using detail::Bitset;
  MulTable const    t = mul_table(S, budget);
  std::size_t const m = S.size();

  // L: equal left principal ideals S^1 a; R: equal a S^1
  std::unordered_map<Bitset, int, detail::BitsetHash> lids, rids;
  std::vector<int> lraw(m), rraw(m);
  for (std::size_t a = 0; a < m; ++a) {
    Bitset lset(m), rset(m);
    lset.set(a);
    rset.set(a);
    for (std::size_t s = 0; s < m; ++s) {
      lset.set(t.at(s, a));
      rset.set(t.at(a, s));
    }
    lraw[a] = lids.emplace(lset, static_cast<int>(lids.size())).first->second;
    rraw[a] = rids.emplace(rset, static_cast<int>(rids.size())).first->second;
  }

  // H = L meet R
  std::vector<int> hraw(m);
  {
    std::unordered_map<std::int64_t, int> hids;
    for (std::size_t a = 0; a < m; ++a) {
      std::int64_t key = (static_cast<std::int64_t>(lraw[a]) << 32)
                         | static_cast<std::int64_t>(rraw[a]);
      hraw[a] = hids.emplace(key, static_cast<int>(hids.size())).first->second;
    }
  }

  // D = join of L and R, computed by union-find and verified against the
  // relation composition L o R = R o L
  detail::UnionFind uf(m);
  {
    std::vector<int> lrep(lids.size(), -1), rrep(rids.size(), -1);
    for (std::size_t a = 0; a < m; ++a) {
      int& lr = lrep[static_cast<std::size_t>(lraw[a])];
      if (lr < 0) {
        lr = static_cast<int>(a);
      } else {
        uf.unite(static_cast<int>(a), lr);
      }
      int& rr = rrep[static_cast<std::size_t>(rraw[a])];
      if (rr < 0) {
        rr = static_cast<int>(a);
      } else {
        uf.unite(static_cast<int>(a), rr);
      }
    }
  }
  std::vector<int> draw(m);
  for (std::size_t a = 0; a < m; ++a) {
    draw[a] = uf.find(static_cast<int>(a));
  }
  {
    std::set<std::pair<int, int>> lr_pairs, rl_pairs;
    for (std::size_t c = 0; c < m; ++c) {
      lr_pairs.emplace(lraw[c], rraw[c]);
      rl_pairs.emplace(rraw[c], lraw[c]);
    }
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        bool joined = draw[a] == draw[b];
        bool lor    = lr_pairs.count({lraw[a], rraw[b]}) > 0;
        bool rol    = rl_pairs.count({rraw[a], lraw[b]}) > 0;
        if (joined != lor || lor != rol) {
          throw std::logic_error(
              "greens_oracle: D join disagrees with L o R / R o L");
        }
      }
    }
  }

  // J: equal two-sided principal ideals S^1 a S^1.  The principal ideal
  // is constant on D-classes (L- and R-related elements generate the same
  // two-sided ideal), so one expansion per D-class representative
  // suffices.
  std::vector<int> jraw(m, -1);
  {
    std::unordered_map<int, std::vector<std::size_t>> dclasses;
    for (std::size_t a = 0; a < m; ++a) {
      dclasses[draw[a]].push_back(a);
    }
    std::unordered_map<Bitset, int, detail::BitsetHash> jids;
    for (auto const& [rep, members] : dclasses) {
      std::size_t              seed = members.front();
      Bitset                   ideal(m);
      std::vector<std::size_t> work{seed};
      ideal.set(seed);
      while (!work.empty()) {
        std::size_t x = work.back();
        work.pop_back();
        for (std::size_t s = 0; s < m; ++s) {
          for (std::size_t p : {static_cast<std::size_t>(t.at(s, x)),
                                static_cast<std::size_t>(t.at(x, s))}) {
            if (!ideal.test(p)) {
              ideal.set(p);
              work.push_back(p);
            }
          }
        }
      }
      int id = jids.emplace(ideal, static_cast<int>(jids.size()))
                   .first->second;
      for (std::size_t a : members) {
        jraw[a] = id;
      }
    }
  }

  return GreensAll{detail::canonicalize(GreensRelation::L, lraw),
                   detail::canonicalize(GreensRelation::R, rraw),
                   detail::canonicalize(GreensRelation::H, hraw),
                   detail::canonicalize(GreensRelation::D, draw),
                   detail::canonicalize(GreensRelation::J, jraw)};
}

inline GreensClassification greens_oracle(SemigroupInstance const& S,
                                          GreensRelation           rel,
                                          Budget const&            budget
                                          = Budget::active()) {
  GreensAll all = greens_oracle_all(S, budget);
  switch (rel) {
    case GreensRelation::L: return all.L;
    case GreensRelation::R: return all.R;
    case GreensRelation::H: return all.H;
    case GreensRelation::D: return all.D;
    case GreensRelation::J: return all.J;
  }
  throw std::invalid_argument("greens_oracle: bad relation");
}

// Two-sided ideal test: nonempty and closed under multiplication by S on
// both sides.
inline bool is_ideal(SemigroupInstance const& S,
                     std::vector<int> const&  subset) {
  if (subset.empty()) {
    return false;
  }
  std::vector<bool> member(S.size(), false);
  for (int i : subset) {
    if (i < 0 || static_cast<std::size_t>(i) >= S.size()) {
      throw std::invalid_argument("is_ideal: index out of range");
    }
    member[static_cast<std::size_t>(i)] = true;
  }
  for (int u : subset) {
    for (std::size_t s = 0; s < S.size(); ++s) {
      Transformation const& us = S.elements[s];
      int left  = S.index_of(compose(us, S.elements[static_cast<std::size_t>(u)]));
      int right = S.index_of(compose(S.elements[static_cast<std::size_t>(u)], us));
      if (left < 0 || right < 0 || !member[static_cast<std::size_t>(left)]
          || !member[static_cast<std::size_t>(right)]) {
        return false;
      }
    }
  }
  return true;
}

// Table-backed variant, for sweeps that already paid for the Cayley table.
inline bool is_ideal(SemigroupInstance const& S,
                     std::vector<int> const&  subset,
                     MulTable const&          table) {
  if (subset.empty()) {
    return false;
  }
  std::vector<bool> member(S.size(), false);
  for (int i : subset) {
    if (i < 0 || static_cast<std::size_t>(i) >= S.size()) {
      throw std::invalid_argument("is_ideal: index out of range");
    }
    member[static_cast<std::size_t>(i)] = true;
  }
  for (int u : subset) {
    for (int s = 0; s < static_cast<int>(S.size()); ++s) {
      if (!member[static_cast<std::size_t>(table.at(s, u))]
          || !member[static_cast<std::size_t>(table.at(u, s))]) {
        return false;
      }
    }
  }
  return true;
}

// Definitional regularity: some b in the enumerated T_{E*}(X) satisfies
// a b a = a.  Oracle counterpart of is_regular_element.
inline bool is_regular_bruteforce(Transformation const&    a,
                                  SemigroupInstance const& T_estar) {
  if (!is_E_star_preserving(a, T_estar.E)) {
    throw std::invalid_argument(
        "is_regular_bruteforce: element is not E*-preserving");
  }
  for (auto const& b : T_estar.elements) {
    if (compose(compose(a, b), a) == a) {
      return true;
    }
  }
  return false;
}

inline bool is_regular_bruteforce(Transformation const& a,
                                  Partition const&      E,
                                  Budget const& budget = Budget::active()) {
  return is_regular_bruteforce(
      a, enumerate(SemigroupKind::T_Estar, E, budget));
}

}  // namespace regt

#endif  // REGT_SEMIGROUP_HPP_
