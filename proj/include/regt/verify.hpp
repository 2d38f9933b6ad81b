#ifndef REGT_VERIFY_HPP_
#define REGT_VERIFY_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "budget.hpp"
#include "cayley.hpp"
#include "greens.hpp"
#include "ideals.hpp"
#include "kernel.hpp"
#include "partition.hpp"
#include "predicates.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace regt {

enum class CheckStatus { Pass, Fail, Skip };

inline char const* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skip: return "SKIP";
  }
  return "?";
}

struct VerificationEntry {
  std::string check;
  std::string instance;
  CheckStatus status;
  std::string detail;  // counterexample or skip reason, empty on pass
  double      elapsed_s = 0.0;
};

struct VerificationReport {
  std::vector<VerificationEntry> entries;

  int count(CheckStatus s) const {
    int n = 0;
    for (auto const& e : entries) {
      n += (e.status == s) ? 1 : 0;
    }
    return n;
  }
  bool all_pass() const {
    return count(CheckStatus::Fail) == 0;
  }
  void append(VerificationReport const& other) {
    entries.insert(entries.end(), other.entries.begin(),
                   other.entries.end());
  }
};

inline std::string format_entry(VerificationEntry const& e) {
  std::ostringstream os;
  os << status_name(e.status) << " " << e.check;
  if (!e.instance.empty()) {
    os << " [" << e.instance << "]";
  }
  os << " (" << e.elapsed_s << "s)";
  if (!e.detail.empty()) {
    os << " -- " << e.detail;
  }
  return os.str();
}

inline std::string partition_label(Partition const& E) {
  std::ostringstream os;
  os << "n=" << E.size() << " blocks=";
  for (int i = 0; i < E.num_blocks(); ++i) {
    os << (i ? "," : "") << "{";
    bool first = true;
    for (int x : E.block(i)) {
      os << (first ? "" : " ") << x;
      first = false;
    }
    os << "}";
  }
  return os.str();
}

namespace detail {

struct CheckOutcome {
  CheckStatus status;
  std::string detail;
};

inline CheckOutcome chk_pass() {
  return {CheckStatus::Pass, ""};
}
inline CheckOutcome chk_fail(std::string d) {
  return {CheckStatus::Fail, std::move(d)};
}
inline CheckOutcome chk_skip(std::string d) {
  return {CheckStatus::Skip, std::move(d)};
}

template <typename Fn>
VerificationEntry run_check(std::string name, std::string instance,
                            Fn&& fn) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationEntry e{std::move(name), std::move(instance),
                      CheckStatus::Pass, "", 0.0};
  try {
    CheckOutcome out = fn();
    e.status = out.status;
    e.detail = std::move(out.detail);
  } catch (std::exception const& ex) {
    e.status = CheckStatus::Fail;
    e.detail = std::string("exception: ") + ex.what();
  }
  e.elapsed_s = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return e;
}

inline std::string show_map(Transformation const& t) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < t.degree(); ++i) {
    os << (i ? " " : "") << t[i];
  }
  os << "]";
  return os.str();
}

}  // namespace detail

// Shared per-instance enumeration.  When the instance exceeds the budget
// the optionals stay empty and checks report Skip with the reason.
struct InstanceData {
  Partition                        E;
  std::optional<SemigroupInstance> testar;
  std::optional<SemigroupInstance> regt;
  std::string                      skip_reason;
};

inline InstanceData load_instance(Partition E,
                                  Budget const& budget = Budget::active()) {
  InstanceData data{std::move(E), std::nullopt, std::nullopt, ""};
  try {
    data.testar.emplace(
        enumerate(SemigroupKind::T_Estar, data.E, budget));
    data.regt.emplace(enumerate(SemigroupKind::RegT, data.E, budget));
  } catch (CapacityError const& ex) {
    data.testar.reset();
    data.regt.reset();
    data.skip_reason = ex.what();
  }
  return data;
}

// --- per-instance checks -------------------------------------------------

// Pointwise regularity criterion agrees with the definitional search, and
// the regular part coincides with the whole of T_{E*}(X) at finite scale.
inline VerificationEntry check_regularity(InstanceData const& data,
                                          Budget const&       budget
                                          = Budget::active()) {
  (void)budget;
  return detail::run_check(
      "regularity-criterion", partition_label(data.E),
      [&]() -> detail::CheckOutcome {
        if (!data.testar) {
          return detail::chk_skip(data.skip_reason);
        }
        SemigroupInstance const& T = *data.testar;
        for (auto const& a : T.elements) {
          bool fast  = is_regular_element(a, data.E);
          bool brute = is_regular_bruteforce(a, T);
          if (fast != brute) {
            return detail::chk_fail("criterion disagrees with search at "
                                    + detail::show_map(a));
          }
        }
        if (data.regt->elements != T.elements) {
          return detail::chk_fail(
              "reg(T) differs from T_{E*}(X) on a finite instance");
        }
        return detail::chk_pass();
      });
}

// reg(T) is a subsemigroup and every inner inverse of a regular element
// is itself regular, so reg(T) is the largest regular subsemigroup.
inline VerificationEntry check_largest_regular(InstanceData const& data,
                                               Budget const& budget
                                               = Budget::active()) {
  (void)budget;
  return detail::run_check(
      "largest-regular-subsemigroup", partition_label(data.E),
      [&]() -> detail::CheckOutcome {
        if (!data.regt) {
          return detail::chk_skip(data.skip_reason);
        }
        SemigroupInstance const& R = *data.regt;
        SemigroupInstance const& T = *data.testar;
        for (auto const& a : R.elements) {
          for (auto const& b : R.elements) {
            if (!R.contains(compose(a, b))) {
              return detail::chk_fail("product escapes reg(T): "
                                      + detail::show_map(a) + " * "
                                      + detail::show_map(b));
            }
          }
        }
        for (auto const& a : R.elements) {
          for (auto const& b : T.elements) {
            if (compose(compose(a, b), a) == a && !R.contains(b)) {
              return detail::chk_fail("inner inverse outside reg(T): "
                                      + detail::show_map(b) + " for "
                                      + detail::show_map(a));
            }
          }
        }
        return detail::chk_pass();
      });
}

// The characterized Green's relations reproduce the definitional oracle
// on every ordered pair of reg(T).
inline VerificationEntry check_greens(InstanceData const& data,
                                      Budget const&       budget
                                      = Budget::active()) {
  return detail::run_check(
      "greens-relations", partition_label(data.E),
      [&]() -> detail::CheckOutcome {
        if (!data.regt) {
          return detail::chk_skip(data.skip_reason);
        }
        SemigroupInstance const& R = *data.regt;
        if (R.size() > budget.max_oracle_elements) {
          return detail::chk_skip("oracle budget: " +
                                  std::to_string(R.size()) + " elements");
        }
        GreensAll oracle = greens_oracle_all(R, budget);
        int const m      = static_cast<int>(R.size());
        for (int i = 0; i < m; ++i) {
          Transformation const& a = R.elements[static_cast<std::size_t>(i)];
          for (int j = i; j < m; ++j) {
            Transformation const& b =
                R.elements[static_cast<std::size_t>(j)];
            auto mismatch = [&](char const* rel) {
              return detail::chk_fail(std::string(rel)
                                      + " disagrees with oracle at "
                                      + detail::show_map(a) + ", "
                                      + detail::show_map(b));
            };
            if (l_related(a, b, data.E) != oracle.L.same_class(i, j)) {
              return mismatch("L");
            }
            if (r_related(a, b, data.E) != oracle.R.same_class(i, j)) {
              return mismatch("R");
            }
            if (h_related(a, b, data.E) != oracle.H.same_class(i, j)) {
              return mismatch("H");
            }
            DResult d = d_related(a, b, data.E);
            if (d.related != oracle.D.same_class(i, j)) {
              return mismatch("D");
            }
            if (d_related_profile(a, b, data.E) != d.related) {
              return mismatch("D-profile");
            }
            if (j_related(a, b, data.E, &R, budget)
                != oracle.J.same_class(i, j)) {
              return mismatch("J");
            }
          }
        }
        return detail::chk_pass();
      });
}

// Divisibility a = lambda b mu: dominance test versus the definitional
// reachability sweep, and the constructive factorization recomposes.
inline VerificationEntry check_divisibility(InstanceData const& data,
                                            Budget const&       budget
                                            = Budget::active()) {
  return detail::run_check(
      "divisibility", partition_label(data.E),
      [&]() -> detail::CheckOutcome {
        if (!data.regt) {
          return detail::chk_skip(data.skip_reason);
        }
        SemigroupInstance const& R = *data.regt;
        if (R.size() > budget.max_oracle_elements) {
          return detail::chk_skip("oracle budget: " +
                                  std::to_string(R.size()) + " elements");
        }
        MulTable const table = mul_table(R, budget);
        int const      m     = static_cast<int>(R.size());
        bool const brute_ok  = R.size() <= 512;
        std::vector<bool> reach;
        for (int bi = 0; bi < m; ++bi) {
          Transformation const& b =
              R.elements[static_cast<std::size_t>(bi)];
          if (brute_ok) {
            // reachability {lambda b mu} from the Cayley table
            std::vector<bool> left(R.size(), false);
            left[static_cast<std::size_t>(bi)] = true;
            for (int l = 0; l < m; ++l) {
              left[table.at(static_cast<std::size_t>(l),
                            static_cast<std::size_t>(bi))] = true;
            }
            reach.assign(R.size(), false);
            for (int x = 0; x < m; ++x) {
              if (!left[static_cast<std::size_t>(x)]) {
                continue;
              }
              reach[static_cast<std::size_t>(x)] = true;
              for (int r = 0; r < m; ++r) {
                reach[table.at(static_cast<std::size_t>(x),
                               static_cast<std::size_t>(r))] = true;
              }
            }
          }
          for (int ai = 0; ai < m; ++ai) {
            Transformation const& a =
                R.elements[static_cast<std::size_t>(ai)];
            bool fast = divides(a, b, data.E);
            if (brute_ok && fast != reach[static_cast<std::size_t>(ai)]) {
              return detail::chk_fail(
                  "dominance test disagrees with reachability: a="
                  + detail::show_map(a) + " b=" + detail::show_map(b));
            }
            if (fast) {
              // self-verifying: throws when lambda b mu != a
              construct_factorization(a, b, data.E);
            }
          }
        }
        return detail::chk_pass();
      });
}

namespace detail {

// Definitional principal ideal of element g from the Cayley table, with
// an identity adjoined on both sides.
inline std::vector<int> principal_bruteforce(MulTable const& table,
                                             int             g) {
  int const         m = static_cast<int>(table.m);
  std::vector<bool> left(table.m, false);
  left[static_cast<std::size_t>(g)] = true;
  for (int l = 0; l < m; ++l) {
    left[table.at(static_cast<std::size_t>(l),
                  static_cast<std::size_t>(g))] = true;
  }
  std::vector<bool> in(table.m, false);
  for (int x = 0; x < m; ++x) {
    if (!left[static_cast<std::size_t>(x)]) {
      continue;
    }
    in[static_cast<std::size_t>(x)] = true;
    for (int r = 0; r < m; ++r) {
      in[table.at(static_cast<std::size_t>(x),
                  static_cast<std::size_t>(r))] = true;
    }
  }
  std::vector<int> out;
  for (int x = 0; x < m; ++x) {
    if (in[static_cast<std::size_t>(x)]) {
      out.push_back(x);
    }
  }
  return out;
}

}  // namespace detail

// Ideal classification: every Q(r) is an ideal, the enumerated lattice is
// exactly the unions of principal ideals, Q(2) is the unique minimal
// ideal, and the principality test matches the exhaustive generator
// search.
inline VerificationEntry check_ideal_lattice(InstanceData const& data,
                                             Budget const&       budget
                                             = Budget::active()) {
  return detail::run_check(
      "ideal-lattice", partition_label(data.E),
      [&]() -> detail::CheckOutcome {
        if (!data.regt) {
          return detail::chk_skip(data.skip_reason);
        }
        SemigroupInstance const& R = *data.regt;
        if (R.size() > budget.max_oracle_elements) {
          return detail::chk_skip("oracle budget: " +
                                  std::to_string(R.size()) + " elements");
        }
        MulTable const table = mul_table(R, budget);

        // every admissible bound vector yields a two-sided ideal
        int const        k = data.E.num_blocks();
        std::vector<int> r(static_cast<std::size_t>(k), 2);
        for (;;) {
          CardinalVector bound{r, VectorContext::BoundVector};
          IdealSet       q = q_set(bound, R);
          if (!is_ideal(R, q.members, table)) {
            std::ostringstream os;
            os << "Q(r) not an ideal for r=";
            for (int v : r) {
              os << v << " ";
            }
            return detail::chk_fail(os.str());
          }
          int pos = 0;
          while (pos < k
                 && r[static_cast<std::size_t>(pos)]
                        == data.E.block_size(pos) + 1) {
            r[static_cast<std::size_t>(pos)] = 2;
            ++pos;
          }
          if (pos == k) {
            break;
          }
          r[static_cast<std::size_t>(pos)] += 1;
        }

        std::vector<IdealSet> ideals;
        try {
          ideals = enumerate_ideals(R, budget);
        } catch (CapacityError const& ex) {
          return detail::chk_skip(ex.what());
        }
        for (auto const& w : ideals) {
          if (!is_ideal(R, w.members, table)) {
            return detail::chk_fail("enumerated set is not an ideal");
          }
        }

        // Q(2) is contained in every enumerated ideal and appears itself
        IdealSet kern = kernel_q2(R);
        if (kern.members.empty()) {
          return detail::chk_fail("empty kernel Q(2)");
        }
        bool kern_listed = false;
        for (auto const& w : ideals) {
          if (w.members == kern.members) {
            kern_listed = true;
          }
          if (!std::includes(w.members.begin(), w.members.end(),
                             kern.members.begin(), kern.members.end())) {
            return detail::chk_fail(
                "Q(2) escapes an enumerated ideal: not minimal");
          }
        }
        if (!kern_listed) {
          return detail::chk_fail("Q(2) missing from the enumeration");
        }

        // principality agrees with exhaustive generator search and with
        // being a single principal ideal
        std::set<std::vector<int>> principal_sets;
        for (auto const& g : R.elements) {
          principal_sets.insert(principal_ideal(g, R).members);
        }
        for (auto const& w : ideals) {
          bool predicted = principal_sets.count(w.members) > 0;
          auto searched  = is_principal(w, R);
          if (predicted != searched.first) {
            return detail::chk_fail(
                "principality search disagrees with the lattice shape");
          }
          if (searched.first) {
            if (!searched.second
                || principal_ideal(*searched.second, R).members
                       != w.members) {
              return detail::chk_fail("principal generator fails");
            }
          }
        }

        if (R.size() <= 512) {
          // definitional cross-check from the Cayley table
          std::set<std::vector<int>> brute_principals;
          for (int g = 0; g < static_cast<int>(R.size()); ++g) {
            std::vector<int> p = detail::principal_bruteforce(table, g);
            if (p != principal_ideal(
                         R.elements[static_cast<std::size_t>(g)], R)
                         .members) {
              return detail::chk_fail(
                  "principal ideal differs from Cayley-table closure at "
                  + detail::show_map(
                      R.elements[static_cast<std::size_t>(g)]));
            }
            brute_principals.insert(std::move(p));
          }
          // all unions of distinct principal ideals, deduplicated
          std::vector<std::vector<int>> ps(brute_principals.begin(),
                                           brute_principals.end());
          std::set<std::vector<int>>    unions;
          std::size_t const             nsub = std::size_t(1) << ps.size();
          if (ps.size() <= 20) {
            for (std::size_t mask = 1; mask < nsub; ++mask) {
              std::set<int> u;
              for (std::size_t t = 0; t < ps.size(); ++t) {
                if (mask & (std::size_t(1) << t)) {
                  u.insert(ps[t].begin(), ps[t].end());
                }
              }
              unions.insert(std::vector<int>(u.begin(), u.end()));
            }
            std::set<std::vector<int>> enumerated;
            for (auto const& w : ideals) {
              enumerated.insert(w.members);
            }
            if (unions != enumerated) {
              return detail::chk_fail(
                  "enumerated lattice differs from the unions of "
                  "principal ideals");
            }
          }
        }
        return detail::chk_pass();
      });
}

// The kernel Q(2): right group of order |I|! prod |A_i|, a disjoint union
// of groups each isomorphic to Sym over a cross-section.
inline VerificationEntry check_kernel(InstanceData const& data,
                                      Budget const&       budget
                                      = Budget::active()) {
  (void)budget;
  return detail::run_check(
      "kernel-structure", partition_label(data.E),
      [&]() -> detail::CheckOutcome {
        std::vector<Transformation> kern = kernel_elements(data.E);
        if (data.regt) {
          IdealSet q2 = kernel_q2(*data.regt);
          std::vector<Transformation> via_q2;
          for (int idx : q2.members) {
            via_q2.push_back(
                data.regt->elements[static_cast<std::size_t>(idx)]);
          }
          if (via_q2 != kern) {
            return detail::chk_fail(
                "Q(2) differs from the direct kernel generation");
          }
        }
        std::uint64_t expected = 1;
        for (int i = 2; i <= data.E.num_blocks(); ++i) {
          expected *= static_cast<std::uint64_t>(i);
        }
        std::uint64_t fact = expected;
        for (int i = 0; i < data.E.num_blocks(); ++i) {
          expected *= static_cast<std::uint64_t>(data.E.block_size(i));
        }
        if (kern.size() != expected) {
          return detail::chk_fail(
              "kernel size " + std::to_string(kern.size())
              + " != |I|! prod |A_i| = " + std::to_string(expected));
        }
        for (auto const& a : kern) {
          if (!is_in_kernel(a, data.E)) {
            return detail::chk_fail("kernel membership test rejects "
                                    + detail::show_map(a));
          }
        }
        if (!is_right_group(kern)) {
          return detail::chk_fail("kernel is not a right group");
        }
        std::vector<HClassGroup> groups = h_class_decomposition(data.E);
        std::uint64_t            prod   = expected / fact;
        if (groups.size() != prod) {
          return detail::chk_fail(
              "H-class count " + std::to_string(groups.size())
              + " != prod |A_i| = " + std::to_string(prod));
        }
        std::size_t idem = 0;
        for (auto const& g : groups) {
          if (g.elements.size() != fact) {
            return detail::chk_fail("H-class size differs from |I|!");
          }
          for (auto const& a : g.elements) {
            bool is_idem = is_idempotent_in_q2(a, data.E);
            if (is_idem != (compose(a, a) == a)) {
              return detail::chk_fail("idempotence criteria disagree at "
                                      + detail::show_map(a));
            }
            idem += is_idem ? 1 : 0;
          }
        }
        if (idem != prod) {
          return detail::chk_fail("idempotent count "
                                  + std::to_string(idem)
                                  + " != prod |A_i|");
        }
        // the idempotents form a right-zero band: e f = f
        for (auto const& g : groups) {
          for (auto const& h : groups) {
            if (compose(g.identity, h.identity) != h.identity) {
              return detail::chk_fail(
                  "idempotents fail the right-zero law");
            }
          }
        }
        return detail::chk_pass();
      });
}

// reg(T) is the full transformation semigroup exactly when E has one
// block; otherwise a non-idempotent kernel witness with a fixed point
// certifies the failure.
inline VerificationEntry check_iso_criterion(InstanceData const& data,
                                             Budget const&       budget
                                             = Budget::active()) {
  (void)budget;
  return detail::run_check(
      "iso-criterion", partition_label(data.E),
      [&]() -> detail::CheckOutcome {
        IsoCriterionResult res =
            iso_to_full_transformation_criterion(data.E);
        bool expected = (data.E.num_blocks() == 1);
        if (res.iso_to_full != expected) {
          return detail::chk_fail("criterion answer unexpected");
        }
        if (expected && data.testar) {
          Budget all = Budget::active();
          SemigroupInstance full =
              enumerate(SemigroupKind::T, data.E, all);
          if (full.elements != data.testar->elements) {
            return detail::chk_fail(
                "one-block reg(T) differs from the full semigroup");
          }
        }
        if (!expected) {
          if (!res.non_idempotent_witness) {
            return detail::chk_fail("missing witness");
          }
          Transformation const& w = *res.non_idempotent_witness;
          if (compose(w, w) == w || !is_in_kernel(w, data.E)) {
            return detail::chk_fail("witness fails its contract");
          }
        }
        return detail::chk_pass();
      });
}

inline VerificationReport verify_instance(Partition const& E,
                                          Budget const&    budget
                                          = Budget::active()) {
  InstanceData       data = load_instance(E, budget);
  VerificationReport rep;
  rep.entries.push_back(check_regularity(data, budget));
  rep.entries.push_back(check_largest_regular(data, budget));
  rep.entries.push_back(check_greens(data, budget));
  rep.entries.push_back(check_divisibility(data, budget));
  rep.entries.push_back(check_ideal_lattice(data, budget));
  rep.entries.push_back(check_kernel(data, budget));
  rep.entries.push_back(check_iso_criterion(data, budget));
  return rep;
}

// --- instance-independent checks -----------------------------------------

// Sorted-greedy dominance matching versus the |I|! search, exhaustively
// for short vectors and randomized beyond.
inline VerificationEntry check_dominance_matcher() {
  return detail::run_check(
      "dominance-matcher", "",
      [&]() -> detail::CheckOutcome {
        auto agree = [](std::vector<int> const& a,
                        std::vector<int> const& b,
                        bool strict) -> bool {
          CardinalVector ca{a, VectorContext::ImageSizes};
          CardinalVector cb{b, VectorContext::ImageSizes};
          auto fast  = dominance_exists(ca, cb, strict);
          auto brute = dominance_exists_allperms(ca, cb, strict);
          if (fast.has_value() != brute.has_value()) {
            return false;
          }
          if (fast) {  // witness must actually witness
            for (std::size_t i = 0; i < a.size(); ++i) {
              int lhs = a[i];
              int rhs = b[static_cast<std::size_t>((*fast)[i])];
              if (strict ? !(lhs < rhs) : !(lhs <= rhs)) {
                return false;
              }
            }
          }
          return true;
        };
        auto show = [](std::vector<int> const& v) {
          std::string s = "(";
          for (int x : v) {
            s += std::to_string(x) + " ";
          }
          return s + ")";
        };
        for (int len = 1; len <= 5; ++len) {
          std::size_t count = 1;
          for (int i = 0; i < len; ++i) {
            count *= 4;
          }
          auto vec_of = [&](std::size_t code) {
            std::vector<int> v(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) {
              v[static_cast<std::size_t>(i)] =
                  static_cast<int>(code % 4) + 1;
              code /= 4;
            }
            return v;
          };
          for (std::size_t ca = 0; ca < count; ++ca) {
            for (std::size_t cb = 0; cb < count; ++cb) {
              std::vector<int> a = vec_of(ca), b = vec_of(cb);
              if (!agree(a, b, false) || !agree(a, b, true)) {
                return detail::chk_fail("mismatch at a=" + show(a)
                                        + " b=" + show(b));
              }
            }
          }
        }
        std::mt19937                       rng(20240915);
        std::uniform_int_distribution<int> entry(1, 6);
        for (int len : {6}) {
          for (int trial = 0; trial < 10000; ++trial) {
            std::vector<int> a(static_cast<std::size_t>(len)),
                b(static_cast<std::size_t>(len));
            for (int i = 0; i < len; ++i) {
              a[static_cast<std::size_t>(i)] = entry(rng);
              b[static_cast<std::size_t>(i)] = entry(rng);
            }
            if (!agree(a, b, false) || !agree(a, b, true)) {
              return detail::chk_fail("random mismatch at a=" + show(a)
                                      + " b=" + show(b));
            }
          }
        }
        return detail::chk_pass();
      });
}

// Every right group embeds into the kernel of a reg(T); semigroups that
// are not right groups are rejected with a witness.
inline VerificationEntry check_embedding(Budget const& budget
                                         = Budget::active()) {
  return detail::run_check(
      "embedding", "",
      [&]() -> detail::CheckOutcome {
        struct Case {
          std::string name;
          CayleyTable group;
        };
        std::vector<Case> groups;
        groups.push_back({"trivial", tables::trivial_group()});
        groups.push_back({"Z2", tables::cyclic_group(2)});
        groups.push_back({"Z3", tables::cyclic_group(3)});
        groups.push_back({"Z4", tables::cyclic_group(4)});
        groups.push_back({"V4", tables::klein_four()});
        groups.push_back({"S3", tables::symmetric_group_3()});
        for (auto const& g : groups) {
          for (int k = 1; g.group.order * k <= 8; ++k) {
            CayleyTable S = make_right_group(g.group, k);
            Embedding   emb = embed(S);  // self-verifying, throws on fail
            if (!emb.report.ok()) {
              return detail::chk_fail("embedding report not ok for "
                                      + g.name + " x RZ(" +
                                      std::to_string(k) + ")");
            }
            std::vector<Transformation> kern =
                kernel_elements(emb.E);
            for (auto const& rho : emb.psi) {
              if (std::find(kern.begin(), kern.end(), rho)
                  == kern.end()) {
                return detail::chk_fail(
                    "image escapes the kernel for " + g.name);
              }
            }
            if (S.order <= 6) {
              SemigroupInstance reg =
                  enumerate(SemigroupKind::RegT, emb.E, budget);
              for (auto const& rho : emb.psi) {
                if (!reg.contains(rho)) {
                  return detail::chk_fail(
                      "image escapes reg(T) for " + g.name);
                }
              }
            }
          }
        }
        for (auto const& [name, bad] :
             std::vector<std::pair<std::string, CayleyTable>>{
                 {"left-zero-2", tables::left_zero(2)},
                 {"chain-semilattice-2", tables::chain_semilattice_2()}}) {
          RightGroupCheck chk = check_right_group(bad);
          if (chk.ok) {
            return detail::chk_fail(name + " accepted as a right group");
          }
          bool threw = false;
          try {
            embed(bad);
          } catch (NotRightGroupError const&) {
            threw = true;
          }
          if (!threw) {
            return detail::chk_fail(name + " embedded without rejection");
          }
        }
        return detail::chk_pass();
      });
}

// The universal partition recovers the classical facts about the full
// transformation semigroup on three points.
inline VerificationEntry check_classical(Budget const& budget
                                         = Budget::active()) {
  return detail::run_check(
      "classical-crosscheck", "",
      [&]() -> detail::CheckOutcome {
        Partition         E    = Partition::universal(3);
        SemigroupInstance full = enumerate(SemigroupKind::T, E, budget);
        SemigroupInstance reg =
            enumerate(SemigroupKind::RegT, E, budget);
        if (full.size() != 27 || reg.elements != full.elements) {
          return detail::chk_fail("reg(T) != T_3");
        }
        std::vector<IdealSet> ideals = enumerate_ideals(reg, budget);
        if (ideals.size() != 3) {
          return detail::chk_fail("expected the chain of 3 ideals, got "
                                  + std::to_string(ideals.size()));
        }
        std::vector<std::size_t> sizes;
        for (auto const& w : ideals) {
          sizes.push_back(w.members.size());
          // each ideal is a rank bound: {a : rank(a) <= r}
          int max_rank = 0;
          for (int idx : w.members) {
            max_rank = std::max(
                max_rank,
                rank(reg.elements[static_cast<std::size_t>(idx)]));
          }
          for (std::size_t i = 0; i < reg.size(); ++i) {
            bool in = std::binary_search(w.members.begin(),
                                         w.members.end(),
                                         static_cast<int>(i));
            if (in != (rank(reg.elements[i]) <= max_rank)) {
              return detail::chk_fail("ideal is not a rank bound");
            }
          }
        }
        std::sort(sizes.begin(), sizes.end());
        if (sizes != std::vector<std::size_t>{3, 21, 27}) {
          return detail::chk_fail("ideal sizes are not 3 < 21 < 27");
        }
        IdealSet kern = kernel_q2(reg);
        if (kern.members.size() != 3) {
          return detail::chk_fail("kernel is not the 3 constants");
        }
        for (int idx : kern.members) {
          if (rank(reg.elements[static_cast<std::size_t>(idx)]) != 1) {
            return detail::chk_fail("kernel member is not constant");
          }
        }
        return detail::chk_pass();
      });
}

inline VerificationReport verify_global(Budget const& budget
                                        = Budget::active()) {
  VerificationReport rep;
  rep.entries.push_back(check_dominance_matcher());
  rep.entries.push_back(check_embedding(budget));
  rep.entries.push_back(check_classical(budget));
  return rep;
}

// All set partitions of {0..n-1} in restricted-growth-string order.
inline std::vector<Partition> all_set_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int>       rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int maxv) {
    if (pos == n) {
      int blocks = maxv + 1;
      std::vector<std::vector<int>> bl(
          static_cast<std::size_t>(blocks));
      for (int i = 0; i < n; ++i) {
        bl[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])]
            .push_back(i);
      }
      out.emplace_back(n, bl);
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, std::max(maxv, v));
    }
  };
  rec(0, -1);
  return out;
}

// Full sweep over every set partition with 1..n_max points, plus the
// instance-independent checks, optionally spread over worker threads.
inline VerificationReport verify_sweep(int           n_max,
                                       Budget const& budget
                                       = Budget::active(),
                                       int jobs = 1) {
  std::vector<Partition> instances;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Partition> level = all_set_partitions(n);
    // canonical sweep order: sorted block-size vector, then the block
    // lists lexicographically
    std::sort(level.begin(), level.end(),
              [](Partition const& a, Partition const& b) {
                auto key = [](Partition const& p) {
                  std::vector<int> sizes;
                  for (int i = 0; i < p.num_blocks(); ++i) {
                    sizes.push_back(p.block_size(i));
                  }
                  std::sort(sizes.begin(), sizes.end());
                  return sizes;
                };
                std::vector<int> ka = key(a), kb = key(b);
                if (ka != kb) {
                  return ka < kb;
                }
                for (int i = 0;
                     i < std::min(a.num_blocks(), b.num_blocks()); ++i) {
                  if (a.block(i) != b.block(i)) {
                    return a.block(i) < b.block(i);
                  }
                }
                return a.num_blocks() < b.num_blocks();
              });
    for (auto& p : level) {
      instances.push_back(std::move(p));
    }
  }
  std::vector<VerificationReport> partial(instances.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < instances.size(); ++i) {
      partial[i] = verify_instance(instances[i], budget);
    }
  } else {
    std::vector<std::thread> pool;
    std::size_t const        width = static_cast<std::size_t>(jobs);
    for (std::size_t w = 0; w < width; ++w) {
      pool.emplace_back([&, w]() {
        for (std::size_t i = w; i < instances.size(); i += width) {
          partial[i] = verify_instance(instances[i], budget);
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
  }
  VerificationReport rep;
  for (auto const& p : partial) {
    rep.append(p);
  }
  rep.append(verify_global(budget));
  return rep;
}

}  // namespace regt

#endif  // REGT_VERIFY_HPP_
