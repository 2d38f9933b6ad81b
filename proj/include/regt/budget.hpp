#ifndef REGT_BUDGET_HPP_
#define REGT_BUDGET_HPP_

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace regt {

// Thrown when an enumeration or oracle computation would exceed the
// configured budget.  The message names the budget that was hit.
struct CapacityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Resource limits for enumerations and definitional oracles.  The
// defaults are conservative desk-scale values; SEMIGROUP_BUDGET can
// override them with a comma-separated key=value list, e.g.
//   SEMIGROUP_BUDGET="n=8,elements=2000000,oracle=10000,ideals=128"
struct Budget {
  int         max_ground_size      = 7;
  std::size_t max_elements         = 1'000'000;
  std::size_t max_oracle_elements  = 5'000;
  std::size_t max_principal_ideals = 64;

  static Budget from_env() {
    char const* s = std::getenv("SEMIGROUP_BUDGET");
    if (s == nullptr) {
      return Budget{};
    }
    return parse(s);
  }

  static Budget parse(std::string const& spec) {
    Budget      b;
    std::size_t pos = 0;
    while (pos < spec.size()) {
      std::size_t end = spec.find_first_of(",;", pos);
      if (end == std::string::npos) {
        end = spec.size();
      }
      std::string item = spec.substr(pos, end - pos);
      std::size_t eq   = item.find('=');
      if (eq != std::string::npos) {
        std::string key = item.substr(0, eq);
        long long   val = std::stoll(item.substr(eq + 1));
        if (key == "n") {
          b.max_ground_size = static_cast<int>(val);
        } else if (key == "elements") {
          b.max_elements = static_cast<std::size_t>(val);
        } else if (key == "oracle") {
          b.max_oracle_elements = static_cast<std::size_t>(val);
        } else if (key == "ideals") {
          b.max_principal_ideals = static_cast<std::size_t>(val);
        } else {
          throw std::invalid_argument("SEMIGROUP_BUDGET: unknown key \"" + key
                                      + "\"");
        }
      }
      pos = end + 1;
    }
    return b;
  }

  // Process-wide budget, read from the environment once.
  static Budget const& active() {
    static Budget const b = from_env();
    return b;
  }
};

}  // namespace regt

#endif  // REGT_BUDGET_HPP_
