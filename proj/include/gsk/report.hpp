#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gsk {

// One verified property: the worst defect seen against its tolerance.
struct Check {
  std::string name;
  double defect = 0.0;
  double tol = 0.0;
  bool pass = false;
};

inline Check make_check(std::string name, double defect, double tol) {
  // NaN defects never pass.
  return Check{std::move(name), defect, tol, defect <= tol};
}

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

}  // namespace gsk
