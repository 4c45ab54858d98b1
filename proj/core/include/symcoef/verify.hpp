#pragma once

#include <string>
#include <vector>

namespace symcoef {

struct VerifyItem {
  std::string name;
  bool passed;
  std::string detail;
};

/// The self-check battery behind `symcoef verify`: closed forms against the
/// bisection path for p in {2,3,4,6,8,10}, exact cofactor factorizations for
/// even p in [4,20], conjugate-exponent spot checks, and the tied-degree
/// counterexample sum whose ratio dips below the extremal-exponent bound.
/// `closed_forms_only` restricts to the first two groups.
std::vector<VerifyItem> run_verification(bool closed_forms_only = false);

}  // namespace symcoef
