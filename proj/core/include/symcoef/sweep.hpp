#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "symcoef/symmetry.hpp"

namespace symcoef {

/// One (p, alpha) record of a coefficient sweep.
struct SweepRow {
  double p;
  double alpha;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

enum class Spacing { Log, Linear };

/// Coefficients of |.|^p over a grid of `points` exponents spanning
/// [p_min, p_max] (endpoints exact). Requires 1 < p_min < p_max, points >= 2.
std::vector<SweepRow> compute_sweep(double p_min, double p_max, int points,
                                    Spacing spacing, double tol = kDefaultTol);

/// Shortest round-trip decimal representation (17 significant digits max),
/// locale-independent.
std::string format_shortest(double value);

/// Writes `p,alpha` header plus one row per line; every line
/// newline-terminated, no trailing whitespace.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows);

/// Parses what write_sweep_csv emits; exact round-trip. Throws
/// std::runtime_error on malformed input.
std::vector<SweepRow> read_sweep_csv(std::istream& in);

}  // namespace symcoef
