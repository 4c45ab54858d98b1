#pragma once

#include <cstdint>

#include "symcoef/legendre.hpp"

namespace symcoef {

/// A sampled estimate of a symmetry coefficient. Every sample is a feasible
/// point of the defining infimum, so alpha_hat always upper-bounds the true
/// coefficient (up to roundoff), and alpha_hat equals the Bregman ratio of
/// the recorded witness pair exactly as recomputed through the catalog.
struct OracleEstimate {
  double alpha_hat = 0.0;
  Vector witness_x;
  Vector witness_y;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  bool refined = false;
};

/// D_f(x, y) / D_f(y, x). Requires x != y.
double bregman_ratio(const ReferenceFunction& f, const Vector& x,
                     const Vector& y);

/// Brute-force estimate of the coefficient of |.|^p, p > 2: scans the ratio
/// profile on a uniform grid over [-1, 1] and then shrinks the bracket
/// around the grid minimizer by golden-section search (valid by
/// quasiconcavity of the profile). Requires resolution >= 10.
OracleEstimate alpha_grid_1d(double p, std::int64_t resolution);

/// Monte Carlo estimate of the coefficient of any catalog function: draws
/// `samples` pairs with spherical Gaussian direction and log-uniform
/// magnitude across [1e-3, 1e3], keeps the minimal ratio, then runs
/// `refine_steps` sweeps of coordinate-wise multiplicative perturbation
/// descent with shrinking step around the best pair. Deterministic given
/// (f, samples, seed, refine_steps); the per-index sample streams give the
/// prefix property, and the result does not depend on `workers`.
OracleEstimate alpha_sample_nd(const ReferenceFunction& f,
                               std::uint64_t samples, std::uint64_t seed,
                               int refine_steps, int workers = 1);

/// Samples the ratio profile of |.|^p over a uniform grid on [-1, 1] and
/// checks it rises to a single peak and falls afterwards (within
/// 1e-12 * scale), with the peak at a negative abscissa. Requires p > 2 and
/// grid_size >= 100.
bool quasiconcavity_check(double p, int grid_size);

namespace detail {

/// Counter-based deterministic stream: the state for (seed, index, lane) is
/// derived directly, so sample index i never depends on draws for other
/// indices (prefix property, order-free partitioning across workers).
class SampleStream {
 public:
  SampleStream(std::uint64_t seed, std::uint64_t index, std::uint64_t lane);

  std::uint64_t next_u64();
  /// Uniform on (0, 1].
  double uniform01();
  /// Standard normal (Box-Muller).
  double normal();

 private:
  std::uint64_t state_;
};

}  // namespace detail

}  // namespace symcoef
