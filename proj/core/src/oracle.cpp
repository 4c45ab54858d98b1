#include "symcoef/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

#include "symcoef/symmetry.hpp"

namespace symcoef {

namespace detail {

namespace {
std::uint64_t splitmix64(std::uint64_t& s) {
  s += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
}  // namespace

SampleStream::SampleStream(std::uint64_t seed, std::uint64_t index,
                           std::uint64_t lane) {
  state_ = seed;
  (void)splitmix64(state_);
  state_ ^= (index + 1) * 0xD1B54A32D192ED03ull;
  (void)splitmix64(state_);
  state_ ^= (lane + 1) * 0x8CB92BA72F3D8DD7ull;
  (void)splitmix64(state_);
}

std::uint64_t SampleStream::next_u64() { return splitmix64(state_); }

double SampleStream::uniform01() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SampleStream::normal() {
  const double u1 = uniform01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
}

}  // namespace detail

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

constexpr double kDenominatorFloor = 1e-300;

struct Best {
  double ratio = std::numeric_limits<double>::infinity();
  std::uint64_t index = ~0ull;
  Vector x;
  Vector y;

  void offer(double r, std::uint64_t i, const Vector& xx, const Vector& yy) {
    if (r < ratio || (r == ratio && i < index)) {
      ratio = r;
      index = i;
      x = xx;
      y = yy;
    }
  }
};

// Ratio of a candidate pair, or infinity when the pair is unusable
// (coincident points, underflowed or non-finite Bregman values).
double guarded_ratio(const ReferenceFunction& f, const Vector& x,
                     const Vector& y) {
  if (x == y) return std::numeric_limits<double>::infinity();
  const double den = bregman(f, y, x);
  if (!std::isfinite(den) || den < kDenominatorFloor)
    return std::numeric_limits<double>::infinity();
  const double num = bregman(f, x, y);
  if (!std::isfinite(num)) return std::numeric_limits<double>::infinity();
  return num / den;
}

Vector draw_point(detail::SampleStream& stream, int n) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = stream.normal();
  // Magnitudes span several decades: homogeneous functions are scale-free,
  // but mixed sums are not, so the scale axis has to be searched too.
  const double log_lo = std::log(1e-3);
  const double log_hi = std::log(1e3);
  const double scale = std::exp(log_lo + stream.uniform01() * (log_hi - log_lo));
  return scale * v;
}

Best scan_range(const ReferenceFunction& f, std::uint64_t begin,
                std::uint64_t end, std::uint64_t seed) {
  Best best;
  const int n = f.dim();
  for (std::uint64_t i = begin; i < end; ++i) {
    for (std::uint64_t retry = 0; retry < 64; ++retry) {
      detail::SampleStream stream(seed, i, retry);
      const Vector x = draw_point(stream, n);
      const Vector y = draw_point(stream, n);
      const double r = guarded_ratio(f, x, y);
      if (std::isfinite(r)) {
        best.offer(r, i, x, y);
        break;
      }
    }
  }
  return best;
}

}  // namespace

double bregman_ratio(const ReferenceFunction& f, const Vector& x,
                     const Vector& y) {
  if (x.size() == y.size() && x == y)
    throw std::invalid_argument("bregman_ratio requires x != y");
  return bregman(f, x, y) / bregman(f, y, x);
}

OracleEstimate alpha_grid_1d(double p, std::int64_t resolution) {
  require(std::isfinite(p) && p > 2.0,
          "alpha_grid_1d requires p > 2 (reduce via conjugate_exponent first)");
  require(resolution >= 10, "alpha_grid_1d requires resolution >= 10");

  const auto objective = [p](double u) {
    const double r = symmetry_ratio(p, u);
    return std::min(r, 1.0 / r);
  };

  const std::int64_t n = resolution;
  const double step = 2.0 / static_cast<double>(n - 1);
  double best_value = std::numeric_limits<double>::infinity();
  std::int64_t best_index = 0;
  for (std::int64_t i = 0; i < n; ++i) {
    const double u = -1.0 + step * static_cast<double>(i);
    const double value = objective(u);
    if (value < best_value) {
      best_value = value;
      best_index = i;
    }
  }

  // The profile is quasiconcave with its peak interior, so the objective is
  // quasiconvex and the minimizer sits within one step of the grid argmin;
  // golden-section shrinking converges on that bracket.
  double lo = std::max(-1.0, -1.0 + step * static_cast<double>(best_index - 1));
  double hi = std::min(1.0, -1.0 + step * static_cast<double>(best_index + 1));
  constexpr double kInvPhi = 0.6180339887498949;
  double a = hi - kInvPhi * (hi - lo);
  double b = lo + kInvPhi * (hi - lo);
  double fa = objective(a);
  double fb = objective(b);
  while (hi - lo > 1e-13) {
    if (fa <= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - kInvPhi * (hi - lo);
      fa = objective(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + kInvPhi * (hi - lo);
      fb = objective(b);
    }
  }
  const double u_star = 0.5 * (lo + hi);

  OracleEstimate est;
  est.alpha_hat = objective(u_star);
  est.samples = static_cast<std::uint64_t>(resolution);
  est.seed = 0;
  est.refined = true;
  Vector wu(1), wone(1);
  wu[0] = u_star;
  wone[0] = 1.0;
  // Order the witnesses so that D(x,y)/D(y,x) is the minimum side.
  if (symmetry_ratio(p, u_star) <= 1.0) {
    est.witness_x = wu;
    est.witness_y = wone;
  } else {
    est.witness_x = wone;
    est.witness_y = wu;
  }
  return est;
}

OracleEstimate alpha_sample_nd(const ReferenceFunction& f,
                               std::uint64_t samples, std::uint64_t seed,
                               int refine_steps, int workers) {
  require(samples >= 1, "alpha_sample_nd requires samples >= 1");
  require(refine_steps >= 0, "alpha_sample_nd requires refine_steps >= 0");
  require(workers >= 1, "alpha_sample_nd requires workers >= 1");

  Best best;
  if (workers == 1 || samples < 2 * static_cast<std::uint64_t>(workers)) {
    best = scan_range(f, 0, samples, seed);
  } else {
    // Contiguous index ranges; the merge is order-free because each index's
    // stream is self-contained and ties break on the smaller index.
    std::vector<Best> partial(static_cast<size_t>(workers));
    std::vector<std::thread> pool;
    const std::uint64_t chunk = samples / static_cast<std::uint64_t>(workers);
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t begin = chunk * static_cast<std::uint64_t>(w);
      const std::uint64_t end =
          (w + 1 == workers) ? samples : begin + chunk;
      pool.emplace_back([&, w, begin, end] {
        partial[static_cast<size_t>(w)] = scan_range(f, begin, end, seed);
      });
    }
    for (auto& t : pool) t.join();
    for (const Best& b : partial) {
      if (b.index != ~0ull) best.offer(b.ratio, b.index, b.x, b.y);
    }
  }
  if (best.index == ~0ull)
    throw std::runtime_error("alpha_sample_nd found no usable sample pair");

  // Local descent: multiplicative coordinate perturbations (including sign
  // flips) with the step halving after sweeps that yield no improvement.
  const int n = f.dim();
  double step = 0.5;
  int shrink_levels = 0;
  bool refined = false;
  for (int round = 0; round < refine_steps && shrink_levels < 40; ++round) {
    bool improved = false;
    for (int side = 0; side < 2; ++side) {
      for (int j = 0; j < n; ++j) {
        const double factors[3] = {1.0 + step, 1.0 / (1.0 + step), -1.0};
        for (double factor : factors) {
          Vector x = best.x;
          Vector y = best.y;
          double& slot = (side == 0) ? x[j] : y[j];
          const double candidate = slot * factor;
          if (candidate == slot) continue;
          slot = candidate;
          const double r = guarded_ratio(f, x, y);
          if (r < best.ratio) {
            best.ratio = r;
            best.x = x;
            best.y = y;
            improved = true;
            refined = true;
          }
        }
      }
    }
    if (!improved) {
      step *= 0.5;
      ++shrink_levels;
    }
  }

  OracleEstimate est;
  est.alpha_hat = best.ratio;
  est.witness_x = best.x;
  est.witness_y = best.y;
  est.samples = samples;
  est.seed = seed;
  est.refined = refined;
  return est;
}

bool quasiconcavity_check(double p, int grid_size) {
  require(std::isfinite(p) && p > 2.0, "quasiconcavity_check requires p > 2");
  require(grid_size >= 100, "quasiconcavity_check requires grid_size >= 100");

  std::vector<double> values(static_cast<size_t>(grid_size));
  const double step = 2.0 / static_cast<double>(grid_size - 1);
  double scale = 0.0;
  for (int i = 0; i < grid_size; ++i) {
    values[static_cast<size_t>(i)] =
        symmetry_ratio(p, -1.0 + step * static_cast<double>(i));
    scale = std::max(scale, std::abs(values[static_cast<size_t>(i)]));
  }
  const double tol = 1e-12 * scale;

  int peak = 0;
  for (int i = 1; i < grid_size; ++i) {
    if (values[static_cast<size_t>(i)] > values[static_cast<size_t>(peak)])
      peak = i;
  }
  const double peak_u = -1.0 + step * static_cast<double>(peak);
  if (peak_u >= 0.0) return false;
  for (int i = 0; i < peak; ++i) {
    if (values[static_cast<size_t>(i + 1)] < values[static_cast<size_t>(i)] - tol)
      return false;
  }
  for (int i = peak; i + 1 < grid_size; ++i) {
    if (values[static_cast<size_t>(i + 1)] > values[static_cast<size_t>(i)] + tol)
      return false;
  }
  return true;
}

}  // namespace symcoef
