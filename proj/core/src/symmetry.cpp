#include "symcoef/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace symcoef {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// u^k for u in [0, 1], via exp(k log u) with exact endpoints.
double pow_unit(double u, double k) {
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  return std::exp(k * std::log(u));
}

struct BisectionOutcome {
  double u0;
  int iterations;
  double residual;
  double lo;
  double hi;
};

// Bisects the stationarity function on [0, 1]. The bracket is valid a priori:
// the value at 0 is 1 and the value at 1 is 4p(2-p) < 0 for p > 2.
BisectionOutcome bisect_stationarity(double p, double tol) {
  double lo = 0.0;
  double hi = 1.0;
  int iterations = 0;
  while (hi - lo > tol && iterations < kMaxBisectionIterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;  // bracket at double resolution
    if (stationarity_function(p, mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  const double u0 = 0.5 * (lo + hi);
  return {u0, iterations, std::abs(stationarity_function(p, u0)), lo, hi};
}

}  // namespace

const char* method_name(Method m) noexcept {
  switch (m) {
    case Method::ClosedForm: return "closed-form";
    case Method::Bisection: return "bisection";
    case Method::SumRule: return "sum-rule";
    case Method::ConjugateReduction: return "conjugate-reduction";
    case Method::PiecewiseFormula: return "piecewise-formula";
    case Method::PerfectSymmetry: return "perfect-symmetry";
  }
  return "unknown";
}

double symmetry_ratio(double p, double u) {
  require(std::isfinite(p) && p > 1.0, "symmetry_ratio requires p > 1");
  if (u == 1.0) return 1.0;
  const double up = pow_abs(u, p);
  const double up1 = pow_abs(u, p - 1.0);
  const double num = up - p * u + (p - 1.0);
  const double den = (p - 1.0) * up - p * sgn(u) * up1 + 1.0;
  return num / den;
}

double stationarity_function(double p, double u) {
  require(std::isfinite(p) && p > 2.0, "stationarity_function requires p > 2");
  require(u >= 0.0 && u <= 1.0, "stationarity_function requires u in [0, 1]");
  const double pm1 = p - 1.0;
  return pow_unit(u, 2.0 * pm1) - pm1 * pm1 * pow_unit(u, p) -
         2.0 * p * (p - 2.0) * pow_unit(u, p - 1.0) -
         pm1 * pm1 * pow_unit(u, p - 2.0) + 1.0;
}

double symmetry_ratio_nd(double p, double u, double r) {
  require(std::isfinite(p) && p > 2.0, "symmetry_ratio_nd requires p > 2");
  require(u >= 0.0, "symmetry_ratio_nd requires u >= 0");
  require(r >= -1.0 && r <= 1.0, "symmetry_ratio_nd requires r in [-1, 1]");
  require(!(u == 1.0 && r == 1.0), "symmetry_ratio_nd is undefined at (1, 1)");
  const double up = pow_abs(u, p);
  const double up1 = pow_abs(u, p - 1.0);
  const double num = up - p * r * u + (p - 1.0);
  const double den = (p - 1.0) * up - p * r * up1 + 1.0;
  return num / den;
}

double conjugate_exponent(double p) {
  require(std::isfinite(p) && p > 1.0, "conjugate_exponent requires p > 1");
  return p / (p - 1.0);
}

SymmetryCertificate alpha_power(double p, double tol) {
  require(std::isfinite(p) && p > 1.0, "alpha_power requires p > 1");
  require(std::isfinite(tol) && tol > 0.0, "alpha_power requires tol > 0");
  if (p == 2.0) {
    SymmetryCertificate cert;
    cert.alpha = 1.0;
    cert.method = Method::PerfectSymmetry;
    cert.exponent = 2.0;
    return cert;
  }
  Method method = Method::Bisection;
  double q = p;
  if (p < 2.0) {
    q = conjugate_exponent(p);
    method = Method::ConjugateReduction;
  }
  const BisectionOutcome out = bisect_stationarity(q, tol);
  SymmetryCertificate cert;
  cert.alpha = 1.0 / symmetry_ratio(q, -out.u0);
  cert.u0 = out.u0;
  cert.method = method;
  cert.iterations = out.iterations;
  cert.residual = out.residual;
  cert.exponent = q;
  cert.bracket = std::make_pair(out.lo, out.hi);
  return cert;
}

std::pair<double, double> alpha_bounds(double p) {
  require(std::isfinite(p) && p > 2.0, "alpha_bounds requires p > 2");
  return {1.0 / (2.0 * p), 1.0 / (p - 1.0)};
}

double alpha_piecewise_quadratic(double a, double b) {
  require(std::isfinite(a) && a > 0.0, "alpha_piecewise_quadratic requires a > 0");
  require(std::isfinite(b) && b > 0.0, "alpha_piecewise_quadratic requires b > 0");
  const double s = std::sqrt(a / b);
  const double t = std::sqrt(b / a);
  const double forward = (1.0 + s) / (1.0 + t);
  const double backward = (1.0 + t) / (1.0 + s);
  return std::min(forward, backward);
}

namespace {

// One merged summand of a norm-power sum; the weight is irrelevant for the
// coefficient (scaling invariance) and only tie detection matters.
struct MergedTerm {
  double exponent;
  NormFamily family;
};

bool same_function(const MergedTerm& a, const MergedTerm& b, int dim) {
  if (a.exponent != b.exponent) return false;
  if (dim == 1) return true;              // all families coincide on the line
  if (a.exponent == 2.0) return true;     // ||.||_2^2 == ||.||_p^p at p = 2
  return a.family == b.family;
}

}  // namespace

AlphaResult alpha_sum_mixed(std::span<const NormPowerTerm> terms, int dim,
                            double tol) {
  require(!terms.empty(), "alpha_sum_mixed requires at least one term");
  require(dim >= 1, "alpha_sum_mixed requires dim >= 1");
  std::vector<MergedTerm> merged;
  for (const NormPowerTerm& t : terms) {
    require(std::isfinite(t.weight) && t.weight > 0.0,
            "alpha_sum_mixed requires positive weights");
    require(std::isfinite(t.exponent) && t.exponent > 1.0,
            "alpha_sum_mixed requires exponents > 1");
    MergedTerm m{t.exponent, t.family};
    bool found = false;
    for (const MergedTerm& existing : merged) {
      if (same_function(existing, m, dim)) {
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(m);
  }

  if (merged.size() == 1) return alpha_power(merged.front().exponent, tol);

  std::sort(merged.begin(), merged.end(),
            [](const MergedTerm& a, const MergedTerm& b) {
              return a.exponent < b.exponent;
            });
  const double p_min = merged.front().exponent;
  const double p_max = merged.back().exponent;
  const bool min_unique = merged[1].exponent > p_min;
  const bool max_unique = merged[merged.size() - 2].exponent < p_max;

  if (!min_unique || !max_unique) {
    // Tied extremal degrees carried by genuinely different functions: the
    // exact rule does not apply, only the generic sum bound survives.
    double lower = 1.0;
    for (const MergedTerm& m : merged)
      lower = std::min(lower, alpha_power(m.exponent, tol).alpha);
    return AlphaInterval{lower, 1.0};
  }

  SymmetryCertificate low = alpha_power(p_min, tol);
  SymmetryCertificate high = alpha_power(p_max, tol);
  SymmetryCertificate winner = (high.alpha <= low.alpha) ? high : low;
  winner.method = Method::SumRule;
  return winner;
}

AlphaResult alpha_of(const ReferenceFunction& f, double tol) {
  const auto& value = f.node().value;

  if (const auto* pa = std::get_if<PowerAbs>(&value))
    return alpha_power(pa->exponent, tol);
  if (const auto* tn = std::get_if<TwoNormPower>(&value))
    return alpha_power(tn->exponent, tol);
  if (const auto* pn = std::get_if<PNormPower>(&value))
    return alpha_power(pn->exponent, tol);
  if (std::holds_alternative<QuadraticForm>(value)) {
    SymmetryCertificate cert;
    cert.alpha = 1.0;
    cert.method = Method::PerfectSymmetry;
    return cert;
  }
  if (const auto* pw = std::get_if<PiecewiseQuadratic1D>(&value)) {
    SymmetryCertificate cert;
    if (pw->a == pw->b) {
      cert.alpha = 1.0;
      cert.method = Method::PerfectSymmetry;
    } else {
      cert.alpha = alpha_piecewise_quadratic(pw->a, pw->b);
      cert.method = Method::PiecewiseFormula;
    }
    return cert;
  }
  if (const auto* ai = std::get_if<AffineImage>(&value))
    return alpha_of(ai->inner, tol);

  const auto& sum = std::get<ScaledSum>(value);
  if (sum.terms.size() == 1) return alpha_of(sum.terms.front().second, tol);

  // All-norm-power sums go through the exact mixed-norm rule.
  bool all_norm_powers = true;
  std::vector<NormPowerTerm> npt;
  npt.reserve(sum.terms.size());
  for (const auto& [w, g] : sum.terms) {
    if (const auto* pa = std::get_if<PowerAbs>(&g.node().value)) {
      npt.push_back({w * pa->coeff, pa->exponent, NormFamily::Euclidean});
    } else if (const auto* tn = std::get_if<TwoNormPower>(&g.node().value)) {
      npt.push_back({w * tn->coeff, tn->exponent, NormFamily::Euclidean});
    } else if (const auto* pn = std::get_if<PNormPower>(&g.node().value)) {
      npt.push_back({w * pn->coeff, pn->exponent, NormFamily::Separable});
    } else {
      all_norm_powers = false;
      break;
    }
  }
  if (all_norm_powers) return alpha_sum_mixed(npt, f.dim(), tol);

  // General sum: each Legendre summand contributes the generic lower bound;
  // the extremal-degree upper bound applies only when every summand is
  // positively homogeneous and the outer degrees are strict and unique.
  struct TermInfo {
    double lower;
    double upper;
    std::optional<double> degree;
    std::optional<SymmetryCertificate> cert;
  };
  std::vector<TermInfo> info;
  info.reserve(sum.terms.size());
  for (const auto& [w, g] : sum.terms) {
    (void)w;
    AlphaResult r = alpha_of(g, tol);
    TermInfo ti;
    if (const auto* cert = std::get_if<SymmetryCertificate>(&r)) {
      ti.lower = cert->alpha;
      ti.upper = cert->alpha;
      ti.cert = *cert;
    } else {
      const auto& iv = std::get<AlphaInterval>(r);
      ti.lower = iv.lower;
      ti.upper = iv.upper;
    }
    ti.degree = homogeneity_degree(g);
    info.push_back(std::move(ti));
  }

  double lower = 1.0;
  for (const TermInfo& ti : info) lower = std::min(lower, ti.lower);

  double upper = 1.0;
  bool all_homogeneous =
      std::all_of(info.begin(), info.end(),
                  [](const TermInfo& ti) { return ti.degree.has_value(); });
  if (all_homogeneous) {
    std::sort(info.begin(), info.end(), [](const TermInfo& a, const TermInfo& b) {
      return *a.degree < *b.degree;
    });
    const bool outer_strict =
        *info[1].degree > *info.front().degree &&
        *info[info.size() - 2].degree < *info.back().degree;
    if (outer_strict) {
      upper = std::min(info.front().upper, info.back().upper);
      if (upper == lower) {
        // The bound interval collapses: the minimum over all summands is
        // attained at an extremal degree, which pins the sum exactly.
        const TermInfo& winner =
            (info.back().upper <= info.front().upper) ? info.back()
                                                      : info.front();
        SymmetryCertificate cert =
            winner.cert ? *winner.cert : SymmetryCertificate{};
        cert.alpha = upper;
        cert.method = Method::SumRule;
        return cert;
      }
    }
  }
  return AlphaInterval{lower, upper};
}

}  // namespace symcoef
