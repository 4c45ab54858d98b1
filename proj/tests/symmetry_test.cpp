#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "symcoef/symmetry.hpp"

using namespace symcoef;

namespace {

const double kAlpha3 =
    (1.0 - std::sqrt(2.0) * std::pow(3.0, 0.25) + std::sqrt(3.0)) / 2.0;
const double kAlpha4 = 2.0 - std::sqrt(3.0);
const double kAlpha6 = (7.0 - 3.0 * std::sqrt(5.0)) / 2.0;

void check_certificate_consistency(const SymmetryCertificate& cert) {
  if (!cert.u0) return;
  REQUIRE(cert.exponent.has_value());
  const double recomputed = 1.0 / symmetry_ratio(*cert.exponent, -*cert.u0);
  CHECK(std::abs(recomputed - cert.alpha) <= 1e-12 * cert.alpha);
  CHECK(std::abs(stationarity_function(*cert.exponent, *cert.u0)) <=
        cert.residual);
}

}  // namespace

TEST_CASE("symmetry ratio profile hits its anchor values") {
  CHECK(symmetry_ratio(4.0, 0.0) == 3.0);                 // p - 1 at the origin
  CHECK(symmetry_ratio(4.0, 1.0) == 1.0);                 // continuity branch
  CHECK(symmetry_ratio(7.3, 1.0) == 1.0);
  CHECK(symmetry_ratio(3.0, -1.0) == doctest::Approx(1.0).epsilon(1e-14));
  // The profile maximum for p = 4 sits at -(2 - sqrt(3)) with value 2 + sqrt(3).
  CHECK(symmetry_ratio(4.0, -(2.0 - std::sqrt(3.0))) ==
        doctest::Approx(2.0 + std::sqrt(3.0)).epsilon(1e-12));
  CHECK_THROWS_AS(symmetry_ratio(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("stationarity function anchor values") {
  for (double p : {2.5, 3.0, 4.0, 11.0}) CHECK(stationarity_function(p, 0.0) == 1.0);
  CHECK(stationarity_function(4.0, 1.0) == -32.0);  // 4p(2-p) at the right end
  CHECK(std::abs(stationarity_function(4.0, 2.0 - std::sqrt(3.0))) <= 1e-13);
  CHECK_THROWS_AS(stationarity_function(2.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(stationarity_function(4.0, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(stationarity_function(4.0, -0.1), std::invalid_argument);
}

TEST_CASE("n-dimensional ratio restricts to the 1-d profile at r = +-1") {
  CHECK(symmetry_ratio_nd(4.0, 0.5, 1.0) ==
        doctest::Approx(symmetry_ratio(4.0, 0.5)).epsilon(1e-15));
  CHECK(symmetry_ratio_nd(4.0, 0.5, -1.0) ==
        doctest::Approx(symmetry_ratio(4.0, -0.5)).epsilon(1e-15));
  CHECK(symmetry_ratio_nd(4.0, 0.0, -0.3) == 3.0);  // limit p - 1 at u = 0
  CHECK_THROWS_AS(symmetry_ratio_nd(4.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(symmetry_ratio_nd(2.0, 0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(symmetry_ratio_nd(4.0, -0.5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(symmetry_ratio_nd(4.0, 0.5, 1.5), std::invalid_argument);
}

TEST_CASE("reciprocal identity of the ratio profile") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u_dist(1e-3, 1.0 - 1e-3);
  for (double p : {2.5, 3.0, 4.0, 7.3, 20.0}) {
    for (int i = 0; i < 100; ++i) {
      const double u = u_dist(rng);
      CHECK(std::abs(symmetry_ratio(p, 1.0 / u) * symmetry_ratio(p, u) - 1.0) <=
            1e-10);
    }
  }
}

TEST_CASE("ratio profile denominator stays positive away from u = 1") {
  for (double p : {2.5, 3.0, 4.0, 7.3, 20.0}) {
    for (int i = 0; i <= 4000; ++i) {
      const double u = -10.0 + 20.0 * static_cast<double>(i) / 4000.0;
      if (u == 1.0) continue;
      const double den =
          (p - 1.0) * pow_abs(u, p) - p * sgn(u) * pow_abs(u, p - 1.0) + 1.0;
      CHECK(den > 0.0);
    }
  }
}

TEST_CASE("ratio profile is unimodal with an interior negative maximizer") {
  for (double p : {2.3, 4.0, 10.0, 100.0}) {
    const int n = 2001;
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) {
      const double u = -1.0 + 2.0 * static_cast<double>(i) / (n - 1);
      values[i] = symmetry_ratio(p, u);
    }
    int peak = 0;
    for (int i = 1; i < n; ++i)
      if (values[i] > values[peak]) peak = i;
    const double peak_u = -1.0 + 2.0 * static_cast<double>(peak) / (n - 1);
    CHECK(peak_u > -1.0);
    CHECK(peak_u < 0.0);
    // No strict interior local minimum: rises to the peak, falls after it.
    for (int i = 0; i < peak; ++i) CHECK(values[i + 1] >= values[i] - 1e-12 * values[peak]);
    for (int i = peak; i + 1 < n; ++i) CHECK(values[i + 1] <= values[i] + 1e-12 * values[peak]);
  }
}

TEST_CASE("ratio profile grows pointwise with the exponent on (-1,0)") {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u_dist(-1.0 + 1e-6, -1e-6);
  std::uniform_real_distribution<double> p_dist(2.0 + 1e-3, 30.0);
  for (int i = 0; i < 100; ++i) {
    double p = p_dist(rng);
    double q = p_dist(rng);
    if (p == q) continue;
    if (p > q) std::swap(p, q);
    const double u = u_dist(rng);
    CHECK(symmetry_ratio(q, u) > symmetry_ratio(p, u));
  }
}

TEST_CASE("conjugate exponent algebra") {
  CHECK(conjugate_exponent(4.0 / 3.0) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(conjugate_exponent(2.0) == 2.0);
  CHECK(conjugate_exponent(4.0) == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> p_dist(1.01, 50.0);
  for (int i = 0; i < 20; ++i) {
    const double p = p_dist(rng);
    CHECK(conjugate_exponent(conjugate_exponent(p)) ==
          doctest::Approx(p).epsilon(1e-13));
  }
  CHECK_THROWS_AS(conjugate_exponent(1.0), std::invalid_argument);
}

TEST_CASE("alpha_power reproduces the known coefficients") {
  CHECK(alpha_power(2.0).alpha == 1.0);
  CHECK(alpha_power(2.0).method == Method::PerfectSymmetry);
  CHECK(!alpha_power(2.0).u0.has_value());

  const auto c4 = alpha_power(4.0);
  CHECK(std::abs(c4.alpha - kAlpha4) <= 1e-12);
  CHECK(c4.method == Method::Bisection);

  CHECK(std::abs(alpha_power(3.0).alpha - kAlpha3) <= 1e-12);
  CHECK(std::abs(alpha_power(6.0).alpha - kAlpha6) <= 1e-12);
  CHECK(alpha_power(8.0).alpha == doctest::Approx(0.0982).epsilon(5e-4));

  const auto conj = alpha_power(4.0 / 3.0);
  CHECK(std::abs(conj.alpha - kAlpha4) <= 1e-12);
  CHECK(conj.method == Method::ConjugateReduction);
  CHECK(*conj.exponent == doctest::Approx(4.0).epsilon(1e-15));

  CHECK_THROWS_AS(alpha_power(1.0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_power(0.9), std::invalid_argument);
  CHECK_THROWS_AS(alpha_power(4.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_power(4.0, -1e-9), std::invalid_argument);
}

TEST_CASE("bisection certificates carry verifiable evidence") {
  for (double p : {2.7, 4.0, 10.0, 333.0}) {
    const auto cert = alpha_power(p);
    REQUIRE(cert.u0.has_value());
    CHECK(*cert.u0 > 0.0);
    CHECK(*cert.u0 < 1.0);
    CHECK(cert.iterations > 0);
    CHECK(cert.iterations <= kMaxBisectionIterations);
    REQUIRE(cert.bracket.has_value());
    const auto [lo, hi] = *cert.bracket;
    CHECK(stationarity_function(p, lo) > 0.0);
    CHECK(stationarity_function(p, hi) < 0.0);
    check_certificate_consistency(cert);
  }
}

TEST_CASE("conjugacy ties alpha across dual exponents") {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> p_dist(1.01, 1.99);
  for (int i = 0; i < 20; ++i) {
    const double p = p_dist(rng);
    CHECK(std::abs(alpha_power(p).alpha -
                   alpha_power(conjugate_exponent(p)).alpha) <= 1e-12);
  }
}

TEST_CASE("alpha_bounds sandwiches alpha_power strictly") {
  const auto [lo4, hi4] = alpha_bounds(4.0);
  CHECK(lo4 == 0.125);
  CHECK(hi4 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(lo4 < kAlpha4);
  CHECK(kAlpha4 < hi4);

  const auto [lo8, hi8] = alpha_bounds(8.0);
  CHECK(lo8 == 0.0625);
  CHECK(hi8 == doctest::Approx(1.0 / 7.0).epsilon(1e-15));
  CHECK(lo8 < alpha_power(8.0).alpha);

  const auto [lo1000, hi1000] = alpha_bounds(1000.0);
  CHECK(lo1000 == 0.0005);
  CHECK(hi1000 == doctest::Approx(1.0 / 999.0).epsilon(1e-15));

  for (double p : {2.01, 3.0, 7.7, 42.0, 500.0}) {
    const auto [lo, hi] = alpha_bounds(p);
    const double alpha = alpha_power(p).alpha;
    CHECK(lo < alpha);
    CHECK(alpha <= hi);
    CHECK(2.0 * p * alpha > 1.0);
  }
  CHECK_THROWS_AS(alpha_bounds(2.0), std::invalid_argument);
}

TEST_CASE("alpha of |.|^p decreases strictly past p = 2") {
  double prev = alpha_power(2.05).alpha;
  for (int i = 1; i <= 60; ++i) {
    const double p =
        std::exp(std::log(2.05) +
                 (std::log(1000.0) - std::log(2.05)) * static_cast<double>(i) / 60.0);
    const double alpha = alpha_power(p).alpha;
    CHECK(alpha < prev);
    prev = alpha;
  }
}

TEST_CASE("scaled 2p alpha ratio trends toward 1 from above") {
  const double r10 = 2.0 * 10.0 * alpha_power(10.0).alpha;
  const double r1000 = 2.0 * 1000.0 * alpha_power(1000.0).alpha;
  CHECK(r10 > 1.0);
  CHECK(r1000 > 1.0);
  CHECK(r1000 < r10);
  CHECK(r1000 - 1.0 < 0.05);
}

TEST_CASE("n-dimensional ratio is nonincreasing in the cosine") {
  for (double p : {3.0, 4.0, 8.0}) {
    for (int i = 1; i < 40; ++i) {
      const double u = static_cast<double>(i) / 40.0;
      double prev = symmetry_ratio_nd(p, u, -1.0);
      for (int j = 1; j <= 40; ++j) {
        const double r = -1.0 + 2.0 * static_cast<double>(j) / 40.0;
        const double cur = symmetry_ratio_nd(p, u, r);
        CHECK(cur <= prev + 1e-12 * std::abs(prev));
        prev = cur;
      }
    }
  }
}

TEST_CASE("alpha_piecewise_quadratic formula") {
  CHECK(alpha_piecewise_quadratic(3.0, 3.0) == 1.0);
  CHECK(alpha_piecewise_quadratic(4.0, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(alpha_piecewise_quadratic(1.0, 4.0) ==
        alpha_piecewise_quadratic(4.0, 1.0));
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> coeff(0.01, 100.0);
  for (int i = 0; i < 50; ++i) {
    const double a = coeff(rng);
    const double b = coeff(rng);
    const double forward = alpha_piecewise_quadratic(a, b);
    CHECK(forward == alpha_piecewise_quadratic(b, a));
    CHECK(forward > 0.0);
    CHECK(forward <= 1.0);
    if (a != b) CHECK(forward < 1.0);
  }
  CHECK_THROWS_AS(alpha_piecewise_quadratic(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(alpha_piecewise_quadratic(1.0, -2.0), std::invalid_argument);
}

TEST_CASE("alpha_sum_mixed: exact rule on distinct extremal exponents") {
  // omega_{beta,gamma} = (beta/4)||.||_2^4 + (gamma/2)||.||_2^2.
  for (auto [beta, gamma] : {std::pair{1.0, 1.0}, {10.0, 0.1}, {0.3, 7.0}}) {
    const NormPowerTerm terms[] = {
        {beta / 4.0, 4.0, NormFamily::Euclidean},
        {gamma / 2.0, 2.0, NormFamily::Euclidean},
    };
    const auto result = alpha_sum_mixed(terms, 3);
    const auto& cert = std::get<SymmetryCertificate>(result);
    CHECK(cert.method == Method::SumRule);
    CHECK(std::abs(cert.alpha - kAlpha4) <= 1e-12);
    check_certificate_consistency(cert);
  }

  // A single term reduces to the plain power coefficient (scaling invariance).
  const NormPowerTerm single[] = {{5.0, 3.0, NormFamily::Separable}};
  CHECK(std::abs(std::get<SymmetryCertificate>(alpha_sum_mixed(single, 1)).alpha -
                 kAlpha3) <= 1e-12);

  // Interior exponents do not matter; the minimum sits at an extreme.
  const NormPowerTerm three[] = {
      {1.0, 3.0, NormFamily::Euclidean},
      {1.0, 4.0, NormFamily::Euclidean},
      {1.0, 6.0, NormFamily::Euclidean},
  };
  CHECK(std::abs(std::get<SymmetryCertificate>(alpha_sum_mixed(three, 2)).alpha -
                 kAlpha6) <= 1e-12);
}

TEST_CASE("alpha_sum_mixed: tied extremal exponents fall back to the bound") {
  // ||.||_2^4 + ||.||_4^4 in dimension 2: genuinely different functions of
  // equal degree, so only the generic interval survives.
  const NormPowerTerm tied[] = {
      {1.0, 4.0, NormFamily::Euclidean},
      {1.0, 4.0, NormFamily::Separable},
  };
  const auto& interval = std::get<AlphaInterval>(alpha_sum_mixed(tied, 2));
  CHECK(std::abs(interval.lower - kAlpha4) <= 1e-12);
  CHECK(interval.upper == 1.0);

  // The same two terms coincide on the line and merge into one function.
  const auto merged = alpha_sum_mixed(tied, 1);
  CHECK(std::abs(std::get<SymmetryCertificate>(merged).alpha - kAlpha4) <= 1e-12);

  // p = 2 norms coincide in any dimension.
  const NormPowerTerm quadratics[] = {
      {1.0, 2.0, NormFamily::Euclidean},
      {3.0, 2.0, NormFamily::Separable},
  };
  const auto& cert = std::get<SymmetryCertificate>(alpha_sum_mixed(quadratics, 5));
  CHECK(cert.alpha == 1.0);
  CHECK(cert.method == Method::PerfectSymmetry);

  // Tied minimum with a unique maximum still blocks the exact rule.
  const NormPowerTerm tied_min[] = {
      {1.0, 3.0, NormFamily::Euclidean},
      {1.0, 3.0, NormFamily::Separable},
      {1.0, 6.0, NormFamily::Euclidean},
  };
  const auto& iv = std::get<AlphaInterval>(alpha_sum_mixed(tied_min, 2));
  CHECK(std::abs(iv.lower - kAlpha6) <= 1e-12);
  CHECK(iv.upper == 1.0);

  CHECK_THROWS_AS(alpha_sum_mixed({}, 2), std::invalid_argument);
  const NormPowerTerm bad_weight[] = {{0.0, 4.0, NormFamily::Euclidean}};
  CHECK_THROWS_AS(alpha_sum_mixed(bad_weight, 2), std::invalid_argument);
  const NormPowerTerm bad_exponent[] = {{1.0, 1.0, NormFamily::Euclidean}};
  CHECK_THROWS_AS(alpha_sum_mixed(bad_exponent, 2), std::invalid_argument);
}

TEST_CASE("alpha_of dispatches across the catalog") {
  CHECK(std::abs(std::get<SymmetryCertificate>(
                     alpha_of(ReferenceFunction::two_norm_power(4.0, 7)))
                     .alpha -
                 kAlpha4) <= 1e-12);
  CHECK(std::abs(std::get<SymmetryCertificate>(
                     alpha_of(ReferenceFunction::p_norm_power(4.0, 3)))
                     .alpha -
                 kAlpha4) <= 1e-12);

  Matrix L(1, 1);
  L << -2.0;
  Vector x0(1), b(1);
  x0 << 1.0;
  b << 0.0;
  const auto image = ReferenceFunction::affine_image(
      ReferenceFunction::power_abs(6.0), L, x0, b, 0.0, 5.0);
  CHECK(std::abs(std::get<SymmetryCertificate>(alpha_of(image)).alpha - kAlpha6) <=
        1e-12);

  const auto quad = alpha_of(ReferenceFunction::quadratic_form(
      Matrix::Identity(3, 3), Vector::Zero(3), 4.0));
  CHECK(std::get<SymmetryCertificate>(quad).alpha == 1.0);
  CHECK(std::get<SymmetryCertificate>(quad).method == Method::PerfectSymmetry);

  const auto pw_equal = alpha_of(ReferenceFunction::piecewise_quadratic(2.0, 2.0));
  CHECK(std::get<SymmetryCertificate>(pw_equal).alpha == 1.0);
  CHECK(std::get<SymmetryCertificate>(pw_equal).method ==
        Method::PerfectSymmetry);
  const auto pw = alpha_of(ReferenceFunction::piecewise_quadratic(4.0, 1.0));
  CHECK(std::get<SymmetryCertificate>(pw).alpha == doctest::Approx(0.5));
  CHECK(std::get<SymmetryCertificate>(pw).method == Method::PiecewiseFormula);
}

TEST_CASE("alpha_of on sums: exact rules, collapses and intervals") {
  // All-norm-power sum routes through the mixed-norm rule.
  const auto omega = ReferenceFunction::scaled_sum(
      {{0.25, ReferenceFunction::two_norm_power(4.0, 2)},
       {0.5, ReferenceFunction::two_norm_power(2.0, 2)}});
  CHECK(std::abs(std::get<SymmetryCertificate>(alpha_of(omega)).alpha - kAlpha4) <=
        1e-12);

  // Mixed families with distinct outer degrees where the overall minimum is
  // extremal: the bound interval collapses to an exact sum-rule value.
  const auto collapse = ReferenceFunction::scaled_sum(
      {{1.0, ReferenceFunction::piecewise_quadratic(1.0, 4.0)},
       {1.0, ReferenceFunction::power_abs(4.0)}});
  const auto& collapsed = std::get<SymmetryCertificate>(alpha_of(collapse));
  CHECK(collapsed.method == Method::SumRule);
  CHECK(std::abs(collapsed.alpha - kAlpha4) <= 1e-12);

  // The tied-degree counterexample sum keeps a genuine interval: the interior
  // piecewise term drags the lower bound below the extremal-exponent upper
  // bound.
  const auto counterexample = ReferenceFunction::scaled_sum(
      {{1.0, ReferenceFunction::power_abs(4.0 / 3.0, 0.75)},
       {1.0, ReferenceFunction::piecewise_quadratic(1.0, 1e-7)},
       {1.0, ReferenceFunction::power_abs(4.0, 0.25)}});
  const auto& iv = std::get<AlphaInterval>(alpha_of(counterexample));
  CHECK(iv.lower == doctest::Approx(alpha_piecewise_quadratic(1.0, 1e-7))
                        .epsilon(1e-12));
  CHECK(iv.upper == doctest::Approx(kAlpha4).epsilon(1e-12));
  CHECK(iv.lower < iv.upper);

  // Single-term sums inherit the inner certificate.
  const auto single = ReferenceFunction::scaled_sum(
      {{2.5, ReferenceFunction::power_abs(4.0)}});
  CHECK(std::abs(std::get<SymmetryCertificate>(alpha_of(single)).alpha - kAlpha4) <=
        1e-12);
}
