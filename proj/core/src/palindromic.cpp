#include "symcoef/palindromic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace symcoef {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void check_even_exponent(int p) {
  require(p >= 4 && p % 2 == 0, "exponent must be an even integer >= 4");
}

}  // namespace

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> c)
    : coeffs(std::move(c)) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

IntegerPolynomial IntegerPolynomial::from_ints(std::initializer_list<long> c) {
  std::vector<BigInt> v;
  v.reserve(c.size());
  for (long x : c) v.emplace_back(x);
  return IntegerPolynomial(std::move(v));
}

int IntegerPolynomial::degree() const noexcept {
  return static_cast<int>(coeffs.size()) - 1;
}

const BigInt& IntegerPolynomial::coeff(int k) const noexcept {
  static const BigInt zero = 0;
  if (k < 0 || k >= static_cast<int>(coeffs.size())) return zero;
  return coeffs[static_cast<size_t>(k)];
}

bool IntegerPolynomial::is_palindromic() const noexcept {
  const int d = degree();
  for (int k = 0; k <= d / 2; ++k) {
    if (coeffs[static_cast<size_t>(k)] != coeffs[static_cast<size_t>(d - k)])
      return false;
  }
  return true;
}

double IntegerPolynomial::eval(double u) const noexcept {
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * u + it->get_d();
  return acc;
}

IntegerPolynomial operator+(const IntegerPolynomial& a,
                            const IntegerPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs.size(), b.coeffs.size()), BigInt(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) out[i] += a.coeffs[i];
  for (size_t i = 0; i < b.coeffs.size(); ++i) out[i] += b.coeffs[i];
  return IntegerPolynomial(std::move(out));
}

IntegerPolynomial operator*(const IntegerPolynomial& a,
                            const IntegerPolynomial& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return IntegerPolynomial{};
  std::vector<BigInt> out(a.coeffs.size() + b.coeffs.size() - 1, BigInt(0));
  for (size_t i = 0; i < a.coeffs.size(); ++i) {
    for (size_t j = 0; j < b.coeffs.size(); ++j) {
      out[i + j] += a.coeffs[i] * b.coeffs[j];
    }
  }
  return IntegerPolynomial(std::move(out));
}

long long triangular(long long k) {
  if (k <= 0) return 0;
  return k * (k + 1) / 2;
}

long long tetrahedral(long long n) {
  if (n <= 0) return 0;
  return n * (n + 1) * (n + 2) / 6;
}

IntegerPolynomial stationarity_polynomial(int p) {
  require(p >= 3, "stationarity_polynomial requires an integer exponent >= 3");
  const int deg = 2 * (p - 1);
  std::vector<BigInt> c(static_cast<size_t>(deg) + 1, BigInt(0));
  const BigInt pm1sq = BigInt(p - 1) * BigInt(p - 1);
  c[0] = 1;
  c[static_cast<size_t>(deg)] = 1;
  c[static_cast<size_t>(p - 2)] = -pm1sq;
  c[static_cast<size_t>(p)] = -pm1sq;
  c[static_cast<size_t>(p - 1)] = BigInt(-2) * p * (p - 2);
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial triangular_cofactor(int p) {
  check_even_exponent(p);
  std::vector<BigInt> c;
  c.reserve(static_cast<size_t>(p - 3));
  for (int k = 0; k <= p - 4; ++k) {
    const long t = static_cast<long>(triangular(std::min(k, p - 4 - k) + 1));
    c.emplace_back((k % 2 == 0) ? t : -t);
  }
  return IntegerPolynomial(std::move(c));
}

IntegerPolynomial alternating_cofactor(int p) {
  check_even_exponent(p);
  std::vector<BigInt> c;
  c.reserve(static_cast<size_t>(p - 1));
  for (int i = 0; i <= p - 2; ++i) c.emplace_back((i % 2 == 0) ? 1 : -1);
  const int mid = p / 2 - 1;
  const long spike = (mid % 2 == 0) ? (p - 1) : -(p - 1);
  c[static_cast<size_t>(mid)] += spike;
  return IntegerPolynomial(std::move(c));
}

bool factor_check(int p) {
  check_even_exponent(p);
  const IntegerPolynomial quartic = IntegerPolynomial::from_ints({1, 4, 6, 4, 1});
  return quartic * triangular_cofactor(p) * alternating_cofactor(p) ==
         stationarity_polynomial(p);
}

IntegerPolynomial half_substitution(const IntegerPolynomial& poly) {
  require(!poly.coeffs.empty(), "half_substitution requires a nonzero polynomial");
  require(poly.is_palindromic(), "half_substitution requires a palindromic polynomial");
  const int d = poly.degree();
  require(d % 2 == 0, "half_substitution requires even degree");
  const int m = d / 2;

  // u^j + u^-j = P_j(u + 1/u) with P_0 = 2, P_1 = v, P_j = v P_{j-1} - P_{j-2},
  // so poly(u) / u^m = a_m + sum_{j=1}^m a_{m+j} P_j(v).
  const IntegerPolynomial v = IntegerPolynomial::from_ints({0, 1});
  IntegerPolynomial prev = IntegerPolynomial::from_ints({2});
  IntegerPolynomial cur = v;

  IntegerPolynomial result(std::vector<BigInt>{poly.coeff(m)});
  for (int j = 1; j <= m; ++j) {
    std::vector<BigInt> scaled;
    scaled.reserve(cur.coeffs.size());
    for (const BigInt& b : cur.coeffs) scaled.push_back(poly.coeff(m + j) * b);
    result = result + IntegerPolynomial(std::move(scaled));
    if (j < m) {
      IntegerPolynomial next = v * cur;
      std::vector<BigInt> diff = next.coeffs;
      if (diff.size() < prev.coeffs.size()) diff.resize(prev.coeffs.size(), BigInt(0));
      for (size_t i = 0; i < prev.coeffs.size(); ++i) diff[i] -= prev.coeffs[i];
      prev = std::move(cur);
      cur = IntegerPolynomial(std::move(diff));
    }
  }
  return result;
}

namespace detail {

namespace {

double poly_eval(std::span<const double> c, double x) {
  double acc = 0.0;
  for (size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

double poly_deriv_eval(std::span<const double> c, double x) {
  double acc = 0.0;
  for (size_t i = c.size(); i-- > 1;) acc = acc * x + c[i] * static_cast<double>(i);
  return acc;
}

void newton_polish(std::span<const double> c, double& x) {
  for (int i = 0; i < 3; ++i) {
    const double f = poly_eval(c, x);
    const double df = poly_deriv_eval(c, x);
    if (df == 0.0) return;
    const double step = f / df;
    if (!std::isfinite(step)) return;
    x -= step;
  }
}

// Real roots of x^2 + bx + c.
void quadratic_roots(double b, double c, std::vector<double>& out) {
  const double disc = b * b - 4.0 * c;
  if (disc < 0.0) return;
  const double s = std::sqrt(disc);
  const double q = -0.5 * (b + (b >= 0.0 ? s : -s));
  out.push_back(q);
  if (q != 0.0) out.push_back(c / q);
  else out.push_back(-b);
}

// Real roots of x^3 + ax^2 + bx + c.
void cubic_roots(double a, double b, double c, std::vector<double>& out) {
  // Depress with x = y - a/3.
  const double shift = a / 3.0;
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  if (p == 0.0 && q == 0.0) {
    out.push_back(-shift);
    return;
  }
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  if (disc <= 0.0) {
    // Three real roots (trigonometric form; p < 0 here).
    const double m = 2.0 * std::sqrt(-p / 3.0);
    double arg = 3.0 * q / (p * m);
    arg = std::clamp(arg, -1.0, 1.0);
    const double theta = std::acos(arg) / 3.0;
    constexpr double kTwoPiOverThree = 2.0943951023931953;
    for (int k = 0; k < 3; ++k)
      out.push_back(m * std::cos(theta - kTwoPiOverThree * k) - shift);
  } else {
    const double s = std::sqrt(disc);
    const double u = (q >= 0.0) ? std::cbrt(-q / 2.0 - s) : std::cbrt(-q / 2.0 + s);
    const double y = (u == 0.0) ? 0.0 : u - p / (3.0 * u);
    out.push_back(y - shift);
  }
}

// Real roots of x^4 + ax^3 + bx^2 + cx + d.
void quartic_roots(double a, double b, double c, double d,
                   std::vector<double>& out) {
  // Depress with x = y - a/4.
  const double shift = a / 4.0;
  const double a2 = a * a;
  const double P = b - 3.0 * a2 / 8.0;
  const double Q = c - a * b / 2.0 + a2 * a / 8.0;
  const double R = d - a * c / 4.0 + a2 * b / 16.0 - 3.0 * a2 * a2 / 256.0;

  const double scale = std::max({1.0, std::abs(P), std::abs(Q), std::abs(R)});
  std::vector<double> ys;
  if (std::abs(Q) <= 1e-14 * scale) {
    // Biquadratic: z^2 + Pz + R with y = +-sqrt(z).
    std::vector<double> zs;
    quadratic_roots(P, R, zs);
    for (double z : zs) {
      if (z < 0.0) continue;
      const double ry = std::sqrt(z);
      ys.push_back(ry);
      ys.push_back(-ry);
    }
  } else {
    // Ferrari: w^3 + 2P w^2 + (P^2 - 4R) w - Q^2 has a positive real root w*;
    // with s = sqrt(w*) the quartic splits into two quadratics.
    std::vector<double> ws;
    cubic_roots(2.0 * P, P * P - 4.0 * R, -Q * Q, ws);
    double w = 0.0;
    for (double cand : ws) w = std::max(w, cand);
    if (w <= 0.0) return;  // defensive; cannot happen for Q != 0
    const double s = std::sqrt(w);
    const double t1 = 0.5 * (P + w - Q / s);
    const double t2 = 0.5 * (P + w + Q / s);
    quadratic_roots(s, t1, ys);
    quadratic_roots(-s, t2, ys);
  }
  for (double y : ys) out.push_back(y - shift);
}

}  // namespace

std::vector<double> real_roots(std::span<const double> coeffs) {
  std::vector<double> c(coeffs.begin(), coeffs.end());
  while (!c.empty() && c.back() == 0.0) c.pop_back();
  require(!c.empty(), "real_roots requires a nonzero polynomial");
  const int deg = static_cast<int>(c.size()) - 1;
  require(deg <= 4, "real_roots supports degree <= 4");

  std::vector<double> roots;
  const double lead = c.back();
  switch (deg) {
    case 0:
      break;
    case 1:
      roots.push_back(-c[0] / lead);
      break;
    case 2:
      quadratic_roots(c[1] / lead, c[0] / lead, roots);
      break;
    case 3:
      cubic_roots(c[2] / lead, c[1] / lead, c[0] / lead, roots);
      break;
    default:
      quartic_roots(c[3] / lead, c[2] / lead, c[1] / lead, c[0] / lead, roots);
      break;
  }
  for (double& r : roots) newton_polish(c, r);
  std::sort(roots.begin(), roots.end());
  std::vector<double> unique;
  for (double r : roots) {
    if (unique.empty() ||
        std::abs(r - unique.back()) > 1e-9 * std::max(1.0, std::abs(r))) {
      unique.push_back(r);
    }
  }
  return unique;
}

}  // namespace detail

namespace {

constexpr double kRootResidualTol = 1e-10;

// The unique root of the stationarity function in (0, 1), recovered by
// radicals from the reduced cofactors.
double closed_form_root(int p) {
  std::vector<IntegerPolynomial> cofactors;
  if (p == 3) {
    cofactors.push_back(stationarity_polynomial(3));
  } else {
    cofactors.push_back(triangular_cofactor(p));
    cofactors.push_back(alternating_cofactor(p));
  }

  std::vector<double> hits;
  for (const IntegerPolynomial& poly : cofactors) {
    if (poly.degree() < 2) continue;
    const IntegerPolynomial reduced = half_substitution(poly);
    std::vector<double> dc;
    dc.reserve(reduced.coeffs.size());
    for (const BigInt& b : reduced.coeffs) dc.push_back(b.get_d());
    for (double v : detail::real_roots(dc)) {
      // v = u + 1/u maps (0, 1] onto [2, inf); only that branch matters.
      if (v < 2.0) continue;
      if (std::abs(reduced.eval(v)) > kRootResidualTol) continue;
      const double u = 0.5 * (v - std::sqrt(v * v - 4.0));
      if (u <= 0.0 || u > 1.0) continue;
      if (std::abs(stationarity_function(p, u)) > kRootResidualTol) continue;
      hits.push_back(u);
    }
  }
  if (hits.size() != 1) {
    throw std::logic_error("cofactor root extraction found " +
                           std::to_string(hits.size()) +
                           " candidate roots for p = " + std::to_string(p));
  }
  return hits.front();
}

void cross_check(double got, double expected, int p) {
  if (std::abs(got - expected) > 1e-12 * std::abs(expected)) {
    throw std::logic_error("closed-form value for p = " + std::to_string(p) +
                           " disagrees with its radical expression");
  }
}

}  // namespace

double closed_form_alpha(int p) {
  switch (p) {
    case 2:
      return 1.0;
    case 3: {
      const double alpha = 1.0 / symmetry_ratio(3.0, -closed_form_root(3));
      const double radical =
          (1.0 - std::sqrt(2.0) * std::pow(3.0, 0.25) + std::sqrt(3.0)) / 2.0;
      cross_check(alpha, radical, 3);
      return alpha;
    }
    case 4: {
      const double alpha = 1.0 / symmetry_ratio(4.0, -closed_form_root(4));
      cross_check(alpha, 2.0 - std::sqrt(3.0), 4);
      return alpha;
    }
    case 6: {
      const double alpha = 1.0 / symmetry_ratio(6.0, -closed_form_root(6));
      cross_check(alpha, (7.0 - 3.0 * std::sqrt(5.0)) / 2.0, 6);
      return alpha;
    }
    case 8:
    case 10:
      return 1.0 / symmetry_ratio(static_cast<double>(p), -closed_form_root(p));
    default:
      throw std::invalid_argument(
          "closed_form_alpha supports p in {2, 3, 4, 6, 8, 10}");
  }
}

SymmetryCertificate closed_form_certificate(int p) {
  SymmetryCertificate cert;
  if (p == 2) {
    cert.alpha = 1.0;
    cert.method = Method::PerfectSymmetry;
    cert.exponent = 2.0;
    return cert;
  }
  cert.alpha = closed_form_alpha(p);
  const double u0 = closed_form_root(p);
  cert.u0 = u0;
  cert.method = Method::ClosedForm;
  cert.exponent = static_cast<double>(p);
  cert.residual = std::abs(stationarity_function(static_cast<double>(p), u0));
  return cert;
}

}  // namespace symcoef
