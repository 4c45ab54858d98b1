#pragma once

#include <gmpxx.h>

#include <span>
#include <vector>

#include "symcoef/symmetry.hpp"

namespace symcoef {

using BigInt = mpz_class;

/// Exact integer-coefficient polynomial, constant term first. Kept
/// normalized: the highest-index coefficient is nonzero unless the
/// polynomial is zero (empty coefficient list).
struct IntegerPolynomial {
  std::vector<BigInt> coeffs;

  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::vector<BigInt> c);
  static IntegerPolynomial from_ints(std::initializer_list<long> c);

  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept;

  /// Coefficient of u^k (zero outside the stored range).
  const BigInt& coeff(int k) const noexcept;

  /// coeffs[k] == coeffs[deg-k] for all k.
  bool is_palindromic() const noexcept;

  /// Horner evaluation in double precision.
  double eval(double u) const noexcept;

  friend IntegerPolynomial operator+(const IntegerPolynomial& a,
                                     const IntegerPolynomial& b);
  friend IntegerPolynomial operator*(const IntegerPolynomial& a,
                                     const IntegerPolynomial& b);
  friend bool operator==(const IntegerPolynomial& a,
                         const IntegerPolynomial& b) = default;
};

/// k-th triangular number k(k+1)/2, zero-extended to k <= 0.
long long triangular(long long k);

/// n-th tetrahedral number (sum of the first n triangular numbers),
/// zero-extended to n <= 0.
long long tetrahedral(long long n);

/// The stationarity function of an even integer exponent p >= 4, extended as
/// a polynomial over the reals: +1 at degrees 0 and 2(p-1), -(p-1)^2 at
/// degrees p-2 and p, -2p(p-2) at degree p-1. Palindromic.
IntegerPolynomial stationarity_polynomial(int p);

/// The degree p-4 palindromic cofactor with triangular-number coefficients:
/// sum_{k=0}^{p-4} T_{min(k, p-4-k)+1} (-1)^k u^k. Requires even p >= 4.
IntegerPolynomial triangular_cofactor(int p);

/// The degree p-2 palindromic cofactor: the alternating series
/// sum_{i=0}^{p-2} (-1)^i u^i with (-1)^{p/2-1}(p-1) u^{p/2-1} added on.
/// Requires even p >= 4.
IntegerPolynomial alternating_cofactor(int p);

/// Expands (u+1)^4 * triangular_cofactor(p) * alternating_cofactor(p) in
/// exact integer arithmetic and compares it coefficient-by-coefficient with
/// stationarity_polynomial(p). Requires even p >= 4.
bool factor_check(int p);

/// For a palindromic polynomial of even degree d, returns the degree d/2
/// integer polynomial q with poly(u) = u^{d/2} q(u + 1/u) for all u != 0.
IntegerPolynomial half_substitution(const IntegerPolynomial& poly);

/// Exact-radical symmetry coefficient for p in {2, 3, 4, 6, 8, 10}: the
/// supported exponent set where the cofactor reduction stays within solvable
/// degree. The root is extracted from the reduced cofactors by radicals,
/// verified in place, and cross-checked against the known radical value
/// where one is simple enough to transcribe.
double closed_form_alpha(int p);

/// closed_form_alpha packaged as a certificate (method ClosedForm, or
/// PerfectSymmetry for p = 2).
SymmetryCertificate closed_form_certificate(int p);

namespace detail {
/// Real roots of a polynomial of degree <= 4 (coefficients constant-first),
/// by the classical radical formulas, Newton-polished. Roots are
/// deduplicated; an empty result means no real roots.
std::vector<double> real_roots(std::span<const double> coeffs);
}  // namespace detail

}  // namespace symcoef
