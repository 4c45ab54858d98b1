#pragma once

#include <optional>
#include <span>
#include <utility>
#include <variant>

#include "symcoef/legendre.hpp"

namespace symcoef {

inline constexpr double kDefaultTol = 1e-15;
inline constexpr int kMaxBisectionIterations = 200;

/// How a symmetry coefficient was obtained.
enum class Method {
  ClosedForm,
  Bisection,
  SumRule,
  ConjugateReduction,
  PiecewiseFormula,
  PerfectSymmetry,
};

const char* method_name(Method m) noexcept;

/// A computed symmetry coefficient together with its evidence.
///
/// When `u0` is present it is the root of the stationarity function in (0,1)
/// (the magnitude of the interior maximizer of the ratio profile) for the
/// exponent recorded in `exponent`, and alpha == 1/symmetry_ratio(exponent, -u0)
/// up to 1e-12 relative. For bisection-backed certificates `bracket` is the
/// final sign-changing bracket and `residual` the stationarity value at u0.
struct SymmetryCertificate {
  double alpha = 0.0;
  std::optional<double> u0;
  Method method = Method::PerfectSymmetry;
  int iterations = 0;
  double residual = 0.0;
  std::optional<double> exponent;
  std::optional<std::pair<double, double>> bracket;
};

/// Two-sided bound on a symmetry coefficient when no exact rule applies.
struct AlphaInterval {
  double lower = 0.0;
  double upper = 1.0;
};

using AlphaResult = std::variant<SymmetryCertificate, AlphaInterval>;

/// The scale-free Bregman asymmetry ratio of coeff*|.|^p on the line:
/// D(u t, t) / D(t, u t) for any t > 0, as a function of u. Defined for all
/// real u (value 1 at u = 1 by continuity); strictly positive. Requires p > 1.
double symmetry_ratio(double p, double u);

/// u^{2(p-1)} - (p-1)^2 u^p - 2p(p-2) u^{p-1} - (p-1)^2 u^{p-2} + 1 on [0,1].
/// Its unique root in [0,1] is the magnitude of the ratio profile's interior
/// maximizer. Requires p > 2 and u in [0,1].
double stationarity_function(double p, double u);

/// Bregman asymmetry ratio of ||.||_2^p in terms of the norm quotient
/// u = |x|/|y| >= 0 and the cosine r = <x,y>/(|x||y|) in [-1,1]:
/// (u^p - p r u + (p-1)) / ((p-1) u^p - p r u^{p-1} + 1).
/// Requires p > 2 and (u, r) != (1, 1).
double symmetry_ratio_nd(double p, double u, double r);

/// Hoelder conjugate q = p/(p-1); an involution. Requires p > 1.
double conjugate_exponent(double p);

/// Symmetry coefficient of |.|^p (equivalently ||.||_2^p or ||.||_p^p in any
/// dimension) for p > 1. p = 2 is perfectly symmetric; p < 2 reduces to the
/// conjugate exponent; p > 2 bisects the stationarity function on [0,1] until
/// the bracket is narrower than tol.
SymmetryCertificate alpha_power(double p, double tol = kDefaultTol);

/// (1/(2p), 1/(p-1)): a strict sandwich of alpha_power(p) for p > 2.
std::pair<double, double> alpha_bounds(double p);

/// The norm family of one summand: Euclidean is ||.||_2^p, Separable is
/// ||.||_p^p. For p = 2 or in dimension 1 the two coincide.
enum class NormFamily { Euclidean, Separable };

struct NormPowerTerm {
  double weight;
  double exponent;
  NormFamily family = NormFamily::Euclidean;
};

/// Symmetry coefficient of sum_i w_i ||.||_{r_i}^{p_i} on R^dim. Exact
/// (min of the extremal exponents' coefficients) whenever the smallest and
/// largest exponent are each carried by a single distinct summand after
/// merging identical ones; otherwise the rule is not applicable and the
/// sound bound interval is returned instead.
AlphaResult alpha_sum_mixed(std::span<const NormPowerTerm> terms, int dim,
                            double tol = kDefaultTol);

/// Symmetry coefficient of the piecewise quadratic (a on x>=0, b on x<0):
/// min{(1+sqrt(a/b))/(1+sqrt(b/a)), (1+sqrt(b/a))/(1+sqrt(a/b))}.
double alpha_piecewise_quadratic(double a, double b);

/// Symmetry coefficient of any catalog function: a certificate when an exact
/// rule covers it, otherwise the bound interval.
AlphaResult alpha_of(const ReferenceFunction& f, double tol = kDefaultTol);

}  // namespace symcoef
