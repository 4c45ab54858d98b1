#pragma once

#include <Eigen/Dense>

#include <memory>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace symcoef {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// A member of the supported catalog of Legendre reference functions.
/// Values are immutable and cheap to copy; all operations on them are pure,
/// so they can be shared freely across threads.
class ReferenceFunction {
 public:
  struct Node;

  // Factories validate their parameters and throw std::invalid_argument on
  // violations (exponents <= 1, non-positive coefficients, dimension
  // mismatches, Q not symmetric positive definite, singular L, ...).

  /// h(x) = coeff * |x|^p on the real line, p > 1.
  static ReferenceFunction power_abs(double exponent, double coeff = 1.0);

  /// h(x) = coeff * ||x||_2^p on R^dim, p > 1.
  static ReferenceFunction two_norm_power(double exponent, int dim,
                                          double coeff = 1.0);

  /// h(x) = coeff * sum_i |x_i|^p on R^dim (the separable p-norm power).
  static ReferenceFunction p_norm_power(double exponent, int dim,
                                        double coeff = 1.0);

  /// h(x) = 0.5 <x, Qx> + <b, x> + c, Q symmetric positive definite.
  static ReferenceFunction quadratic_form(Matrix Q, Vector b, double c = 0.0);

  /// h(x) = a x^2 for x >= 0 and b x^2 for x < 0, with a, b > 0.
  static ReferenceFunction piecewise_quadratic(double a, double b);

  /// Weighted sum sum_i w_i h_i, all terms on one ambient space. Nested sums
  /// are flattened and weights are folded into the coefficient of terms that
  /// carry one, so the stored term list is canonical.
  static ReferenceFunction scaled_sum(
      std::vector<std::pair<double, ReferenceFunction>> terms);

  /// h(x) = scale * inner(L x - x0) + <b, x> + c with L nonsingular.
  static ReferenceFunction affine_image(ReferenceFunction inner, Matrix L,
                                        Vector x0, Vector b, double c,
                                        double scale);

  /// Ambient dimension n of the domain R^n.
  int dim() const noexcept;

  const Node& node() const noexcept { return *node_; }

 private:
  explicit ReferenceFunction(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct PowerAbs {
  double exponent;
  double coeff;
};

struct TwoNormPower {
  double exponent;
  int dim;
  double coeff;
};

struct PNormPower {
  double exponent;
  int dim;
  double coeff;
};

struct QuadraticForm {
  Matrix Q;
  Vector b;
  double c;
};

struct PiecewiseQuadratic1D {
  double a;
  double b;
};

struct ScaledSum {
  std::vector<std::pair<double, ReferenceFunction>> terms;
};

struct AffineImage {
  ReferenceFunction inner;
  Matrix L;
  Vector x0;
  Vector b;
  double c;
  double scale;
};

struct ReferenceFunction::Node {
  using Variant = std::variant<PowerAbs, TwoNormPower, PNormPower,
                               QuadraticForm, PiecewiseQuadratic1D, ScaledSum,
                               AffineImage>;
  Variant value;
  int dim;
};

/// h(x). Finite for every finite x; throws on dimension mismatch.
double evaluate(const ReferenceFunction& f, const Vector& x);

/// Gradient of h at x. For norm powers the value at the origin is the limit
/// value 0 (well defined for every p > 1).
Vector gradient(const ReferenceFunction& f, const Vector& x);

/// Bregman distance D_h(x, y) = h(x) - h(y) - <grad h(y), x - y>.
double bregman(const ReferenceFunction& f, const Vector& x, const Vector& y);

/// Degree of positive homogeneity, when the function has one (norm powers,
/// piecewise quadratics, pure quadratic forms, same-degree sums, unshifted
/// affine images). Empty otherwise.
std::optional<double> homogeneity_degree(const ReferenceFunction& f);

// One-dimensional conveniences.
double evaluate(const ReferenceFunction& f, double x);
double gradient1d(const ReferenceFunction& f, double x);
double bregman(const ReferenceFunction& f, double x, double y);

/// |t|^p, computed as exp(p log |t|) away from zero and exactly 0 at t = 0.
double pow_abs(double t, double p);

/// sign of t in {-1, 0, 1}.
inline double sgn(double t) noexcept {
  return static_cast<double>(t > 0.0) - static_cast<double>(t < 0.0);
}

}  // namespace symcoef
