#include "symcoef/legendre.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace symcoef {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

void require_dim(const ReferenceFunction& f, const Vector& x) {
  if (x.size() != f.dim()) {
    throw std::invalid_argument("dimension mismatch: function expects " +
                                std::to_string(f.dim()) + ", got " +
                                std::to_string(x.size()));
  }
}

std::shared_ptr<const ReferenceFunction::Node> make_node(
    ReferenceFunction::Node::Variant v, int dim) {
  return std::make_shared<const ReferenceFunction::Node>(
      ReferenceFunction::Node{std::move(v), dim});
}

void check_exponent(double p) {
  require(std::isfinite(p) && p > 1.0, "exponent must satisfy p > 1");
}

void check_coeff(double c) {
  require(std::isfinite(c) && c > 0.0, "coefficient must be positive");
}

}  // namespace

double pow_abs(double t, double p) {
  const double a = std::abs(t);
  if (a == 0.0) return 0.0;
  return std::exp(p * std::log(a));
}

int ReferenceFunction::dim() const noexcept { return node_->dim; }

ReferenceFunction ReferenceFunction::power_abs(double exponent, double coeff) {
  check_exponent(exponent);
  check_coeff(coeff);
  return ReferenceFunction(make_node(PowerAbs{exponent, coeff}, 1));
}

ReferenceFunction ReferenceFunction::two_norm_power(double exponent, int dim,
                                                    double coeff) {
  check_exponent(exponent);
  check_coeff(coeff);
  require(dim >= 1, "dimension must be a positive integer");
  return ReferenceFunction(make_node(TwoNormPower{exponent, dim, coeff}, dim));
}

ReferenceFunction ReferenceFunction::p_norm_power(double exponent, int dim,
                                                  double coeff) {
  check_exponent(exponent);
  check_coeff(coeff);
  require(dim >= 1, "dimension must be a positive integer");
  return ReferenceFunction(make_node(PNormPower{exponent, dim, coeff}, dim));
}

ReferenceFunction ReferenceFunction::quadratic_form(Matrix Q, Vector b,
                                                    double c) {
  require(Q.rows() >= 1 && Q.rows() == Q.cols(), "Q must be square");
  require(b.size() == Q.rows(), "b must match the dimension of Q");
  require(std::isfinite(c), "c must be finite");
  const double scale = Q.cwiseAbs().maxCoeff();
  require(std::isfinite(scale), "Q must be finite");
  require((Q - Q.transpose()).cwiseAbs().maxCoeff() <= 1e-12 * scale,
          "Q must be symmetric");
  Eigen::LLT<Matrix> llt(Q);
  require(llt.info() == Eigen::Success, "Q must be positive definite");
  const int n = static_cast<int>(Q.rows());
  return ReferenceFunction(
      make_node(QuadraticForm{std::move(Q), std::move(b), c}, n));
}

ReferenceFunction ReferenceFunction::piecewise_quadratic(double a, double b) {
  require(std::isfinite(a) && a > 0.0, "piecewise coefficient a must be positive");
  require(std::isfinite(b) && b > 0.0, "piecewise coefficient b must be positive");
  return ReferenceFunction(make_node(PiecewiseQuadratic1D{a, b}, 1));
}

ReferenceFunction ReferenceFunction::scaled_sum(
    std::vector<std::pair<double, ReferenceFunction>> terms) {
  require(!terms.empty(), "scaled sum needs at least one term");
  const int dim = terms.front().second.dim();

  std::vector<std::pair<double, ReferenceFunction>> flat;
  flat.reserve(terms.size());
  for (auto& [weight, f] : terms) {
    require(std::isfinite(weight) && weight > 0.0,
            "sum weights must be positive");
    require(f.dim() == dim, "all sum terms must share one ambient dimension");
    if (const auto* inner = std::get_if<ScaledSum>(&f.node().value)) {
      // Already-constructed sums are flat, so one level of splicing suffices.
      for (const auto& [w, g] : inner->terms) flat.emplace_back(weight * w, g);
    } else {
      flat.emplace_back(weight, f);
    }
  }
  for (auto& [weight, f] : flat) {
    // Fold the weight into the coefficient where the variant carries one.
    if (const auto* pa = std::get_if<PowerAbs>(&f.node().value)) {
      f = power_abs(pa->exponent, weight * pa->coeff);
      weight = 1.0;
    } else if (const auto* tn = std::get_if<TwoNormPower>(&f.node().value)) {
      f = two_norm_power(tn->exponent, tn->dim, weight * tn->coeff);
      weight = 1.0;
    } else if (const auto* pn = std::get_if<PNormPower>(&f.node().value)) {
      f = p_norm_power(pn->exponent, pn->dim, weight * pn->coeff);
      weight = 1.0;
    }
  }
  return ReferenceFunction(make_node(ScaledSum{std::move(flat)}, dim));
}

ReferenceFunction ReferenceFunction::affine_image(ReferenceFunction inner,
                                                  Matrix L, Vector x0,
                                                  Vector b, double c,
                                                  double scale) {
  const int n = inner.dim();
  require(L.rows() == n && L.cols() == n, "L must be square of the inner dimension");
  require(x0.size() == n, "x0 must match the inner dimension");
  require(b.size() == n, "b must match the inner dimension");
  require(std::isfinite(c), "c must be finite");
  require(std::isfinite(scale) && scale > 0.0, "scale must be positive");
  Eigen::FullPivLU<Matrix> lu(L);
  require(lu.isInvertible(), "L must be nonsingular");
  return ReferenceFunction(make_node(
      AffineImage{std::move(inner), std::move(L), std::move(x0), std::move(b),
                  c, scale},
      n));
}

double evaluate(const ReferenceFunction& f, const Vector& x) {
  require_dim(f, x);
  return std::visit(
      [&](const auto& v) -> double {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowerAbs>) {
          return v.coeff * pow_abs(x[0], v.exponent);
        } else if constexpr (std::is_same_v<T, TwoNormPower>) {
          return v.coeff * pow_abs(x.norm(), v.exponent);
        } else if constexpr (std::is_same_v<T, PNormPower>) {
          double s = 0.0;
          for (Eigen::Index i = 0; i < x.size(); ++i)
            s += pow_abs(x[i], v.exponent);
          return v.coeff * s;
        } else if constexpr (std::is_same_v<T, QuadraticForm>) {
          return 0.5 * x.dot(v.Q * x) + v.b.dot(x) + v.c;
        } else if constexpr (std::is_same_v<T, PiecewiseQuadratic1D>) {
          const double t = x[0];
          return (t >= 0.0 ? v.a : v.b) * t * t;
        } else if constexpr (std::is_same_v<T, ScaledSum>) {
          double s = 0.0;
          for (const auto& [w, g] : v.terms) s += w * evaluate(g, x);
          return s;
        } else {
          static_assert(std::is_same_v<T, AffineImage>);
          return v.scale * evaluate(v.inner, Vector(v.L * x - v.x0)) +
                 v.b.dot(x) + v.c;
        }
      },
      f.node().value);
}

Vector gradient(const ReferenceFunction& f, const Vector& x) {
  require_dim(f, x);
  return std::visit(
      [&](const auto& v) -> Vector {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowerAbs>) {
          Vector g(1);
          g[0] = v.coeff * v.exponent * sgn(x[0]) *
                 pow_abs(x[0], v.exponent - 1.0);
          return g;
        } else if constexpr (std::is_same_v<T, TwoNormPower>) {
          const double r = x.norm();
          if (r == 0.0) return Vector::Zero(x.size());
          return (v.coeff * v.exponent * pow_abs(r, v.exponent - 2.0)) * x;
        } else if constexpr (std::is_same_v<T, PNormPower>) {
          Vector g(x.size());
          for (Eigen::Index i = 0; i < x.size(); ++i)
            g[i] = v.coeff * v.exponent * sgn(x[i]) *
                   pow_abs(x[i], v.exponent - 1.0);
          return g;
        } else if constexpr (std::is_same_v<T, QuadraticForm>) {
          return v.Q * x + v.b;
        } else if constexpr (std::is_same_v<T, PiecewiseQuadratic1D>) {
          Vector g(1);
          const double t = x[0];
          g[0] = 2.0 * (t >= 0.0 ? v.a : v.b) * t;
          return g;
        } else if constexpr (std::is_same_v<T, ScaledSum>) {
          Vector g = Vector::Zero(x.size());
          for (const auto& [w, h] : v.terms) g += w * gradient(h, x);
          return g;
        } else {
          static_assert(std::is_same_v<T, AffineImage>);
          return v.scale *
                     (v.L.transpose() * gradient(v.inner, Vector(v.L * x - v.x0))) +
                 v.b;
        }
      },
      f.node().value);
}

double bregman(const ReferenceFunction& f, const Vector& x, const Vector& y) {
  require_dim(f, x);
  require_dim(f, y);
  // The quadratic case collapses to the cancellation-free difference form,
  // and sums distribute termwise; everything else evaluates the definition.
  if (const auto* q = std::get_if<QuadraticForm>(&f.node().value)) {
    const Vector d = x - y;
    return 0.5 * d.dot(q->Q * d);
  }
  if (const auto* s = std::get_if<ScaledSum>(&f.node().value)) {
    double acc = 0.0;
    for (const auto& [w, g] : s->terms) acc += w * bregman(g, x, y);
    return acc;
  }
  return evaluate(f, x) - evaluate(f, y) - gradient(f, y).dot(x - y);
}

std::optional<double> homogeneity_degree(const ReferenceFunction& f) {
  return std::visit(
      [&](const auto& v) -> std::optional<double> {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, PowerAbs> ||
                      std::is_same_v<T, TwoNormPower> ||
                      std::is_same_v<T, PNormPower>) {
          return v.exponent;
        } else if constexpr (std::is_same_v<T, QuadraticForm>) {
          if (v.b.isZero(0.0) && v.c == 0.0) return 2.0;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, PiecewiseQuadratic1D>) {
          return 2.0;
        } else if constexpr (std::is_same_v<T, ScaledSum>) {
          std::optional<double> deg;
          for (const auto& [w, g] : v.terms) {
            (void)w;
            auto d = homogeneity_degree(g);
            if (!d) return std::nullopt;
            if (!deg) deg = d;
            else if (*deg != *d) return std::nullopt;
          }
          return deg;
        } else {
          static_assert(std::is_same_v<T, AffineImage>);
          if (v.x0.isZero(0.0) && v.b.isZero(0.0) && v.c == 0.0)
            return homogeneity_degree(v.inner);
          return std::nullopt;
        }
      },
      f.node().value);
}

namespace {
Vector wrap1(double t) {
  Vector v(1);
  v[0] = t;
  return v;
}
}  // namespace

double evaluate(const ReferenceFunction& f, double x) {
  return evaluate(f, wrap1(x));
}

double gradient1d(const ReferenceFunction& f, double x) {
  return gradient(f, wrap1(x))[0];
}

double bregman(const ReferenceFunction& f, double x, double y) {
  return bregman(f, wrap1(x), wrap1(y));
}

}  // namespace symcoef
