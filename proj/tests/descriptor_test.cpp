#include <doctest.h>

#include <stdexcept>

#include "symcoef/descriptor.hpp"

using namespace symcoef;

TEST_CASE("descriptor grammar accepts the documented forms") {
  const auto f1 = parse_descriptor("abs_pow(p=4)");
  CHECK(std::get<PowerAbs>(f1.node().value).exponent == 4.0);
  CHECK(std::get<PowerAbs>(f1.node().value).coeff == 1.0);

  const auto f2 = parse_descriptor("two_norm_pow(p=4,dim=3)");
  CHECK(std::get<TwoNormPower>(f2.node().value).dim == 3);

  const auto f3 = parse_descriptor("p_norm_pow(p=4,dim=2,coeff=0.5)");
  CHECK(std::get<PNormPower>(f3.node().value).coeff == 0.5);

  const auto f4 = parse_descriptor("pw_quad(a=1e-7,b=1)");
  CHECK(std::get<PiecewiseQuadratic1D>(f4.node().value).a == 1e-7);

  const auto f5 = parse_descriptor(
      "sum(0.25*abs_pow(p=4), 0.75*abs_pow(p=1.3333333333333333))");
  CHECK(std::get<ScaledSum>(f5.node().value).terms.size() == 2);
}

TEST_CASE("descriptor grammar ignores whitespace and keyword order") {
  const auto a = parse_descriptor("two_norm_pow(p=4,dim=3)");
  const auto b = parse_descriptor("  two_norm_pow ( dim = 3 ,\tp = 4 )  ");
  CHECK(std::get<TwoNormPower>(a.node().value).exponent ==
        std::get<TwoNormPower>(b.node().value).exponent);
  CHECK(std::get<TwoNormPower>(a.node().value).dim ==
        std::get<TwoNormPower>(b.node().value).dim);
}

TEST_CASE("descriptor numbers accept scientific notation") {
  const auto f = parse_descriptor("pw_quad(a=1.5e-3,b=2E2)");
  const auto& pw = std::get<PiecewiseQuadratic1D>(f.node().value);
  CHECK(pw.a == 1.5e-3);
  CHECK(pw.b == 2e2);
}

TEST_CASE("nested sums parse and flatten") {
  const auto f = parse_descriptor(
      "sum(2*sum(1*abs_pow(p=2), 1*abs_pow(p=4)), 1*pw_quad(a=1,b=2))");
  CHECK(std::get<ScaledSum>(f.node().value).terms.size() == 3);
}

TEST_CASE("descriptor parse failures raise DescriptorError") {
  CHECK_THROWS_AS(parse_descriptor(""), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("abs_pow"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("abs_pow(p=)"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("abs_pow(p=4"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("abs_pow(p=4) trailing"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("abs_pow(p=4,p=5)"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("abs_pow(q=4)"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("abs_pow()"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("mystery(p=4)"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("two_norm_pow(p=4,dim=2.5)"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("sum()"), DescriptorError);
  CHECK_THROWS_AS(parse_descriptor("sum(abs_pow(p=4))"), DescriptorError);
}

TEST_CASE("descriptor domain violations raise invalid_argument") {
  CHECK_THROWS_AS(parse_descriptor("abs_pow(p=0.5)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("abs_pow(p=4,coeff=-1)"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_descriptor("pw_quad(a=0,b=1)"), std::invalid_argument);
  CHECK_THROWS_AS(
      parse_descriptor("sum(1*abs_pow(p=2), 1*two_norm_pow(p=2,dim=3))"),
      std::invalid_argument);
}
