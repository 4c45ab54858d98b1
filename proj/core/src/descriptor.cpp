#include "symcoef/descriptor.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <utility>
#include <vector>

namespace symcoef {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    src_.reserve(text.size());
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) src_.push_back(c);
    }
  }

  ReferenceFunction parse() {
    ReferenceFunction f = parse_function();
    if (pos_ != src_.size()) fail("trailing input after descriptor");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DescriptorError("descriptor error at offset " +
                          std::to_string(pos_) + ": " + what);
  }

  bool eof() const { return pos_ >= src_.size(); }
  char peek() const { return eof() ? '\0' : src_[pos_]; }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string parse_ident() {
    size_t start = pos_;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                      peek() == '_')) {
      ++pos_;
    }
    if (pos_ == start) fail("expected a function name");
    return src_.substr(start, pos_ - start);
  }

  double parse_number() {
    const char* begin = src_.data() + pos_;
    const char* end = src_.data() + src_.size();
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) fail("expected a number");
    pos_ = static_cast<size_t>(ptr - src_.data());
    return value;
  }

  std::map<std::string, double> parse_kwargs() {
    std::map<std::string, double> args;
    expect('(');
    if (peek() == ')') {
      ++pos_;
      return args;
    }
    for (;;) {
      std::string key = parse_ident();
      expect('=');
      double value = parse_number();
      if (!args.emplace(std::move(key), value).second)
        fail("duplicate keyword argument");
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      return args;
    }
  }

  double take(std::map<std::string, double>& args, const std::string& key) {
    auto it = args.find(key);
    if (it == args.end()) fail("missing keyword '" + key + "'");
    double v = it->second;
    args.erase(it);
    return v;
  }

  static double take_or(std::map<std::string, double>& args,
                        const std::string& key, double fallback) {
    auto it = args.find(key);
    if (it == args.end()) return fallback;
    double v = it->second;
    args.erase(it);
    return v;
  }

  void check_exhausted(const std::map<std::string, double>& args) const {
    if (!args.empty()) fail("unknown keyword '" + args.begin()->first + "'");
  }

  int as_dim(double v) {
    if (!(v >= 1.0) || v != std::floor(v) || v > 1e6)
      fail("dim must be a positive integer");
    return static_cast<int>(v);
  }

  ReferenceFunction parse_function() {
    std::string name = parse_ident();
    if (name == "sum") return parse_sum();

    auto args = parse_kwargs();
    if (name == "abs_pow") {
      double p = take(args, "p");
      double coeff = take_or(args, "coeff", 1.0);
      check_exhausted(args);
      return ReferenceFunction::power_abs(p, coeff);
    }
    if (name == "two_norm_pow") {
      double p = take(args, "p");
      int dim = as_dim(take(args, "dim"));
      double coeff = take_or(args, "coeff", 1.0);
      check_exhausted(args);
      return ReferenceFunction::two_norm_power(p, dim, coeff);
    }
    if (name == "p_norm_pow") {
      double p = take(args, "p");
      int dim = as_dim(take(args, "dim"));
      double coeff = take_or(args, "coeff", 1.0);
      check_exhausted(args);
      return ReferenceFunction::p_norm_power(p, dim, coeff);
    }
    if (name == "pw_quad") {
      double a = take(args, "a");
      double b = take(args, "b");
      check_exhausted(args);
      return ReferenceFunction::piecewise_quadratic(a, b);
    }
    fail("unknown function '" + name + "'");
  }

  ReferenceFunction parse_sum() {
    expect('(');
    std::vector<std::pair<double, ReferenceFunction>> terms;
    for (;;) {
      double weight = parse_number();
      expect('*');
      terms.emplace_back(weight, parse_function());
      if (peek() == ',') {
        ++pos_;
        continue;
      }
      expect(')');
      break;
    }
    return ReferenceFunction::scaled_sum(std::move(terms));
  }

  std::string src_;
  size_t pos_ = 0;
};

}  // namespace

ReferenceFunction parse_descriptor(std::string_view text) {
  return Parser(text).parse();
}

}  // namespace symcoef
