#include "symcoef/sweep.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace symcoef {

std::vector<SweepRow> compute_sweep(double p_min, double p_max, int points,
                                    Spacing spacing, double tol) {
  if (!(std::isfinite(p_min) && std::isfinite(p_max) && p_min > 1.0 &&
        p_min < p_max)) {
    throw std::invalid_argument("sweep requires 1 < p_min < p_max");
  }
  if (points < 2) throw std::invalid_argument("sweep requires points >= 2");

  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(points));
  const double lo = (spacing == Spacing::Log) ? std::log(p_min) : p_min;
  const double hi = (spacing == Spacing::Log) ? std::log(p_max) : p_max;
  for (int i = 0; i < points; ++i) {
    double p;
    if (i == 0) {
      p = p_min;
    } else if (i == points - 1) {
      p = p_max;
    } else {
      const double t = lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(points - 1);
      p = (spacing == Spacing::Log) ? std::exp(t) : t;
    }
    rows.push_back({p, alpha_power(p, tol).alpha});
  }
  return rows;
}

std::string format_shortest(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
  return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows) {
  out << "p,alpha\n";
  for (const SweepRow& row : rows) {
    out << format_shortest(row.p) << ',' << format_shortest(row.alpha) << '\n';
  }
}

namespace {
double parse_field(std::string_view field, int line_no) {
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::runtime_error("sweep csv: bad number on line " +
                             std::to_string(line_no));
  }
  return value;
}
}  // namespace

std::vector<SweepRow> read_sweep_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "p,alpha")
    throw std::runtime_error("sweep csv: missing p,alpha header");
  std::vector<SweepRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) {
      throw std::runtime_error("sweep csv: empty line " +
                               std::to_string(line_no));
    }
    const size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error("sweep csv: missing comma on line " +
                               std::to_string(line_no));
    rows.push_back({parse_field(std::string_view(line).substr(0, comma), line_no),
                    parse_field(std::string_view(line).substr(comma + 1), line_no)});
  }
  return rows;
}

}  // namespace symcoef
