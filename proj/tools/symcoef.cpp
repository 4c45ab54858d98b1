#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "symcoef/descriptor.hpp"
#include "symcoef/oracle.hpp"
#include "symcoef/sweep.hpp"
#include "symcoef/symmetry.hpp"
#include "symcoef/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

std::string sig17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string format_vector(const symcoef::Vector& v) {
  std::string out = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += symcoef::format_shortest(v[i]);
  }
  out += "]";
  return out;
}

void print_certificate(const symcoef::SymmetryCertificate& cert) {
  std::cout << "alpha = " << sig17(cert.alpha) << '\n';
  std::cout << "method = " << symcoef::method_name(cert.method) << '\n';
  if (cert.u0) {
    std::cout << "u0 = " << sig17(*cert.u0) << '\n';
    std::cout << "iterations = " << cert.iterations << '\n';
    std::cout << "residual = " << sig17(cert.residual) << '\n';
  }
}

int cmd_alpha(const std::string& descriptor, double tol) {
  const symcoef::ReferenceFunction f = symcoef::parse_descriptor(descriptor);
  const symcoef::AlphaResult result = symcoef::alpha_of(f, tol);
  if (const auto* cert = std::get_if<symcoef::SymmetryCertificate>(&result)) {
    print_certificate(*cert);
  } else {
    const auto& iv = std::get<symcoef::AlphaInterval>(result);
    std::cout << "interval: [" << sig17(iv.lower) << ", " << sig17(iv.upper)
              << "]\n";
  }
  return kExitOk;
}

int cmd_sweep(double p_min, double p_max, int points,
              const std::string& spacing, const std::string& out_path,
              double tol) {
  const auto rows = symcoef::compute_sweep(
      p_min, p_max, points,
      spacing == "log" ? symcoef::Spacing::Log : symcoef::Spacing::Linear,
      tol);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot open '" << out_path << "' for writing\n";
    return kExitIo;
  }
  symcoef::write_sweep_csv(out, rows);
  out.flush();
  if (!out) {
    std::cerr << "failed writing '" << out_path << "'\n";
    return kExitIo;
  }
  return kExitOk;
}

int cmd_verify(bool closed_forms_only) {
  const auto items = symcoef::run_verification(closed_forms_only);
  int failures = 0;
  for (const auto& item : items) {
    std::cout << (item.passed ? "PASS " : "FAIL ") << item.name << ": "
              << item.detail << '\n';
    if (!item.passed) ++failures;
  }
  if (failures == 0) {
    std::cout << "all " << items.size() << " checks passed\n";
    return kExitOk;
  }
  std::cout << failures << " of " << items.size() << " checks failed\n";
  return kExitVerifyFailure;
}

int cmd_oracle(const std::string& descriptor, std::uint64_t samples,
               std::uint64_t seed, int refine_steps) {
  const symcoef::ReferenceFunction f = symcoef::parse_descriptor(descriptor);
  const symcoef::OracleEstimate est =
      symcoef::alpha_sample_nd(f, samples, seed, refine_steps);
  std::cout << "alpha_hat = " << sig17(est.alpha_hat) << '\n';
  std::cout << "witness_x = " << format_vector(est.witness_x) << '\n';
  std::cout << "witness_y = " << format_vector(est.witness_y) << '\n';
  std::cout << "samples = " << est.samples << '\n';
  std::cout << "seed = " << est.seed << '\n';
  std::cout << "refined = " << (est.refined ? "true" : "false") << '\n';
  const symcoef::AlphaResult exact = symcoef::alpha_of(f);
  if (const auto* cert = std::get_if<symcoef::SymmetryCertificate>(&exact)) {
    std::cout << "alpha = " << sig17(cert->alpha) << '\n';
    std::cout << "gap = " << sig17(est.alpha_hat - cert->alpha) << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetry coefficients of Bregman reference functions"};
  app.require_subcommand(1);

  std::string descriptor;
  double tol = symcoef::kDefaultTol;
  auto* alpha_cmd = app.add_subcommand(
      "alpha", "Compute the symmetry coefficient of a described function");
  alpha_cmd->add_option("descriptor", descriptor,
                        "function descriptor, e.g. \"abs_pow(p=4)\"")
      ->required();
  alpha_cmd->add_option("--tol", tol, "bisection bracket tolerance");

  double p_min = 2.0;
  double p_max = 1000.0;
  int points = 200;
  std::string spacing = "log";
  std::string out_path;
  auto* sweep_cmd =
      app.add_subcommand("sweep", "Sweep the coefficient of |.|^p over a grid");
  sweep_cmd->add_option("--p-min", p_min, "left endpoint (default 2)");
  sweep_cmd->add_option("--p-max", p_max, "right endpoint (default 1000)");
  sweep_cmd->add_option("--points", points, "grid size (default 200)");
  sweep_cmd->add_option("--spacing", spacing, "log or linear (default log)")
      ->check(CLI::IsMember({"log", "linear"}));
  sweep_cmd->add_option("--out", out_path, "output CSV path")->required();
  sweep_cmd->add_option("--tol", tol, "bisection bracket tolerance");

  bool closed_forms_only = false;
  auto* verify_cmd = app.add_subcommand(
      "verify", "Cross-check closed forms, factorizations and sum rules");
  verify_cmd->add_flag("--closed-forms", closed_forms_only,
                       "only run the closed-form and factorization checks");

  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  int refine_steps = 200;
  std::string oracle_descriptor;
  auto* oracle_cmd = app.add_subcommand(
      "oracle", "Monte Carlo lower-biased estimate of the coefficient");
  oracle_cmd
      ->add_option("descriptor", oracle_descriptor, "function descriptor")
      ->required();
  oracle_cmd->add_option("--samples", samples, "sample pairs (default 100000)");
  oracle_cmd->add_option("--seed", seed, "RNG seed (default 0)");
  oracle_cmd->add_option("--refine-steps", refine_steps,
                         "descent sweeps around the best pair (default 200)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (alpha_cmd->parsed()) return cmd_alpha(descriptor, tol);
    if (sweep_cmd->parsed())
      return cmd_sweep(p_min, p_max, points, spacing, out_path, tol);
    if (verify_cmd->parsed()) return cmd_verify(closed_forms_only);
    if (oracle_cmd->parsed())
      return cmd_oracle(oracle_descriptor, samples, seed, refine_steps);
  } catch (const symcoef::DescriptorError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return kExitVerifyFailure;
  }
  return kExitUsage;
}
