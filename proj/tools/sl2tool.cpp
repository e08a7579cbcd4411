#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "sl2/config.hpp"
#include "sl2/discrete.hpp"
#include "sl2/errors.hpp"
#include "sl2/principal.hpp"
#include "sl2/verify.hpp"

namespace {

constexpr int kUsage = 2;

struct CoeffArgs {
  std::optional<double> lambda;
  std::optional<int> disc;
  int m = 0, n = 0;
  std::optional<double> tau;
  std::optional<double> x;
};

void print_value(std::complex<double> v, const std::string& error) {
  std::printf("value %.17g %.17g\nerror %s\n", v.real(), v.imag(), error.c_str());
}

int cmd_coeff(const CoeffArgs& a) {
  if (a.lambda.has_value() == a.disc.has_value()) {
    std::cerr << "coeff: give exactly one of --lambda, --disc\n";
    return kUsage;
  }
  if (a.tau.has_value() == a.x.has_value()) {
    std::cerr << "coeff: give exactly one of --tau, --x\n";
    return kUsage;
  }
  try {
    if (a.lambda) {
      const sl2::PrincipalParam p(*a.lambda);
      if (a.tau) {
        const auto c = sl2::coeff_t_estimate(p, a.m, a.n, sl2::GroupElement::diagonal(*a.tau));
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", c.error);
        print_value(c.value, buf);
      } else {
        print_value(sl2::frak_P(p, a.m, a.n, *a.x), "-");
      }
    } else {
      const sl2::DiscreteParam d(*a.disc);
      const double u = a.x ? *a.x : std::cosh(2.0 * *a.tau);
      print_value(sl2::calP(d, a.m, a.n, u), "0");
    }
  } catch (const sl2::DomainError& e) {
    std::cerr << "coeff: " << e.what() << '\n';
    return kUsage;
  } catch (const sl2::IndexError& e) {
    std::cerr << "coeff: " << e.what() << '\n';
    return kUsage;
  }
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& config_path,
               const std::vector<std::string>& sets, const CLI::App& app, std::uint64_t seed,
               const std::string& out, const std::string& format) {
  sl2::RunConfig cfg;
  try {
    if (!config_path.empty()) cfg.load_file(config_path);
    for (const auto& kv : sets) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) throw sl2::ConfigError("--set expects key=value, got " + kv);
      cfg.set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    if (app.count("--seed")) cfg.seed = seed;
    if (app.count("--out")) cfg.out_dir = out;
    if (app.count("--format")) cfg.format = format;
    cfg.validate();
  } catch (const sl2::ConfigError& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return kUsage;
  }
  if (!sl2::is_suite(suite)) {
    std::cerr << "verify: unknown suite '" << suite << "'\n";
    return kUsage;
  }
  sl2::set_warnings_enabled(false);
  const auto report = sl2::run_suite(suite, cfg);
  for (const auto& r : report.criteria) std::cout << sl2::summary_line(r) << '\n';
  try {
    sl2::write_reports(report, cfg);
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << '\n';
    return kUsage;
  }
  std::cout << "reports written to " << cfg.out_dir << '\n';
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix coefficients, Whittaker functions and multiplier checks on SL(2,R)"};
  app.require_subcommand(1);

  CoeffArgs ca;
  auto* coeff = app.add_subcommand("coeff", "Print one matrix coefficient");
  coeff->add_option("--lambda", ca.lambda, "principal series, l = -1/2 + i lambda");
  coeff->add_option("--disc", ca.disc, "discrete series parameter l >= 0");
  coeff->add_option("--m", ca.m, "row index")->required();
  coeff->add_option("--n", ca.n, "column index")->required();
  coeff->add_option("--tau", ca.tau, "group element diag(e^tau, e^-tau)");
  coeff->add_option("--x", ca.x, "argument u = ch 2 tau >= 1");

  std::string suite, config_path, out, format;
  std::vector<std::string> sets;
  std::uint64_t seed = 42;
  auto* verify = app.add_subcommand("verify", "Run an acceptance suite and write reports");
  verify->add_option("suite", suite, "specfun|principal|discrete|plancherel|prop2|eq3|prop7|phi|all")
      ->required();
  verify->add_option("--config", config_path, "flat key = value file");
  verify->add_option("--set", sets, "override one config key (key=value)");
  verify->add_option("--seed", seed, "seed for randomized checks");
  verify->add_option("--out", out, "output directory");
  verify->add_option("--format", format, "csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }
  if (*coeff) return cmd_coeff(ca);
  return cmd_verify(suite, config_path, sets, *verify, seed, out, format);
}
