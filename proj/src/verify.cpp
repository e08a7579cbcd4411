#include "sl2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>

#include "sl2/clebsch.hpp"
#include "sl2/discrete.hpp"
#include "sl2/errors.hpp"
#include "sl2/hmodel.hpp"
#include "sl2/plancherel.hpp"
#include "sl2/principal.hpp"
#include "sl2/radial.hpp"
#include "sl2/serialize.hpp"
#include "sl2/specfun.hpp"

namespace sl2 {

namespace {

constexpr double kPi = std::numbers::pi;

using Artifacts = std::vector<Artifact>;

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string sci(double x) { return fmt("%.3e", x); }

// Uniform double in [0, 1) from the top 53 bits; independent of the standard
// library's distribution implementation.
double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> v(n);
  for (int i = 0; i < n; ++i) v[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return v;
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

bool strictly_increasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] > v[i - 1])) return false;
  return true;
}

std::string join(const std::vector<double>& v, const char* f = "%.3e") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + fmt(f, v[i]);
  return s;
}

WhittakerOptions wopts(const RunConfig& c) { return {c.quad_tol, c.ode_tol}; }

// 1 ---------------------------------------------------------------------------
Outcome whittaker_closed_form(const RunConfig& cfg, Artifacts& out) {
  std::vector<std::vector<std::string>> rows;
  double worst = 0.0;
  for (double z : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const cplx w = whittaker_w({0.0, 0.5, z}, wopts(cfg));
    const double err = std::abs(w - std::exp(-0.5 * z));
    worst = std::max(worst, err);
    rows.push_back({format_double(z), format_double(w.real()), format_double(w.imag()), format_double(err)});
  }
  out.push_back({"whittaker_closed_form.csv", csv({"z", "re", "im", "abs_error"}, rows)});
  return {worst < 1e-9, "max |W_{0,1/2}(z) - e^{-z/2}| = " + sci(worst)};
}

// 2 ---------------------------------------------------------------------------
Outcome whittaker_agreement(const RunConfig& cfg, Artifacts& out) {
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::vector<std::string>> rows;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double z = 0.1 + 19.9 * uniform01(rng);
    const cplx mu(uniform01(rng), -4.0 + 8.0 * uniform01(rng));
    // kappa in [-3, Re mu + 0.4] keeps Re(mu - kappa + 1/2) >= 0.1.
    const double kappa = -3.0 + (mu.real() + 3.4) * uniform01(rng);
    const cplx a = whittaker_w({kappa, mu, z}, wopts(cfg));
    const cplx b = whittaker_w_integral({kappa, mu, z}, wopts(cfg));
    const double rel = std::abs(a - b) / std::abs(b);
    worst = std::max(worst, rel);
    rows.push_back({format_double(kappa), format_double(mu.real()), format_double(mu.imag()),
                    format_double(z), format_double(rel)});
  }
  out.push_back({"whittaker_agreement.csv", csv({"kappa", "mu_re", "mu_im", "z", "rel_error"}, rows)});
  return {worst < 1e-8, "max relative deviation over 50 points = " + sci(worst)};
}

// 3 ---------------------------------------------------------------------------
Outcome elliptic_basis(const RunConfig&, Artifacts& out) {
  std::vector<std::vector<std::string>> rows;
  double worst = 0.0;
  for (double lam : {0.0, 0.5, 2.0}) {
    const PrincipalParam p(lam);
    double w_lam = 0.0;
    for (int k = 0; k < 16; ++k) {
      const double phi = kPi * k / 16;
      const GroupElement g = RotationElement(phi).matrix();
      for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
          const cplx want = m == n ? std::polar(1.0, 2.0 * m * phi) : cplx(0.0);
          w_lam = std::max(w_lam, std::abs(coeff_t(p, m, n, g) - want));
        }
    }
    worst = std::max(worst, w_lam);
    rows.push_back({format_double(lam), format_double(w_lam)});
  }
  out.push_back({"elliptic_basis.csv", csv({"lambda", "max_error"}, rows)});
  return {worst < 1e-9, "sup |t_mn(k_phi) - e^{2im phi} delta_mn| = " + sci(worst)};
}

// 4 ---------------------------------------------------------------------------
Outcome unitarity_symmetry(const RunConfig& cfg, Artifacts& out) {
  const PrincipalParam p(0.5);
  const GroupElement g = GroupElement::diagonal(1.0);
  const ThetaGrid grid(cfg.theta_N);
  bool ok = true;
  double min_sum = 1.0, max_sum = 0.0;
  std::vector<std::vector<std::string>> rows;
  for (int n = -2; n <= 2; ++n) {
    // sum_m |t_mn(g)|^2 = sum_m |t_nm(g^-1)|^2
    const auto row = coeff_row(p, n, inverse(g), 40, grid);
    double prev = 0.0;
    for (int M = 0; M <= 40; ++M) {
      double s = 0.0;
      for (int m = -M; m <= M; ++m) s += std::norm(row[m + 40]);
      if (s < prev - 1e-15) ok = false;
      prev = s;
      if (M % 10 == 0) rows.push_back({std::to_string(n), std::to_string(M), format_double(s)});
    }
    min_sum = std::min(min_sum, prev);
    max_sum = std::max(max_sum, prev);
  }
  ok = ok && min_sum >= 0.99 && max_sum <= 1.0 + 1e-12;
  out.push_back({"unitarity.csv", csv({"n", "M", "partial_sum"}, rows)});

  double sym = 0.0;
  const std::vector<double> us{1.0, 1.5, 3.0, 10.0, 100.0};
  for (auto [m, n] : {std::pair{2, 1}, {0, 1}, {3, 3}, {1, -2}}) {
    const auto a = frak_P_many(p, m, n, us);
    const auto b = frak_P_many(p, -m, -n, us);
    for (std::size_t i = 0; i < us.size(); ++i) sym = std::max(sym, std::abs(a[i] - b[i]));
  }
  ok = ok && sym < 1e-9;
  return {ok, "partial sums at M=40 in [" + fmt("%.6f", min_sum) + ", " + fmt("%.6f", max_sum) +
                  "], max |P_mn - P_-m-n| = " + sci(sym)};
}

// 5 ---------------------------------------------------------------------------
Outcome discrete_anchors(const RunConfig&, Artifacts& out) {
  double anchor = 0.0;
  for (int l : {0, 1, 2}) {
    const DiscreteParam d(l);
    for (int i = 0; i < 50; ++i) {
      const double x = std::pow(10.0, 3.0 * i / 49);
      anchor = std::max(anchor, std::abs(calP(d, l + 1, l + 1, x) - std::pow(2.0 / (x + 1.0), l + 1)));
    }
  }
  const RadialGrid rg = RadialGrid::make(30.0, 300);
  double orth = 0.0;
  std::vector<std::vector<std::string>> rows;
  for (int l = 0; l < 3; ++l)
    for (int lp = 0; lp < 3; ++lp) {
      double s = 0.0;
      for (std::size_t i = 0; i < rg.size(); ++i)
        s += rg.w[i] * calP(DiscreteParam(l), 3, 3, rg.x[i]) * calP(DiscreteParam(lp), 3, 3, rg.x[i]);
      const double want = l == lp ? 1.0 / (l + 0.5) : 0.0;
      orth = std::max(orth, std::abs(s - want));
      rows.push_back({std::to_string(l), std::to_string(lp), format_double(s), format_double(want)});
    }
  out.push_back({"discrete_orthogonality.csv", csv({"l", "lprime", "integral", "expected"}, rows)});
  std::vector<std::vector<std::string>> signs;
  const auto sm = sign_matrix(DiscreteParam(0), 6);
  for (std::size_t i = 0; i < sm.size(); ++i)
    for (std::size_t j = 0; j < sm.size(); ++j)
      signs.push_back({std::to_string(i + 1), std::to_string(j + 1), std::to_string(sm[i][j])});
  out.push_back({"sign_matrix.csv", csv({"m_minus_l", "n_minus_l", "sign"}, signs)});
  return {anchor < 1e-8 && orth < 1e-6,
          "anchor deviation " + sci(anchor) + ", orthogonality deviation " + sci(orth)};
}

// 6 ---------------------------------------------------------------------------
double roundtrip_error(const SampledFunction& g, const RadialGrid& rg, double lambda_max, int nodes,
                       SpectralData* keep) {
  const SpectralData s = mf_analyze(g, 2, 2, LambdaGrid::make(lambda_max, nodes));
  SampledFunction r = mf_synthesize(s, rg.x);
  r.weights = rg.w;
  if (keep) *keep = s;
  return relative_l2_error(r, g);
}

Outcome mehler_fock(const RunConfig& cfg, Artifacts& out) {
  const RadialGrid rg = RadialGrid::make(1.5, 30);
  const auto g = sample_radial([](double x) { return cplx(std::exp(-4.0 * (x - 2.0) * (x - 2.0))); }, rg);
  SpectralData s;
  const double err = roundtrip_error(g, rg, cfg.lambda_max, cfg.lambda_N, &s);
  const double wider = roundtrip_error(g, rg, cfg.lambda_max + 10.0, cfg.lambda_N, nullptr);
  out.push_back({"spectral_data.json", to_json(s).dump(1) + "\n"});
  out.push_back({"roundtrip.csv",
                 csv({"lambda_max", "rel_l2_error", "parseval_defect"},
                     {{format_double(cfg.lambda_max), format_double(err),
                       format_double(g.norm2() * g.norm2() - s.energy())},
                      {format_double(cfg.lambda_max + 10.0), format_double(wider), ""}})});
  return {err < 1e-3, "relative L2 error " + sci(err) + " at lambda_max=" + fmt("%g", cfg.lambda_max) +
                          " (" + sci(wider) + " at lambda_max=" + fmt("%g", cfg.lambda_max + 10.0) +
                          "), |a(lambda_max)| = " + sci(std::abs(s.a.back()))};
}

// 7 ---------------------------------------------------------------------------
Outcome prop2_diagonal(const RunConfig& cfg, Artifacts& out) {
  bool ok = true;
  std::string detail;
  std::vector<std::vector<std::string>> rows;
  for (int s : {0, 1}) {
    std::vector<double> mods;
    for (int l2 : cfg.l2_list) {
      const double m2 = cg_diag_modulus2(0.5, l2, s);
      mods.push_back(std::sqrt(m2));
      rows.push_back({std::to_string(s), std::to_string(l2), format_double(m2), format_double(mods.back())});
    }
    ok = ok && strictly_increasing(mods) && mods.back() > 0.9 && mods.back() <= 1.0 + 1e-6;
    detail += (s ? "; s=1: " : "s=0: ") + join(mods, "%.6f");
  }
  out.push_back({"prop2_diagonal.csv", csv({"s", "l2", "modulus2", "modulus"}, rows)});
  return {ok, "|C| along l2: " + detail};
}

// 8 ---------------------------------------------------------------------------
Outcome prop2_general(const RunConfig& cfg, Artifacts& out) {
  bool ok = true;
  std::string detail;
  std::vector<std::vector<std::string>> mu_rows;
  for (auto [s, j, kappa] : {std::tuple{0, 1, 2.0}, std::tuple{1, 0, 1.5}}) {
    const auto rows = verify_prop2(0.5, j, s, kappa, cfg.l2_list);
    std::vector<double> errs;
    for (const auto& r : rows) errs.push_back(r.abs_error);
    out.push_back({"prop2_s" + std::to_string(s) + "_j" + std::to_string(j) + ".csv", prop2_csv(rows)});
    ok = ok && strictly_decreasing(errs);
    const int l2 = cfg.l2_list.back();
    const int m = static_cast<int>(std::floor(kappa * l2));
    const MuStats st = mu_stats(l2, m, s, j);
    const bool mu_ok = std::abs(st.mass - 1.0) < 0.1 && std::abs(st.mean - kappa) < 0.1 * kappa;
    ok = ok && mu_ok;
    mu_rows.push_back({std::to_string(s), std::to_string(j), format_double(kappa), std::to_string(l2),
                       std::to_string(m), format_double(st.mass), format_double(st.mean),
                       format_double(st.variance)});
    detail += (detail.empty() ? "" : "; ") + std::string("(s,j,kappa)=(") + std::to_string(s) + "," +
              std::to_string(j) + "," + fmt("%g", kappa) + ") errors " + join(errs) + ", mu mass " +
              fmt("%.4f", st.mass) + " mean " + fmt("%.4f", st.mean);
  }
  out.push_back({"mu_stats.csv", csv({"s", "j", "kappa", "l2", "m", "mass", "mean", "variance"}, mu_rows)});
  return {ok, detail};
}

// 9 ---------------------------------------------------------------------------
Outcome eq3(const RunConfig& cfg, Artifacts& out) {
  const YGrid yg = YGrid::make(cfg.y_min, cfg.y_max, cfg.y_ratio);
  const HGrid hg = HGrid::standard(5, 5);
  double worst = 0.0;
  std::vector<std::vector<std::string>> rows;
  for (auto [lam, j, jp] : {std::tuple{0.5, 0, 0}, std::tuple{1.0, 1, 0}, std::tuple{0.3, 2, 1}}) {
    for (const auto& p : eq3_table(lam, j, jp, hg, yg)) {
      worst = std::max(worst, p.error);
      rows.push_back({format_double(lam), std::to_string(j), std::to_string(jp), format_double(p.h.a()),
                      format_double(p.h.b()), format_double(p.whittaker_side.real()),
                      format_double(p.whittaker_side.imag()), format_double(p.coefficient_side.real()),
                      format_double(p.coefficient_side.imag()), format_double(p.error)});
    }
  }
  out.push_back({"eq3.csv", csv({"lambda", "j", "jprime", "a", "b", "whittaker_re", "whittaker_im",
                                 "coeff_re", "coeff_im", "abs_error"},
                                rows)});
  return {worst < 1e-5, "sup cross-pipeline deviation = " + sci(worst)};
}

// 10 --------------------------------------------------------------------------
Outcome fourier_identity(const RunConfig&, Artifacts& out) {
  const std::vector<double> ys{-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
  double worst = 0.0;
  std::vector<std::vector<std::string>> rows;
  for (int m : {0, 1, 2}) {
    const double e = ft_basis_identity(0.5, m, ys);
    worst = std::max(worst, e);
    rows.push_back({std::to_string(m), format_double(e)});
  }
  out.push_back({"ft_identity.csv", csv({"m", "max_error"}, rows)});
  return {worst < 1e-4, "sup deviation = " + sci(worst)};
}

// 11 --------------------------------------------------------------------------
Outcome prop7(const RunConfig& cfg, Artifacts& out) {
  const std::vector<int> ms{4, 8, 16, 32, 64};
  const auto coarse = linspace(0.0, cfg.tau_max, cfg.tau_points);
  const auto fine = linspace(0.0, cfg.tau_max, 2 * cfg.tau_points - 1);
  bool ok = true;
  std::string detail;
  for (auto [lam, n] : {std::pair{0.5, 0}, std::pair{1.0, 1}}) {
    const Prop7Report a = verify_prop7(lam, n, coarse, ms);
    const Prop7Report b = verify_prop7(lam, n, fine, ms);
    const double ratio = std::max(a.sup_D_m2, b.sup_D_m2) / std::min(a.sup_D_m2, b.sup_D_m2);
    ok = ok && strictly_decreasing(a.sup_D) && strictly_decreasing(b.sup_D) && ratio < 2.0 &&
         b.lower_half_deviation < 1e-9;
    out.push_back({"prop7_lambda" + fmt("%g", lam) + "_n" + std::to_string(n) + ".csv", prop7_csv(b)});
    detail += (detail.empty() ? "" : "; ") + std::string("(lambda,n)=(") + fmt("%g", lam) + "," +
              std::to_string(n) + ") sup_tau D " + join(b.sup_D) + ", sup D m^2 " +
              fmt("%.4f", a.sup_D_m2) + " -> " + fmt("%.4f", b.sup_D_m2);
  }
  return {ok, detail};
}

// 12 --------------------------------------------------------------------------
Outcome phi_radiality(const RunConfig& cfg, Artifacts& out) {
  const HGrid hg = HGrid::standard(5, 5);
  const PrincipalParam p(0.5);
  const int j = 1, jp = 0;
  auto t = [&](const GroupElement& g) { return coeff_t(p, j, jp, g); };
  const CoefficientMatrix phi = phi_matrix(t, cfg.M, hg);
  const auto support = phi.support(1e-6);
  bool ok = support.size() == 1;
  double dev = 0.0;
  std::string where = "none";
  if (ok) {
    const auto [m, n] = support.front();
    where = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    for (std::size_t k = 0; k < hg.size(); ++k)
      dev = std::max(dev, std::abs(phi.at(m, n)[k] - coeff_t(p, j, jp, hg.at(k).matrix())));
    ok = dev < 1e-6;
  }
  const CoefficientMatrix one = phi_matrix([](const GroupElement&) { return cplx(1.0); }, cfg.M, hg);
  const auto s1 = one.support(1e-6);
  double dev1 = 0.0;
  for (const cplx& v : one.at(0, 0)) dev1 = std::max(dev1, std::abs(v - 1.0));
  const bool ok1 = s1.size() == 1 && s1.front() == std::pair{0, 0} && dev1 < 1e-12;
  out.push_back({"phi_matrix.json", to_json(phi).dump(1) + "\n"});
  out.push_back({"phi_calibration.csv",
                 csv({"j", "jprime", "entry_m", "entry_n", "max_deviation"},
                     {{std::to_string(j), std::to_string(jp),
                       support.size() == 1 ? std::to_string(support.front().first) : "",
                       support.size() == 1 ? std::to_string(support.front().second) : "",
                       format_double(dev)}})});
  return {ok && ok1, "t_{10} support " + std::to_string(support.size()) + " entry at " + where +
                         ", restriction deviation " + sci(dev) + "; f=1 support " +
                         std::to_string(s1.size()) + " entry, deviation " + sci(dev1)};
}

struct CriterionDef {
  int id;
  const char* suite;
  const char* title;
  double limit;
  std::function<Outcome(const RunConfig&, Artifacts&)> run;
};

const std::vector<CriterionDef>& criterion_table() {
  static const std::vector<CriterionDef> s = {
      {1, "specfun", "Whittaker closed form", 1.0, whittaker_closed_form},
      {2, "specfun", "Whittaker integral/continuation agreement", 30.0, whittaker_agreement},
      {3, "principal", "elliptic basis", 10.0, elliptic_basis},
      {4, "principal", "unitarity and symmetry", 60.0, unitarity_symmetry},
      {5, "discrete", "discrete-series anchors", 60.0, discrete_anchors},
      {6, "plancherel", "Mehler-Fock round trip", 120.0, mehler_fock},
      {7, "prop2", "CG diagonal asymptotics", 120.0, prop2_diagonal},
      {8, "prop2", "CG general asymptotics and mu", 240.0, prop2_general},
      {9, "eq3", "Whittaker model identity", 120.0, eq3},
      {10, "eq3", "Fourier transform of the basis", 60.0, fourier_identity},
      {11, "prop7", "approximation by Whittaker functions", 180.0, prop7},
      {12, "phi", "Phi-matrix radiality", 120.0, phi_radiality},
  };
  return s;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"specfun", "principal", "discrete", "plancherel",
                                              "prop2",   "eq3",       "prop7",    "phi"};
  return names;
}

bool is_suite(const std::string& name) {
  return name == "all" || std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

std::vector<int> suite_criteria(const std::string& name) {
  std::vector<int> ids;
  for (const auto& s : criterion_table())
    if (name == "all" || name == s.suite) ids.push_back(s.id);
  return ids;
}

CriterionResult run_criterion(int id, const RunConfig& cfg, std::vector<Artifact>* artifacts) {
  const auto it = std::find_if(criterion_table().begin(), criterion_table().end(), [id](const CriterionDef& s) { return s.id == id; });
  if (it == criterion_table().end()) throw DomainError("no acceptance criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.suite = it->suite;
  r.title = it->title;
  r.limit_seconds = it->limit;
  Artifacts local;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    const Outcome o = it->run(cfg, local);
    r.passed = o.ok;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.seconds > r.limit_seconds) {
    r.passed = false;
    r.detail += " [time budget exceeded]";
  }
  if (artifacts) artifacts->insert(artifacts->end(), local.begin(), local.end());
  return r;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  if (!is_suite(name)) throw DomainError("unknown suite '" + name + "'");
  SuiteReport rep;
  for (int id : suite_criteria(name)) rep.criteria.push_back(run_criterion(id, cfg, &rep.artifacts));
  return rep;
}

std::string summary_line(const CriterionResult& r) {
  char head[64];
  std::snprintf(head, sizeof head, "%s [%2d] ", r.passed ? "PASS" : "FAIL", r.id);
  return head + r.title + ": " + r.detail + " (" + fmt("%.2f", r.seconds) + " s / " +
         fmt("%g", r.limit_seconds) + " s)";
}

void write_reports(const SuiteReport& report, const RunConfig& cfg) {
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);
  auto write = [&](const std::string& name, const std::string& content) {
    std::ofstream f(fs::path(cfg.out_dir) / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + name);
    f << content;
  };
  for (const auto& a : report.artifacts) write(a.name, a.content);
  if (cfg.format == "json") {
    nlohmann::json j;
    j["config"] = cfg.as_map();
    j["criteria"] = nlohmann::json::array();
    for (const auto& r : report.criteria)
      j["criteria"].push_back({{"id", r.id}, {"suite", r.suite}, {"title", r.title},
                               {"passed", r.passed}, {"detail", r.detail}});
    j["passed"] = report.passed();
    write("report.json", j.dump(1) + "\n");
  } else {
    std::vector<std::vector<std::string>> rows;
    auto quote = [](std::string s) {
      std::string q = "\"";
      for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
      return q + "\"";
    };
    for (const auto& r : report.criteria)
      rows.push_back({std::to_string(r.id), r.suite, quote(r.title), r.passed ? "pass" : "fail", quote(r.detail)});
    write("report.csv", csv({"id", "suite", "title", "result", "detail"}, rows));
  }
}

}  // namespace sl2
