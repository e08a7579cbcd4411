#include "sl2/clebsch.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sl2/errors.hpp"
#include "sl2/principal.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

namespace {

constexpr int kOrder = 16;
constexpr double kDrop = 40.0;  // log-density range kept around the mode

double log_binom(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// Density of mu in T: exp(log_c + a log T + b log(1 - T)).
struct BetaDensity {
  double log_c = 0.0, a = 0.0, b = 0.0;

  double log_at(double t) const {
    return log_c + (a > 0 ? a * std::log(t) : 0.0) + (b > 0 ? b * std::log1p(-t) : 0.0);
  }
};

BetaDensity density_of(int l2, int m, int s, int j) {
  if (l2 < 0 || l2 + s < 0) throw IndexError("mu: discrete parameters must be nonnegative");
  if (m <= l2) throw IndexError("mu: need m > l2 (m=" + std::to_string(m) + ")");
  if (j + m <= l2 + s) throw IndexError("mu: need j + m > l2 + s");
  const int j1 = m - l2 - 1, j2 = j + m - l2 - s - 1;
  const int k1 = 2 * l2 + 2, k2 = 2 * (l2 + s) + 2;
  BetaDensity d;
  d.a = 0.5 * (j1 + j2);
  d.b = 2.0 * l2 + s;
  d.log_c = std::log(2.0 * (l2 + s + 0.5)) + 0.5 * log_binom(k1 + j1 - 1.0, j1) +
            0.5 * log_binom(k2 + j2 - 1.0, j2);
  return d;
}

struct Node {
  double x;       // (1 + T)/(1 - T)
  double weight;  // quadrature weight times density
};

std::vector<Node> mu_rule(const BetaDensity& d) {
  const double ab = d.a + d.b;
  const double mode = ab > 0 ? d.a / ab : 0.0;
  const double sigma = std::sqrt((d.a + 1.0) * (d.b + 1.0) / ((ab + 2.0) * (ab + 2.0) * (ab + 3.0)));
  const double peak = d.a > 0 ? d.log_at(mode) : d.log_c;

  double lo = mode, hi = mode;
  if (d.a > 0) {
    while (lo > 0.0 && d.log_at(lo) > peak - kDrop) lo = std::max(0.0, lo - sigma);
  }
  const double top = 1.0 - 1e-15;
  while (hi < top && d.log_at(hi) > peak - kDrop) hi = std::min(top, hi + sigma);

  const int panels = std::max(8, static_cast<int>(std::ceil((hi - lo) / sigma)));
  std::vector<Node> out;
  auto add = [&](double t, double w) {
    if (t <= 0.0 || t >= 1.0) return;
    out.push_back({(1.0 + t) / (1.0 - t), w * std::exp(d.log_at(t))});
  };
  if (lo == 0.0) {
    // T = v^2 keeps half-integer powers of T smooth.
    const auto rule = quad::composite(quad::uniform_edges(0.0, std::sqrt(hi), panels), kOrder);
    for (std::size_t i = 0; i < rule.size(); ++i)
      add(rule.x[i] * rule.x[i], 2.0 * rule.x[i] * rule.w[i]);
  } else {
    const auto rule = quad::composite(quad::uniform_edges(lo, hi, panels), kOrder);
    for (std::size_t i = 0; i < rule.size(); ++i) add(rule.x[i], rule.w[i]);
  }
  return out;
}

bool vanishes(int l2, int s, int j, int m) { return l2 + s < 0 || j + m <= l2 + s; }

}  // namespace

MuStats mu_stats(int l2, int m, int s, int j) {
  const auto nodes = mu_rule(density_of(l2, m, s, j));
  MuStats st;
  double m1 = 0.0;
  for (const auto& nd : nodes) {
    st.mass += nd.weight;
    m1 += nd.weight * nd.x;
  }
  st.mean = m1 / st.mass;
  double m2 = 0.0;
  for (const auto& nd : nodes) m2 += nd.weight * (nd.x - st.mean) * (nd.x - st.mean);
  st.variance = m2 / st.mass;
  if (st.mass < -1e-8) throw ConvergenceError("mu_stats: negative mass");
  return st;
}

double mu_mass_exact(int l2, int m, int s, int j) {
  const BetaDensity d = density_of(l2, m, s, j);
  const double log_beta = std::lgamma(d.a + 1.0) + std::lgamma(d.b + 1.0) - std::lgamma(d.a + d.b + 2.0);
  return std::exp(d.log_c + log_beta);
}

cplx cg_triple_integral(const CGQuery& q) {
  if (vanishes(q.l2, q.s, q.j, q.m)) return 0.0;
  const auto nodes = mu_rule(density_of(q.l2, q.m, q.s, q.j));
  std::vector<double> xs(nodes.size());
  std::transform(nodes.begin(), nodes.end(), xs.begin(), [](const Node& nd) { return nd.x; });
  const auto p = frak_P_many(PrincipalParam(q.lambda1), q.s, q.j, xs);
  cplx acc = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc += nodes[i].weight * p[i];
  return acc;
}

double cg_diag_modulus2(double lambda1, int l2, int s) {
  if (l2 + s < 0) return 0.0;
  const cplx v = cg_triple_integral({lambda1, l2, s, s, l2 + 1});
  if (std::abs(v.imag()) > 1e-8)
    warn("cg_diag_modulus2: imaginary part " + std::to_string(v.imag()) + " discarded");
  return std::clamp(v.real(), 0.0, 1.0 + 1e-6);
}

cplx cg_general(const CGQuery& q) {
  if (vanishes(q.l2, q.s, q.j, q.m)) return 0.0;
  const double diag = std::sqrt(cg_diag_modulus2(q.lambda1, q.l2, q.s));
  if (diag < 0.1)
    throw InstabilityError("cg_general: diagonal coefficient " + std::to_string(diag) +
                           " below 0.1 (l2=" + std::to_string(q.l2) + ", s=" + std::to_string(q.s) + ")");
  if (q.j == q.s && q.m == q.l2 + 1) return diag;
  return cg_triple_integral(q) / diag;
}

std::vector<Prop2Row> verify_prop2(double lambda1, int j, int s, double kappa,
                                   const std::vector<int>& l2_list) {
  if (!(kappa > 1.0)) throw DomainError("verify_prop2: kappa must exceed 1");
  const cplx target = frak_P(PrincipalParam(lambda1), s, j, kappa);
  std::vector<Prop2Row> rows;
  for (int l2 : l2_list) {
    Prop2Row r;
    r.l2 = l2;
    r.m = static_cast<int>(std::floor(kappa * l2));
    r.computed = cg_general({lambda1, l2, s, j, r.m});
    r.target = target;
    r.abs_error = std::abs(r.computed - target);
    rows.push_back(r);
  }
  return rows;
}

double column_energy(double lambda1, int l2, int j, int m, int s_min, int s_max, int* skipped) {
  double e = 0.0;
  int skip = 0;
  for (int s = s_min; s <= s_max; ++s) {
    try {
      e += std::norm(cg_general({lambda1, l2, s, j, m}));
    } catch (const InstabilityError&) {
      ++skip;
    }
  }
  if (skipped) *skipped = skip;
  return e;
}

}  // namespace sl2
