#include "sl2/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>

#include <boost/numeric/odeint.hpp>

#include "sl2/errors.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2k} / (2k (2k-1)), k = 1..10
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,        -1.0 / 360.0,         1.0 / 1260.0,          -1.0 / 1680.0,
    1.0 / 1188.0,      -691.0 / 360360.0,    1.0 / 156.0,           -3617.0 / 122400.0,
    43867.0 / 244188.0, -174611.0 / 125400.0};

cplx stirling(cplx z) {
  const cplx inv = 1.0 / z, inv2 = inv * inv;
  cplx series = 0.0, p = inv;
  for (double c : kStirling) {
    series += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + series;
}

}  // namespace

cplx log_gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
    throw DomainError("log_gamma: pole at nonpositive integer");
  constexpr double kShift = 16.0;
  // Gamma(z) = Gamma(z + 1) / z until Stirling's series is accurate.
  cplx shift = 0.0;
  while (std::abs(z) < kShift || z.real() < 0.0) {
    shift += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift;
}

cplx gamma(cplx z) { return std::exp(log_gamma(z)); }

double log_factorial(long n) {
  if (n < 0) throw DomainError("log_factorial: negative argument");
  return std::lgamma(static_cast<double>(n) + 1.0);
}

// ---------------------------------------------------------------------------
// Integral representation

cplx whittaker_w_integral(const WhittakerQuery& q, const WhittakerOptions& opt) {
  const cplx a = q.mu - q.kappa + 0.5;  // exponent of u is a - 1
  const cplx e2 = q.mu + q.kappa - 0.5;
  const double z = q.z;
  if (!(z > 0)) throw DomainError("whittaker_w_integral: z must be positive");
  if (!(a.real() > 0)) throw DomainError("whittaker_w_integral: Re(mu - kappa + 1/2) <= 0");

  auto integrand = [&](double u) -> cplx {
    return std::exp(-z * u + (a - 1.0) * std::log(u) + e2 * std::log1p(u));
  };

  // [0, eps]: u^(a-1) (1 + O(u)) integrated exactly.
  constexpr double kEps = 1e-16;
  cplx head = std::exp(a * std::log(kEps)) / a;
  // [eps, 1]: geometric panels resolve the algebraic endpoint behaviour.
  const auto edges = quad::geometric_edges(kEps, 1.0, 4.0);
  cplx body = 0.0;
  const double panel_tol = opt.quad_tol / (2.0 * edges.size());
  for (std::size_t i = 0; i + 1 < edges.size(); ++i)
    body += quad::adaptive(integrand, edges[i], edges[i + 1], panel_tol, 1e-14).value;

  // [1, inf): u = 1 + v / z, truncated once e^{-v} (1 + u)^{Re(2 mu) - 1} is negligible.
  const double growth = std::max(0.0, 2.0 * q.mu.real() - 1.0);
  double vmax = 45.0;
  while (-vmax + growth * std::log(2.0 + vmax / z) > -45.0) vmax *= 1.5;
  auto tail_integrand = [&](double v) { return integrand(1.0 + v / z) / z; };
  std::vector<double> tail_edges{0.0, 0.5, 1.0};
  while (tail_edges.back() < vmax) tail_edges.push_back(std::min(vmax, tail_edges.back() * 2.0));
  cplx tail = 0.0;
  const double tail_tol = opt.quad_tol / (2.0 * tail_edges.size());
  for (std::size_t i = 0; i + 1 < tail_edges.size(); ++i)
    tail += quad::adaptive(tail_integrand, tail_edges[i], tail_edges[i + 1], tail_tol, 1e-14).value;

  const cplx pref = std::exp((q.mu + 0.5) * std::log(z) - 0.5 * z - log_gamma(a));
  return pref * (head + body + tail);
}

// ---------------------------------------------------------------------------
// ODE continuation.
//
// W = e^{phi(s)} u(s), s = ln z, phi = -z/2 + s/2 + (kappa - 1/2) ln(1 + z), so that
// u stays of moderate size both for z -> 0 (W ~ z^{1/2 +- mu}) and z -> inf
// (W ~ e^{-z/2} z^kappa). With Q = du/ds the Whittaker equation becomes
//   dQ/ds = -(2 phi' - 1) Q - (phi'' + phi'^2 - phi' + 1/4 - mu^2 + kappa z - z^2/4) u.
// W is recessive at infinity, so the inward sweep is stable for large z. Near 0
// it loses relative accuracy when W is the smaller power z^{1/2 + |Re mu|}
// (e.g. W_{k, k - 1/2} for k > 1); for mu = i lambda both powers have equal size.

namespace {

using State = std::array<double, 4>;  // Re v, Im v, Re Q, Im Q

struct SeriesSeed {
  cplx v, q;
};

// Asymptotic series e^{-z/2} z^kappa sum_r c_r z^-r; false if it does not
// settle below 1e-16 before its terms start growing.
bool asymptotic_seed(cplx kappa, cplx mu, double z, SeriesSeed& out) {
  cplx c = 1.0, v = 1.0, qv = 0.0;
  double prev = 1.0;
  for (int r = 1; r < 400; ++r) {
    c *= -(0.5 + mu - kappa + double(r - 1)) * (0.5 - mu - kappa + double(r - 1)) / (r * z);
    const double mag = std::abs(c);
    if (mag > prev && mag > 1e-16) return false;
    v += c;
    qv += -double(r) * c;
    prev = mag;
    if (mag < 1e-17) break;
  }
  out = {v, qv};
  return true;
}

cplx scale_factor(cplx kappa, double z) { return std::exp(-0.5 * z + kappa * std::log(z)); }

}  // namespace

double whittaker_seed_point(cplx kappa, cplx mu) {
  const double s = std::abs(kappa) + std::abs(mu);
  return std::max(40.0, 10.0 * s * s);
}

std::vector<cplx> whittaker_w_many(cplx kappa, cplx mu, std::span<const double> zs,
                                   const WhittakerOptions& opt) {
  namespace odeint = boost::numeric::odeint;
  std::vector<cplx> out(zs.size());
  for (double z : zs)
    if (!(z > 0)) throw DomainError("whittaker_w: z must be positive");

  double z0 = whittaker_seed_point(kappa, mu);
  SeriesSeed seed;
  while (!asymptotic_seed(kappa, mu, z0, seed)) z0 *= 2.0;

  // Points at or beyond the seed are evaluated from the series directly.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    SeriesSeed direct;
    if (zs[i] >= z0 && asymptotic_seed(kappa, mu, zs[i], direct))
      out[i] = scale_factor(kappa, zs[i]) * direct.v;
    else
      order.push_back(i);
  }
  if (order.empty()) return out;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return zs[a] > zs[b]; });

  const cplx km = kappa - 0.5;
  auto rhs = [&](const State& y, State& dy, double s) {
    const double z = std::exp(s);
    const double r = z / (1.0 + z);
    const cplx d1 = -0.5 * z + 0.5 + km * r;
    const cplx d2 = -0.5 * z + km * r / (1.0 + z);
    const cplx c = d2 + d1 * d1 - d1 + 0.25 - mu * mu + kappa * z - 0.25 * z * z;
    const cplx u(y[0], y[1]), qu(y[2], y[3]);
    const cplx dq = -(2.0 * d1 - 1.0) * qu - c * u;
    dy = {qu.real(), qu.imag(), dq.real(), dq.imag()};
  };

  std::vector<double> times{std::log(z0)};
  for (auto i : order) times.push_back(std::log(zs[i]));
  std::vector<State> states;
  // u = S (z / (1 + z))^{kappa - 1/2} with S the series, du/ds from dS/ds.
  const double r0 = z0 / (1.0 + z0);
  const cplx rk = std::exp(km * std::log(r0));
  const cplx u0 = seed.v * rk, q0 = (seed.q + seed.v * km / (1.0 + z0)) * rk;
  State y = {u0.real(), u0.imag(), q0.real(), q0.imag()};
  auto stepper = odeint::make_controlled(opt.ode_tol * 1e-2, opt.ode_tol,
                                         odeint::runge_kutta_fehlberg78<State>());
  try {
    odeint::integrate_times(stepper, rhs, y, times.begin(), times.end(), -0.05,
                            [&](const State& st, double) { states.push_back(st); },
                            odeint::max_step_checker(100000));
  } catch (const std::exception& e) {
    throw ConvergenceError(std::string("whittaker_w: ODE step control failed: ") + e.what());
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    const State& st = states[k + 1];
    const double z = zs[order[k]];
    out[order[k]] = std::exp(-0.5 * z + 0.5 * std::log(z) + km * std::log1p(z)) * cplx(st[0], st[1]);
  }
  return out;
}

cplx whittaker_w(const WhittakerQuery& q, const WhittakerOptions& opt) {
  const double z[1] = {q.z};
  return whittaker_w_many(q.kappa, q.mu, z, opt)[0];
}

}  // namespace sl2
