#include "sl2/principal.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include <boost/numeric/odeint.hpp>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxGrid = 1 << 20;

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

double theta_node(int k, int n) { return -0.5 * kPi + (k + 0.5) * kPi / n; }

double parity(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Integrand of t_mn(g) in theta, without the (-1)^{m+n}/pi factor:
// exp(i (2 n psi - 2 m theta) + l log r^2), where p + i q = r e^{i psi}.
struct Kernel {
  double alpha, beta, gamma, delta;
  cplx l;

  void pq(double th, double& p, double& q) const {
    const double s = std::sin(th), c = std::cos(th);
    p = beta * s + delta * c;
    q = alpha * s + gamma * c;
  }

  cplx operator()(int m, int n, double th) const {
    double p, q;
    pq(th, p, q);
    const double r2 = p * p + q * q;
    const double psi = std::atan2(q, p);
    const double lr = std::log(r2);
    return std::exp(cplx(l.real() * lr, 2.0 * n * psi - 2.0 * m * th + l.imag() * lr));
  }
};

Kernel kernel_of(const PrincipalParam& p, const GroupElement& g) {
  return {g.alpha(), g.beta(), g.gamma(), g.delta(), p.l()};
}

cplx coeff_on_n(const Kernel& ker, int m, int n, int grid_n) {
  cplx s = 0.0;
  for (int k = 0; k < grid_n; ++k) s += ker(m, n, theta_node(k, grid_n));
  return parity(static_cast<long>(m) + n) * s / static_cast<double>(grid_n);
}

// Value and tau-derivative of t_mn(diag(e^tau, e^-tau)) on one grid.
// d/dtau of the integrand is the integrand times (2 l (q^2 - p^2) + 4 i n p q) / r^2.
std::pair<cplx, cplx> diag_value_and_slope(const PrincipalParam& par, int m, int n, double tau,
                                           int grid_n) {
  const Kernel ker = kernel_of(par, GroupElement::diagonal(tau));
  const cplx l = par.l();
  cplx v = 0.0, d = 0.0;
  for (int k = 0; k < grid_n; ++k) {
    const double th = theta_node(k, grid_n);
    double p, q;
    ker.pq(th, p, q);
    const double r2 = p * p + q * q;
    const cplx f = ker(m, n, th);
    v += f;
    d += f * (2.0 * l * (q * q - p * p) + cplx(0.0, 4.0 * n * p * q)) / r2;
  }
  const double scale = parity(static_cast<long>(m) + n) / static_cast<double>(grid_n);
  return {v * scale, d * scale};
}

std::pair<cplx, cplx> diag_value_and_slope(const PrincipalParam& par, int m, int n, double tau) {
  constexpr double kTol = 1e-11;
  int grid_n = 1024;
  auto prev = diag_value_and_slope(par, m, n, tau, grid_n);
  while (grid_n < kMaxGrid) {
    grid_n *= 2;
    auto cur = diag_value_and_slope(par, m, n, tau, grid_n);
    const double dv = std::abs(cur.first - prev.first);
    const double dd = std::abs(cur.second - prev.second);
    prev = cur;
    if (dv < kTol && dd < kTol * std::max(1.0, std::abs(cur.second))) return cur;
  }
  throw ConvergenceError("frak_P: seed quadrature did not converge");
}

// Radial Casimir equation in t = 2 tau for Y = e^{t/2} y:
//   Y'' = (1 - coth t) Y' + (coth t / 2 - 1/2 - lambda^2 + V(t)) Y,
//   V(t) = (m^2 + n^2 - 2 m n ch t) / sh^2 t.
using State = std::array<double, 4>;  // Re Y, Im Y, Re Y', Im Y'

struct RadialSystem {
  double lambda2, mm_nn, two_mn;

  void operator()(const State& s, State& ds, double t) const {
    const double em = std::expm1(2.0 * t);  // e^{2t} - 1
    const double one_minus_coth = -2.0 / em;
    const double half_coth_minus_half = 1.0 / em;
    const double sh = std::sinh(t);
    const double v = (mm_nn - two_mn * std::cosh(t)) / (sh * sh);
    const double c = half_coth_minus_half - lambda2 + v;
    ds[0] = s[2];
    ds[1] = s[3];
    ds[2] = one_minus_coth * s[2] + c * s[0];
    ds[3] = one_minus_coth * s[3] + c * s[1];
  }
};

}  // namespace

ThetaGrid::ThetaGrid(int n_) : n(n_) {
  if (n < 64 || !is_power_of_two(n))
    throw DomainError("ThetaGrid: size must be a power of two >= 64, got " + std::to_string(n));
  theta.resize(n);
  weights.assign(n, kPi / n);
  for (int k = 0; k < n; ++k) theta[k] = theta_node(k, n);
}

std::vector<double> ThetaGrid::x_nodes() const {
  std::vector<double> x(theta.size());
  std::transform(theta.begin(), theta.end(), x.begin(), [](double t) { return std::tan(t); });
  return x;
}

std::vector<double> ThetaGrid::x_weights() const {
  std::vector<double> w(theta.size());
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const double c = std::cos(theta[k]);
    w[k] = weights[k] / (c * c);
  }
  return w;
}

cplx basis_e(const PrincipalParam& p, int m, double x) {
  // ((x - i)/(x + i))^m = (-1)^m e^{2 i m arctan x}
  const double phase = 2.0 * m * std::atan(x);
  const double lr = std::log1p(x * x);
  const cplx l = p.l();
  return parity(m) / std::sqrt(kPi) * std::exp(cplx(l.real() * lr, phase + l.imag() * lr));
}

RealFunction transformed(const PrincipalParam& p, const GroupElement& g, RealFunction f) {
  const cplx l = p.l();
  return [g, l, f = std::move(f)](double x) -> cplx {
    const double den = g.beta() * x + g.delta();
    const double y = (g.alpha() * x + g.gamma()) / den;
    const double lr = std::log(den * den);
    return f(y) * std::exp(l * lr);
  };
}

SampledFunction act_T(const PrincipalParam& p, const GroupElement& g, const RealFunction& f,
                      const ThetaGrid& grid) {
  SampledFunction out;
  out.domain = SampledFunction::Domain::Real;
  out.x = grid.x_nodes();
  out.weights = grid.x_weights();
  out.values.resize(out.x.size());
  const RealFunction tf = transformed(p, g, f);
  for (std::size_t k = 0; k < out.x.size(); ++k) {
    double x = out.x[k];
    if (g.beta() * x + g.delta() == 0.0) x += 1e-9;
    out.values[k] = tf(x);
  }
  return out;
}

cplx coeff_t_on_grid(const PrincipalParam& p, int m, int n, const GroupElement& g,
                     const ThetaGrid& grid) {
  return coeff_on_n(kernel_of(p, g), m, n, grid.n);
}

CoeffValue coeff_t_estimate(const PrincipalParam& p, int m, int n, const GroupElement& g, int n0,
                            double tol) {
  if (n0 < 64 || !is_power_of_two(n0)) throw DomainError("coeff_t: bad initial grid size");
  const Kernel ker = kernel_of(p, g);
  int grid_n = n0;
  cplx prev = coeff_on_n(ker, m, n, grid_n);
  while (grid_n < kMaxGrid) {
    grid_n *= 2;
    const cplx cur = coeff_on_n(ker, m, n, grid_n);
    const double err = std::abs(cur - prev);
    if (err < tol) return {cur, err, grid_n};
    prev = cur;
  }
  throw ConvergenceError("coeff_t: grid doubling did not converge");
}

cplx coeff_t(const PrincipalParam& p, int m, int n, const GroupElement& g) {
  return coeff_t_estimate(p, m, n, g).value;
}

std::vector<cplx> coeff_row(const PrincipalParam& p, int m, const GroupElement& g, int nmax,
                            const ThetaGrid& grid) {
  if (nmax < 0) throw DomainError("coeff_row: negative index bound");
  if (4 * nmax > grid.n)
    throw DomainError("coeff_row: index bound " + std::to_string(nmax) +
                      " aliases on a grid of " + std::to_string(grid.n));
  // t_mn(g) = conj(t_nm(g^-1)): the sum over theta becomes a Fourier sum in n.
  const Kernel ker = kernel_of(p, inverse(g));
  std::vector<cplx> base(grid.n);      // conj of the g^-1 integrand at fixed row m
  std::vector<cplx> rot(grid.n);       // e^{2 i theta_k}
  for (int k = 0; k < grid.n; ++k) {
    base[k] = std::conj(ker(0, m, grid.theta[k]));
    rot[k] = std::polar(1.0, 2.0 * grid.theta[k]);
  }
  std::vector<cplx> row(2 * nmax + 1);
  std::vector<cplx> up(base), down(base);  // base * e^{+-2 i n theta}
  for (int n = 0; n <= nmax; ++n) {
    cplx su = 0.0, sd = 0.0;
    for (int k = 0; k < grid.n; ++k) {
      su += up[k];
      sd += down[k];
    }
    const double sign = parity(static_cast<long>(m) + n) / grid.n;
    row[nmax + n] = sign * su;
    row[nmax - n] = sign * sd;
    for (int k = 0; k < grid.n; ++k) {
      up[k] *= rot[k];
      down[k] *= std::conj(rot[k]);
    }
  }
  return row;
}

double frak_P_seed_tau(int m, int n) {
  const double size = std::max({std::abs(m), std::abs(n), 1});
  return 0.5 * std::clamp(std::log(4.0 * size) - 2.5, 1.0, 3.0);
}

std::vector<cplx> frak_P_many(const PrincipalParam& p, int m, int n, std::span<const double> u) {
  std::vector<cplx> out(u.size());
  const double tau_seed = frak_P_seed_tau(m, n);
  std::vector<std::pair<double, std::size_t>> far;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!(u[i] >= 1.0)) throw DomainError("frak_P: argument below 1");
    const double tau = 0.5 * std::acosh(u[i]);
    if (tau <= tau_seed)
      out[i] = coeff_t_estimate(p, m, n, GroupElement::diagonal(tau), 256).value;
    else
      far.emplace_back(2.0 * tau, i);
  }
  if (far.empty()) return out;
  std::sort(far.begin(), far.end());

  namespace ode = boost::numeric::odeint;
  const double t0 = 2.0 * tau_seed;
  const auto [y0, dy0_dtau] = diag_value_and_slope(p, m, n, tau_seed);
  const cplx dy0 = 0.5 * dy0_dtau;
  const double e = std::exp(0.5 * t0);
  const cplx big_y = e * y0, big_dy = e * (dy0 + 0.5 * y0);
  State s = {big_y.real(), big_y.imag(), big_dy.real(), big_dy.imag()};

  const RadialSystem sys{p.lambda * p.lambda, double(m) * m + double(n) * n, 2.0 * m * n};
  std::vector<double> times;
  times.reserve(far.size() + 1);
  times.push_back(t0);
  for (const auto& f : far) times.push_back(f.first);

  // integrate_times reports every entry of `times`; the first one is the seed.
  std::size_t calls = 0;
  auto observer = [&](const State& st, double t) {
    if (calls++ == 0) return;
    out[far[calls - 2].second] = std::exp(-0.5 * t) * cplx(st[0], st[1]);
  };
  auto stepper = ode::make_controlled(1e-13, 1e-12, ode::runge_kutta_fehlberg78<State>());
  try {
    ode::integrate_times(stepper, sys, s, times.begin(), times.end(), 0.01, observer,
                         ode::max_step_checker(200000));
  } catch (const std::exception& ex) {
    throw ConvergenceError(std::string("frak_P: radial continuation failed: ") + ex.what());
  }
  return out;
}

cplx frak_P(const PrincipalParam& p, int m, int n, double u) {
  const double arr[1] = {u};
  return frak_P_many(p, m, n, arr)[0];
}

}  // namespace sl2
