#include "sl2/hmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sl2/errors.hpp"
#include "sl2/principal.hpp"
#include "sl2/quadrature.hpp"
#include "sl2/specfun.hpp"

namespace sl2 {

namespace {

constexpr double kPi = std::numbers::pi;

double parity(long k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// (-1)^j 2^{i lambda} / Gamma(+-j - l)
cplx g_prefactor(int j, double lambda, int sign) {
  const cplx l(-0.5, lambda);
  return parity(j) * std::exp(cplx(0.0, lambda * std::log(2.0)) - log_gamma(double(sign * j) - l));
}

}  // namespace

// ---------------------------------------------------------------------------
// Whittaker vectors

std::vector<cplx> g_vector_many(int j, double lambda, std::span<const double> y) {
  std::vector<double> zp, zm;
  std::vector<std::size_t> ip, im;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] > 0) {
      zp.push_back(2.0 * y[i]);
      ip.push_back(i);
    } else if (y[i] < 0) {
      zm.push_back(-2.0 * y[i]);
      im.push_back(i);
    } else {
      throw DomainError("g_vector: singular at y = 0");
    }
  }
  std::vector<cplx> out(y.size());
  const cplx mu(0.0, lambda);
  if (!zp.empty()) {
    const auto w = whittaker_w_many(double(j), mu, zp);
    const cplx c = g_prefactor(j, lambda, +1);
    for (std::size_t k = 0; k < ip.size(); ++k) out[ip[k]] = c * w[k] / std::sqrt(0.5 * zp[k]);
  }
  if (!zm.empty()) {
    const auto w = whittaker_w_many(double(-j), mu, zm);
    const cplx c = g_prefactor(j, lambda, -1);
    for (std::size_t k = 0; k < im.size(); ++k) out[im[k]] = c * w[k] / std::sqrt(0.5 * zm[k]);
  }
  return out;
}

cplx g_vector(int j, double lambda, double y) {
  const double arr[1] = {y};
  return g_vector_many(j, lambda, arr)[0];
}

cplx g_vector(int j, double lambda, double y, int jprime) {
  if (y == 0.0) throw DomainError("g_vector: singular at y = 0");
  return jprime == j ? g_vector(j, lambda, y) : cplx(0.0);
}

YGrid YGrid::make(double y_min, double y_max, double ratio, int order) {
  if (!(y_min > 0) || !(y_max > 1.0) || !(ratio > 1.0)) throw DomainError("YGrid: bad parameters");
  auto edges = quad::geometric_edges(y_min, 1.0, ratio);
  const auto far = quad::uniform_edges(1.0, y_max, static_cast<int>(std::ceil(y_max - 1.0)));
  edges.insert(edges.end(), far.begin() + 1, far.end());
  const auto half = quad::composite(edges, order);
  YGrid g;
  const std::size_t n = half.size();
  g.y.resize(2 * n);
  g.w.resize(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g.y[n - 1 - i] = -half.x[i];
    g.w[n - 1 - i] = half.w[i];
    g.y[n + i] = half.x[i];
    g.w[n + i] = half.w[i];
  }
  return g;
}

SampledFunction whittaker_vector(int j, double lambda, const YGrid& grid) {
  SampledFunction s;
  s.domain = SampledFunction::Domain::RealTimesZ;
  s.x = grid.y;
  s.weights = grid.w;
  s.values = g_vector_many(j, lambda, grid.y);
  return s;
}

double HalfNorms::total() const { return std::sqrt(minus * minus + plus * plus); }

HalfNorms g_half_norms(int j, double lambda, const YGrid& grid) {
  const auto v = g_vector_many(j, lambda, grid.y);
  double sm = 0.0, sp = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) (grid.y[i] < 0 ? sm : sp) += grid.w[i] * std::norm(v[i]);
  return {std::sqrt(sm), std::sqrt(sp)};
}

// ---------------------------------------------------------------------------
// Fourier transform of the basis

cplx fourier_basis(double lambda, int m, double y) {
  if (y == 0.0) throw DomainError("fourier_basis: y = 0 excluded");
  const cplx l(-0.5, lambda);
  const double sg = y > 0 ? 1.0 : -1.0;
  const cplx w_right = std::polar(1.0, -sg * kPi / 4), w_left = std::polar(1.0, sg * kPi / 4);
  auto e_m = [&](cplx x) {
    const cplx ratio = (x - cplx(0, 1)) / (x + cplx(0, 1));
    return std::pow(ratio, m) * std::exp(l * std::log(1.0 + x * x)) / std::sqrt(kPi);
  };
  auto right = [&](double r) {
    const cplx x = r * w_right;
    return e_m(x) * std::exp(cplx(0, -1) * x * y) * w_right;
  };
  auto left = [&](double r) {
    const cplx x = -r * w_left;
    return e_m(x) * std::exp(cplx(0, -1) * x * y) * w_left;
  };
  // |e^{-ixy}| = e^{-r |y| / sqrt 2} on both rays.
  const double r_max = 45.0 * std::sqrt(2.0) / std::abs(y);
  std::vector<double> edges{0.0};
  double e = std::min(1.0, r_max);
  while (true) {
    edges.push_back(e);
    if (e >= r_max) break;
    e = std::min(r_max, 2.0 * e);
  }
  cplx s = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    s += quad::adaptive(right, edges[i], edges[i + 1], 1e-14, 1e-13).value;
    s += quad::adaptive(left, edges[i], edges[i + 1], 1e-14, 1e-13).value;
  }
  return s / std::sqrt(2.0 * kPi);
}

double ft_basis_identity(double lambda, int m, std::span<const double> y) {
  double worst = 0.0;
  for (double yi : y) {
    const cplx lhs = fourier_basis(lambda, m, yi);
    const cplx rhs = g_vector(m, lambda, yi) * std::exp(cplx(0.0, -lambda * std::log(std::abs(yi))));
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// pi_0 and the identity between Whittaker vectors and coefficients

RealFunction pi0(const HElement& h, RealFunction eta) {
  const double a = h.a(), b = h.b();
  return [a, b, eta = std::move(eta)](double y) {
    return std::exp(cplx(0.0, y * b / a)) * eta(y / (a * a)) / a;
  };
}

SampledFunction pi0_apply(const HElement& h, const RealFunction& eta, const YGrid& grid) {
  return sample(pi0(h, eta), grid.y, grid.w, SampledFunction::Domain::Real);
}

HGrid HGrid::standard(int na, int nb) {
  HGrid g;
  for (int i = 0; i < na; ++i) g.a.push_back(std::exp(na == 1 ? 0.0 : -1.0 + 2.0 * i / (na - 1)));
  for (int i = 0; i < nb; ++i) g.b.push_back(nb == 1 ? 0.0 : -1.0 + 2.0 * i / (nb - 1));
  return g;
}

std::vector<Eq3Point> eq3_table(double lambda, int j, int jprime, const HGrid& h_grid,
                                const YGrid& y_grid) {
  const PrincipalParam par(lambda);
  const auto gj = g_vector_many(j, lambda, y_grid.y);
  std::vector<Eq3Point> out;
  std::vector<double> ys(y_grid.y.size());
  for (double a : h_grid.a) {
    for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = y_grid.y[i] / (a * a);
    const auto gjp = g_vector_many(jprime, lambda, ys);
    for (double b : h_grid.b) {
      const HElement h(a, b);
      cplx s = 0.0;
      for (std::size_t i = 0; i < ys.size(); ++i)
        s += y_grid.w[i] * std::exp(cplx(0.0, y_grid.y[i] * b / a)) * gjp[i] * std::conj(gj[i]);
      s /= a;
      const cplx t = coeff_t(par, j, jprime, h.matrix());
      out.push_back({h, s, t, std::abs(s - t)});
    }
  }
  return out;
}

double verify_eq3(double lambda, int j, int jprime, const HGrid& h_grid) {
  double worst = 0.0;
  for (const auto& p : eq3_table(lambda, j, jprime, h_grid)) worst = std::max(worst, p.error);
  return worst;
}

double ah_norm_coeff(double lambda, int j, int jprime, const YGrid& grid) {
  const HalfNorms a = g_half_norms(j, lambda, grid);
  const HalfNorms b = jprime == j ? a : g_half_norms(jprime, lambda, grid);
  return a.minus * b.minus + a.plus * b.plus;
}

// ---------------------------------------------------------------------------
// Phi(f) and theta_f

CoefficientMatrix::CoefficientMatrix(int M, HGrid h_grid) : M_(M), h_(std::move(h_grid)) {
  if (M < 0) throw DomainError("CoefficientMatrix: negative truncation");
  const std::size_t side = 2 * M_ + 1;
  entries_.assign(side * side, std::vector<cplx>(h_.size(), 0.0));
}

bool CoefficientMatrix::contains(int m, int n) const {
  return m % 2 == 0 && n % 2 == 0 && std::abs(m) <= 2 * M_ && std::abs(n) <= 2 * M_;
}

std::size_t CoefficientMatrix::index(int m, int n) const {
  if (!contains(m, n))
    throw IndexError("CoefficientMatrix: no entry (" + std::to_string(m) + ", " + std::to_string(n) + ")");
  return static_cast<std::size_t>(m / 2 + M_) * (2 * M_ + 1) + static_cast<std::size_t>(n / 2 + M_);
}

std::vector<cplx>& CoefficientMatrix::at(int m, int n) { return entries_[index(m, n)]; }
const std::vector<cplx>& CoefficientMatrix::at(int m, int n) const { return entries_[index(m, n)]; }

double CoefficientMatrix::sup(int m, int n) const {
  double s = 0.0;
  for (const cplx& v : at(m, n)) s = std::max(s, std::abs(v));
  return s;
}

std::vector<std::pair<int, int>> CoefficientMatrix::support(double tol) const {
  std::vector<std::pair<int, int>> out;
  for (int m = -2 * M_; m <= 2 * M_; m += 2)
    for (int n = -2 * M_; n <= 2 * M_; n += 2)
      if (sup(m, n) > tol) out.emplace_back(m, n);
  return out;
}

CoefficientMatrix phi_matrix(const GroupFunction& f, int M, const HGrid& h_grid, int k_points) {
  CoefficientMatrix out(M, h_grid);
  const int N = k_points > 0 ? k_points : 4 * M + 8;
  if (N < 2 * M + 1) throw DomainError("phi_matrix: too few K nodes for the truncation");
  std::vector<GroupElement> k(N);
  std::vector<double> phi(N);
  for (int p = 0; p < N; ++p) {
    phi[p] = kPi * p / N;
    k[p] = RotationElement(-phi[p]).matrix();
  }
  const int side = 2 * M + 1;
  std::vector<cplx> F(N * N), G(N * side);
  for (std::size_t ih = 0; ih < h_grid.size(); ++ih) {
    const GroupElement h = h_grid.at(ih).matrix();
    for (int p = 0; p < N; ++p) {
      const GroupElement kh = k[p] * h;
      for (int q = 0; q < N; ++q) F[p * N + q] = f(kh * k[q]);
    }
    // G[p][m] = sum_q e^{i m phi_q} F[p][q]
    for (int p = 0; p < N; ++p)
      for (int im = 0; im < side; ++im) {
        const int m = 2 * (im - M);
        cplx s = 0.0;
        for (int q = 0; q < N; ++q) s += std::polar(1.0, m * phi[q]) * F[p * N + q];
        G[p * side + im] = s;
      }
    for (int im = 0; im < side; ++im)
      for (int in = 0; in < side; ++in) {
        const int m = 2 * (im - M), n = 2 * (in - M);
        cplx s = 0.0;
        for (int p = 0; p < N; ++p) s += std::polar(1.0, n * phi[p]) * G[p * side + im];
        out.at(m, n)[ih] = s / (double(N) * N);
      }
  }
  return out;
}

CoefficientMatrix theta_shift(const CoefficientMatrix& phi, int k, int l) {
  if (k % 2 != 0 || l % 2 != 0) throw DomainError("theta_shift: shifts must be even");
  CoefficientMatrix out(phi.M(), phi.h_grid());
  const int top = 2 * phi.M();
  for (int m = -top; m <= top; m += 2)
    for (int n = -top; n <= top; n += 2)
      if (phi.contains(m - k, n - l)) out.at(m, n) = phi.at(m - k, n - l);
  return out;
}

namespace {

double spectral_norm(const std::vector<cplx>& A, int rows, int cols) {
  std::vector<cplx> v(cols), w(rows), u(cols);
  for (int i = 0; i < cols; ++i) v[i] = 1.0 + 0.1 * i;
  double sigma = 0.0;
  for (int it = 0; it < 500; ++it) {
    double nv = 0.0;
    for (const cplx& x : v) nv += std::norm(x);
    nv = std::sqrt(nv);
    if (nv == 0.0) return 0.0;
    for (cplx& x : v) x /= nv;
    for (int r = 0; r < rows; ++r) {
      cplx s = 0.0;
      for (int c = 0; c < cols; ++c) s += A[r * cols + c] * v[c];
      w[r] = s;
    }
    for (int c = 0; c < cols; ++c) {
      cplx s = 0.0;
      for (int r = 0; r < rows; ++r) s += std::conj(A[r * cols + c]) * w[r];
      u[c] = s;
    }
    double nw = 0.0;
    for (const cplx& x : w) nw += std::norm(x);
    const double next = std::sqrt(nw);
    v.swap(u);
    if (std::abs(next - sigma) <= 1e-14 * next) return next;
    sigma = next;
  }
  return sigma;
}

}  // namespace

double theta_norm_surrogate(const CoefficientMatrix& phi, int M_trunc) {
  if (M_trunc < 0) throw DomainError("theta_norm_surrogate: negative truncation");
  const int side = 2 * M_trunc + 1;
  std::vector<cplx> A(side * side);
  double best = 0.0;
  for (int k = -2 * M_trunc; k <= 2 * M_trunc; k += 2)
    for (int l = -2 * M_trunc; l <= 2 * M_trunc; l += 2)
      for (std::size_t ih = 0; ih < phi.h_grid().size(); ++ih) {
        for (int im = 0; im < side; ++im)
          for (int in = 0; in < side; ++in) {
            const int m = 2 * (im - M_trunc) - k, n = 2 * (in - M_trunc) - l;
            A[im * side + in] = phi.contains(m, n) ? phi.at(m, n)[ih] : cplx(0.0);
          }
        best = std::max(best, spectral_norm(A, side, side));
      }
  return best;
}

Phi1 phi1_matrix(const GroupFunction& f, int M, const HGrid& h_grid, double a_far, int k_points) {
  const HGrid far{{a_far}, {0.0}};
  const cplx lambda = phi_matrix(f, 0, far, k_points).at(0, 0)[0];
  warn("phi1_matrix: lambda at infinity estimated as (" + std::to_string(lambda.real()) + ", " +
       std::to_string(lambda.imag()) + ")");
  auto f0 = [&f, lambda](const GroupElement& g) { return f(g) - lambda; };
  return {phi_matrix(f0, M, h_grid, k_points), lambda};
}

// ---------------------------------------------------------------------------
// Approximation of coefficients by Whittaker functions

Prop7Report verify_prop7(double lambda, int n, std::span<const double> tau_grid,
                         const std::vector<int>& m_values) {
  const PrincipalParam par(lambda);
  const cplx l = par.l();
  const cplx mu(0.0, lambda);
  const cplx inv_gamma = std::exp(-log_gamma(double(n) - l));
  std::vector<double> u(tau_grid.size()), z(tau_grid.size());
  for (std::size_t i = 0; i < tau_grid.size(); ++i) {
    if (tau_grid[i] < 0) throw DomainError("verify_prop7: tau must be nonnegative");
    u[i] = std::cosh(tau_grid[i]);
  }
  Prop7Report rep;
  for (int m : m_values) {
    if (m <= 0 || m < n) throw DomainError("verify_prop7: need m > 0 and m >= n");
    for (std::size_t i = 0; i < tau_grid.size(); ++i) z[i] = 4.0 * m * std::exp(-tau_grid[i]);
    const auto p = frak_P_many(par, m, n, u);
    const auto p_low = frak_P_many(par, -m, -n, u);
    const auto w = whittaker_w_many(double(n), mu, z);
    const cplx c = parity(static_cast<long>(n) - m) * inv_gamma *
                   std::exp(-(l + 1.0) * std::log(double(m)));
    double sup = 0.0;
    for (std::size_t i = 0; i < tau_grid.size(); ++i) {
      const double scale = std::exp(0.5 * tau_grid[i]);
      const double d = std::abs(p[i] - c * w[i]) * scale;
      const double d_low = std::abs(p_low[i] - c * w[i]) * scale;
      rep.lower_half_deviation = std::max(rep.lower_half_deviation, std::abs(d - d_low));
      const double dm2 = d * double(m) * m;
      rep.rows.push_back({m, tau_grid[i], d, dm2});
      sup = std::max(sup, d);
      rep.sup_D_m2 = std::max(rep.sup_D_m2, dm2);
    }
    rep.m_values.push_back(m);
    rep.sup_D.push_back(sup);
  }
  return rep;
}

}  // namespace sl2
