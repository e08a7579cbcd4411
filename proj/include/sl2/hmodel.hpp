#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "sl2/group.hpp"
#include "sl2/sampled.hpp"

namespace sl2 {

// g_{j,lambda}(y, j'), zero for j' != j. Throws DomainError at y = 0.
cplx g_vector(int j, double lambda, double y, int jprime);
cplx g_vector(int j, double lambda, double y);
std::vector<cplx> g_vector_many(int j, double lambda, std::span<const double> y);

// Signed quadrature grid on R \ {0}: geometric Gauss-Legendre panels for
// y_min <= |y| <= 1, unit panels from 1 to y_max, mirrored to y < 0.
struct YGrid {
  static YGrid make(double y_min = 1e-9, double y_max = 60.0, double ratio = 2.0, int order = 16);

  std::vector<double> y;
  std::vector<double> w;
};

// Samples of g_{j,lambda}(., j) on the grid.
SampledFunction whittaker_vector(int j, double lambda, const YGrid& grid);

struct HalfNorms {
  double minus = 0.0;  // ||g restricted to y < 0||
  double plus = 0.0;
  double total() const;
};
HalfNorms g_half_norms(int j, double lambda, const YGrid& grid);

// Fourier transform (2 pi)^{-1/2} int e^{-ixy} e^l_m(x) dx. The two half-lines
// are rotated by pi/4 into the half-plane where e^{-ixy} decays.
cplx fourier_basis(double lambda, int m, double y);

// sup over y of |fourier_basis - g_{m,lambda}(y, m) |y|^{-i lambda}|.
double ft_basis_identity(double lambda, int m, std::span<const double> y);

// (pi_0(h) eta)(y) = a^{-1} e^{i y b / a} eta(y / a^2), evaluated on the grid of eta.
RealFunction pi0(const HElement& h, RealFunction eta);
SampledFunction pi0_apply(const HElement& h, const RealFunction& eta, const YGrid& grid);

// Tensor grid in H, a-major.
struct HGrid {
  std::vector<double> a;
  std::vector<double> b;

  std::size_t size() const { return a.size() * b.size(); }
  HElement at(std::size_t k) const { return {a[k / b.size()], b[k % b.size()]}; }
  static HGrid standard(int na = 5, int nb = 5);  // a = e^{-1..1}, b in [-1, 1]
};

struct Eq3Point {
  HElement h;
  cplx whittaker_side;
  cplx coefficient_side;
  double error = 0.0;
};

// (pi_0(h) g_{j'} | g_j) against t^l_{j j'}(h) on every grid point.
std::vector<Eq3Point> eq3_table(double lambda, int j, int jprime, const HGrid& h_grid,
                                const YGrid& y_grid = YGrid::make());
double verify_eq3(double lambda, int j, int jprime, const HGrid& h_grid);

// ||g_j^-|| ||g_j'^-|| + ||g_j^+|| ||g_j'^+||
double ah_norm_coeff(double lambda, int j, int jprime, const YGrid& grid = YGrid::make());

// Phi(f) = (f_mn), m, n even with |m|, |n| <= 2M, each entry sampled on an H-grid.
class CoefficientMatrix {
 public:
  CoefficientMatrix() = default;
  CoefficientMatrix(int M, HGrid h_grid);

  int M() const { return M_; }
  const HGrid& h_grid() const { return h_; }
  bool contains(int m, int n) const;
  std::vector<cplx>& at(int m, int n);
  const std::vector<cplx>& at(int m, int n) const;
  double sup(int m, int n) const;  // sup over the H-grid

  // (m, n) with sup above tol, row-major in m then n.
  std::vector<std::pair<int, int>> support(double tol) const;

 private:
  std::size_t index(int m, int n) const;

  int M_ = 0;
  HGrid h_;
  std::vector<std::vector<cplx>> entries_;
};

using GroupFunction = std::function<cplx(const GroupElement&)>;

// f_mn(h) = (1/pi^2) int int e^{i n phi1} e^{i m phi2} f(k_{-phi1} h k_{-phi2}) dphi1 dphi2
// by the trapezoid rule with k_points nodes per factor (0 picks 4M + 8).
// With this convention t^l_{j j'} lands in entry (m, n) = (2 j', 2 j).
CoefficientMatrix phi_matrix(const GroupFunction& f, int M, const HGrid& h_grid, int k_points = 0);

// new(m, n) = Phi(m - k, n - l), zero outside the stored range. k, l even.
CoefficientMatrix theta_shift(const CoefficientMatrix& phi, int k, int l);

// max over |k|, |l| <= 2M', h in the grid of the spectral norm of
// (Phi_{m-k, n-l}(h))_{|m|,|n| <= 2M'}.
double theta_norm_surrogate(const CoefficientMatrix& phi, int M_trunc);

// Phi of f - lambda with lambda = lim f_00 at infinity in H, estimated at
// h = (a_far, 0).
struct Phi1 {
  CoefficientMatrix phi;
  cplx lambda;
};
Phi1 phi1_matrix(const GroupFunction& f, int M, const HGrid& h_grid, double a_far = 1e4,
                 int k_points = 0);

struct Prop7Row {
  int m = 0;
  double tau = 0.0;
  double D = 0.0;
  double D_times_m2 = 0.0;
};

struct Prop7Report {
  std::vector<Prop7Row> rows;
  std::vector<int> m_values;
  std::vector<double> sup_D;  // per m
  double sup_D_m2 = 0.0;
  double lower_half_deviation = 0.0;  // D from frakP_{-m,-n} vs D from frakP_{m,n}
};

// D(tau, m) = |frakP_mn(ch tau) - (-1)^{n-m} W_{n, i lambda}(4m e^{-tau}) / (m^{l+1} Gamma(n-l))| e^{tau/2}
Prop7Report verify_prop7(double lambda, int n, std::span<const double> tau_grid,
                         const std::vector<int>& m_values);

}  // namespace sl2
