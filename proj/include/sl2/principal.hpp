#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sl2/group.hpp"
#include "sl2/sampled.hpp"

namespace sl2 {

// Principal series T_l, l = -1/2 + i lambda. Negative lambda is replaced by
// |lambda| (the two give equivalent representations).
struct PrincipalParam {
  PrincipalParam() = default;
  explicit PrincipalParam(double lam) : lambda(lam < 0 ? -lam : lam) {}

  cplx l() const { return {-0.5, lambda}; }

  double lambda = 0.0;
};

// Midpoint rule in theta on (-pi/2, pi/2) for the substitution x = tan(theta).
struct ThetaGrid {
  explicit ThetaGrid(int n = 1024);  // n a power of two >= 64

  int n;
  std::vector<double> theta;
  std::vector<double> weights;  // all equal to pi / n

  std::vector<double> x_nodes() const;
  std::vector<double> x_weights() const;  // dx = sec^2(theta) dtheta
};

// e^l_m(x) = pi^{-1/2} ((x - i)/(x + i))^m (1 + x^2)^l
cplx basis_e(const PrincipalParam& p, int m, double x);

// x -> (T_l(g) f)(x) = f((alpha x + gamma)/(beta x + delta)) |beta x + delta|^{2l}
RealFunction transformed(const PrincipalParam& p, const GroupElement& g, RealFunction f);

// Samples T_l(g) f on the grid image x = tan(theta). A node with
// beta x + delta == 0 is moved by 1e-9.
SampledFunction act_T(const PrincipalParam& p, const GroupElement& g, const RealFunction& f,
                      const ThetaGrid& grid);

struct CoeffValue {
  cplx value;
  double error = 0.0;  // difference between the last two grid levels
  int grid_size = 0;
};

// t^l_mn(g) = (T_l(g) e_n | e_m), computed in theta on a fixed grid.
cplx coeff_t_on_grid(const PrincipalParam& p, int m, int n, const GroupElement& g,
                     const ThetaGrid& grid);

// Same, doubling the grid from `n0` until two levels differ by less than `tol`.
CoeffValue coeff_t_estimate(const PrincipalParam& p, int m, int n, const GroupElement& g,
                            int n0 = 1024, double tol = 1e-10);
cplx coeff_t(const PrincipalParam& p, int m, int n, const GroupElement& g);

// t^l_{m n}(g) for n = -nmax..nmax from one sweep over the grid (a discrete
// Fourier sum). Throws DomainError if nmax exceeds grid.n / 4.
std::vector<cplx> coeff_row(const PrincipalParam& p, int m, const GroupElement& g, int nmax,
                            const ThetaGrid& grid);

// Frak-P^l_mn(u) = t^l_mn(diag(e^tau, e^-tau)), u = cosh(2 tau) >= 1.
// Small tau: theta quadrature. Larger tau: continuation along tau of the
// radial Casimir equation, seeded by the quadrature value and derivative.
cplx frak_P(const PrincipalParam& p, int m, int n, double u);
std::vector<cplx> frak_P_many(const PrincipalParam& p, int m, int n, std::span<const double> u);

// tau below which frak_P uses the quadrature directly.
double frak_P_seed_tau(int m, int n);

}  // namespace sl2
