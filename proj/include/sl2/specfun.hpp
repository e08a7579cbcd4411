#pragma once

#include <complex>
#include <span>
#include <vector>

namespace sl2 {

using cplx = std::complex<double>;

// log Gamma(z), continued analytically from the positive real axis along
// horizontal lines. Throws DomainError at nonpositive integers.
cplx log_gamma(cplx z);
cplx gamma(cplx z);

// Arguments of the Whittaker function W_{kappa,mu}(z).
struct WhittakerQuery {
  cplx kappa;
  cplx mu;
  double z = 1.0;  // > 0
};

struct WhittakerOptions {
  double quad_tol = 1e-11;  // absolute, integral representation
  double ode_tol = 1e-13;   // relative, ODE continuation
};

// Euler-type integral representation; valid for Re(mu - kappa + 1/2) > 0.
// Throws DomainError outside that half-plane or for z <= 0.
cplx whittaker_w_integral(const WhittakerQuery& q, const WhittakerOptions& opt = {});

// W_{kappa,mu}(z) for any complex kappa, mu and z > 0, by inward integration of
// the Whittaker equation from an asymptotic-series seed.
// Throws ConvergenceError if the step control fails.
cplx whittaker_w(const WhittakerQuery& q, const WhittakerOptions& opt = {});

// Same continuation for many abscissae at once (one ODE sweep). Any order of zs.
std::vector<cplx> whittaker_w_many(cplx kappa, cplx mu, std::span<const double> zs,
                                   const WhittakerOptions& opt = {});

// Start of the inward sweep: max(40, 10 (|kappa| + |mu|)^2).
double whittaker_seed_point(cplx kappa, cplx mu);

// log((n)!) for n >= 0.
double log_factorial(long n);

}  // namespace sl2
