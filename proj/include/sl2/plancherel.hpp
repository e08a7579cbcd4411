#pragma once

#include <complex>
#include <span>
#include <vector>

#include "sl2/radial.hpp"
#include "sl2/sampled.hpp"

namespace sl2 {

// Spectral side of the generalized Mehler-Fock transform for (m, n):
// b(l), 0 <= l < min(m, n), and a(lambda) on a quadrature grid in lambda.
struct SpectralData {
  int m = 0, n = 0;
  std::vector<cplx> b;
  std::vector<double> lambda;
  std::vector<double> lambda_weights;
  std::vector<cplx> a;

  // sum (l + 1/2) |b(l)|^2 + int |a|^2 lambda tanh(pi lambda) dlambda
  double energy() const;
};

// Composite Gauss-Legendre nodes on [0, lambda_max]; nodes is rounded up to a
// multiple of the panel order.
struct LambdaGrid {
  static LambdaGrid make(double lambda_max, int nodes, int order = 16);

  std::vector<double> lambda;
  std::vector<double> w;
};

// Number of discrete terms, min(m, n) when both are positive, else 0.
int discrete_terms(int m, int n);

// g is sampled on a RadialGrid (x, weights dx). b(l) = int g calP^l_mn dx and
// a(lambda) = int g conj(frakP^{-1/2 + i lambda}_mn) dx.
// Warns when |g| exceeds 1e-8 at the last node.
SpectralData mf_analyze(const SampledFunction& g, int m, int n, const LambdaGrid& lambdas);

// g(x) = sum (l + 1/2) b(l) calP^l_mn(x) + int a(lambda) frakP_mn(x) lambda tanh(pi lambda) dlambda
SampledFunction mf_synthesize(const SpectralData& s, std::span<const double> x);

// Samples f on the radial grid as a HalfLine function.
SampledFunction sample_radial(const RealFunction& f, const RadialGrid& grid);

// ||a - b||_2 / ||b||_2 with the weights of b.
double relative_l2_error(const SampledFunction& a, const SampledFunction& b);

}  // namespace sl2
