#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace sl2::quad {

using cplx = std::complex<double>;

// Nodes and weights of a quadrature rule.
struct Rule {
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const { return x.size(); }
  void append(const Rule& other);
};

// n-point Gauss-Legendre rule on [-1, 1] (Newton on the three-term recurrence).
const Rule& gauss_legendre(int n);

// Composite Gauss-Legendre rule with `order` nodes on each [edges[i], edges[i+1]].
Rule composite(std::span<const double> edges, int order);

// Panel edges growing geometrically from `lo` to `hi` (lo > 0) with the given ratio.
std::vector<double> geometric_edges(double lo, double hi, double ratio);
std::vector<double> uniform_edges(double lo, double hi, int panels);

struct Estimate {
  cplx value;
  double error = 0.0;
};

// Globally adaptive Gauss-Kronrod (7/15) integration of a complex integrand.
// Throws ConvergenceError when the interval budget is exhausted.
Estimate adaptive(const std::function<cplx(double)>& f, double a, double b, double abs_tol,
                  double rel_tol = 0.0, int max_intervals = 4000);

// Sum of f(x_i) w_i.
cplx apply(const Rule& rule, const std::function<cplx(double)>& f);

}  // namespace sl2::quad
