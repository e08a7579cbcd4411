#pragma once

#include <vector>

namespace sl2 {

// Quadrature on [1, inf) in x = ch(2 tau), truncated at tau_max:
// dx = 2 sh(2 tau) dtau with composite Gauss-Legendre panels in tau.
struct RadialGrid {
  static RadialGrid make(double tau_max, int panels, int order = 16);

  double tau_max = 0.0;
  std::vector<double> tau;
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const { return x.size(); }
};

}  // namespace sl2
