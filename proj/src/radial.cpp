#include "sl2/radial.hpp"

#include <cmath>

#include "sl2/errors.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

RadialGrid RadialGrid::make(double tau_max, int panels, int order) {
  if (!(tau_max > 0) || panels < 1) throw DomainError("RadialGrid: bad truncation");
  const auto rule = quad::composite(quad::uniform_edges(0.0, tau_max, panels), order);
  RadialGrid g;
  g.tau_max = tau_max;
  g.tau = rule.x;
  g.x.resize(rule.size());
  g.w.resize(rule.size());
  for (std::size_t i = 0; i < rule.size(); ++i) {
    g.x[i] = std::cosh(2.0 * rule.x[i]);
    g.w[i] = 2.0 * std::sinh(2.0 * rule.x[i]) * rule.w[i];
  }
  return g;
}

}  // namespace sl2
