#include "sl2/sampled.hpp"

#include <cmath>
#include <stdexcept>

namespace sl2 {

double SampledFunction::norm2() const {
  double s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i) s += weights[i] * std::norm(values[i]);
  return std::sqrt(s);
}

cplx SampledFunction::inner(const SampledFunction& other) const {
  if (other.size() != size()) throw std::invalid_argument("inner: grid size mismatch");
  cplx s = 0.0;
  for (std::size_t i = 0; i < values.size(); ++i)
    s += weights[i] * values[i] * std::conj(other.values[i]);
  return s;
}

SampledFunction sample(const RealFunction& f, std::vector<double> x, std::vector<double> w,
                       SampledFunction::Domain domain) {
  SampledFunction out;
  out.domain = domain;
  out.values.reserve(x.size());
  for (double xi : x) out.values.push_back(f(xi));
  out.x = std::move(x);
  out.weights = std::move(w);
  return out;
}

}  // namespace sl2
