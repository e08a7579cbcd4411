#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace sl2 {

using cplx = std::complex<double>;
using RealFunction = std::function<cplx(double)>;

// Grid of abscissae with complex samples and quadrature weights.
struct SampledFunction {
  enum class Domain { Real, HalfLine, RealTimesZ };

  Domain domain = Domain::Real;
  std::vector<double> x;
  std::vector<cplx> values;
  std::vector<double> weights;  // may be empty when the samples are not integrated

  std::size_t size() const { return x.size(); }
  double norm2() const;                          // sqrt(sum w |f|^2)
  cplx inner(const SampledFunction& other) const;  // sum w f conj(other)
};

SampledFunction sample(const RealFunction& f, std::vector<double> x, std::vector<double> w,
                       SampledFunction::Domain domain = SampledFunction::Domain::Real);

}  // namespace sl2
