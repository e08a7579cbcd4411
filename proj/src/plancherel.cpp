#include "sl2/plancherel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sl2/discrete.hpp"
#include "sl2/errors.hpp"
#include "sl2/principal.hpp"
#include "sl2/quadrature.hpp"

namespace sl2 {

namespace {

double plancherel_density(double lam) { return lam * std::tanh(std::numbers::pi * lam); }

}  // namespace

double SpectralData::energy() const {
  double e = 0.0;
  for (std::size_t l = 0; l < b.size(); ++l) e += (l + 0.5) * std::norm(b[l]);
  for (std::size_t i = 0; i < a.size(); ++i)
    e += lambda_weights[i] * plancherel_density(lambda[i]) * std::norm(a[i]);
  return e;
}

LambdaGrid LambdaGrid::make(double lambda_max, int nodes, int order) {
  if (!(lambda_max > 0) || nodes < 1) throw DomainError("LambdaGrid: bad parameters");
  const int panels = (nodes + order - 1) / order;
  const auto rule = quad::composite(quad::uniform_edges(0.0, lambda_max, panels), order);
  return {rule.x, rule.w};
}

int discrete_terms(int m, int n) { return (m > 0 && n > 0) ? std::min(m, n) : 0; }

SampledFunction sample_radial(const RealFunction& f, const RadialGrid& grid) {
  return sample(f, grid.x, grid.w, SampledFunction::Domain::HalfLine);
}

SpectralData mf_analyze(const SampledFunction& g, int m, int n, const LambdaGrid& lambdas) {
  if (g.weights.size() != g.x.size()) throw DomainError("mf_analyze: samples need weights");
  if (!g.values.empty() && std::abs(g.values.back()) > 1e-8)
    warn("mf_analyze: |g| = " + std::to_string(std::abs(g.values.back())) +
         " at the truncation point x = " + std::to_string(g.x.back()));
  SpectralData s;
  s.m = m;
  s.n = n;
  s.lambda = lambdas.lambda;
  s.lambda_weights = lambdas.w;

  const int terms = discrete_terms(m, n);
  s.b.assign(terms, 0.0);
  for (int l = 0; l < terms; ++l) {
    const DiscreteParam d(l);
    for (std::size_t i = 0; i < g.size(); ++i)
      s.b[l] += g.weights[i] * g.values[i] * calP(d, m, n, g.x[i]);
  }

  s.a.assign(s.lambda.size(), 0.0);
  for (std::size_t k = 0; k < s.lambda.size(); ++k) {
    const auto p = frak_P_many(PrincipalParam(s.lambda[k]), m, n, g.x);
    cplx acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) acc += g.weights[i] * g.values[i] * std::conj(p[i]);
    s.a[k] = acc;
  }
  return s;
}

SampledFunction mf_synthesize(const SpectralData& s, std::span<const double> x) {
  SampledFunction out;
  out.domain = SampledFunction::Domain::HalfLine;
  out.x.assign(x.begin(), x.end());
  out.values.assign(x.size(), 0.0);
  for (std::size_t l = 0; l < s.b.size(); ++l) {
    if (s.b[l] == 0.0) continue;
    const DiscreteParam d(static_cast<int>(l));
    for (std::size_t i = 0; i < x.size(); ++i)
      out.values[i] += (l + 0.5) * s.b[l] * calP(d, s.m, s.n, x[i]);
  }
  for (std::size_t k = 0; k < s.lambda.size(); ++k) {
    if (s.a[k] == 0.0) continue;
    const cplx c = s.a[k] * s.lambda_weights[k] * plancherel_density(s.lambda[k]);
    const auto p = frak_P_many(PrincipalParam(s.lambda[k]), s.m, s.n, x);
    for (std::size_t i = 0; i < x.size(); ++i) out.values[i] += c * p[i];
  }
  return out;
}

double relative_l2_error(const SampledFunction& a, const SampledFunction& b) {
  if (a.size() != b.size() || b.weights.size() != b.size())
    throw DomainError("relative_l2_error: incompatible samples");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    num += b.weights[i] * std::norm(a.values[i] - b.values[i]);
    den += b.weights[i] * std::norm(b.values[i]);
  }
  return den > 0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace sl2
