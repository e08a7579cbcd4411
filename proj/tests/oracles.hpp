#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace oracle {

using cplx = std::complex<double>;

// Deterministic uniform draws for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 42) : gen_(seed) {}
  double uniform(double a, double b) { return a + (b - a) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53); }
  int integer(int a, int b) { return a + static_cast<int>(gen_() % static_cast<std::uint64_t>(b - a + 1)); }

 private:
  std::mt19937_64 gen_;
};

// log Gamma from the Weierstrass product, N terms plus the leading tail terms.
inline cplx log_gamma_product(cplx z, long N = 1000000) {
  constexpr double euler_gamma = 0.57721566490153286061;
  std::complex<long double> s = 0.0L;
  const std::complex<long double> zl(z.real(), z.imag());
  for (long k = 1; k <= N; ++k) s += zl / (long double)k - std::log(1.0L + zl / (long double)k);
  const double n = static_cast<double>(N);
  const cplx tail = z * z / 2.0 * (1.0 / n - 0.5 / (n * n)) - z * z * z / (6.0 * n * n);
  return cplx(s.real(), s.imag()) + tail - euler_gamma * z - std::log(z);
}

// Conical function P_{-1/2 + i lambda}(ch eta) from Laplace's integral
// (1/pi) int_0^pi (ch eta + sh eta cos phi)^nu dphi, composite Simpson.
inline cplx conical_laplace(double lambda, double eta, int panels = 20000) {
  const cplx nu(-0.5, lambda);
  const double h = std::numbers::pi / panels;
  auto f = [&](double phi) { return std::exp(nu * std::log(std::cosh(eta) + std::sinh(eta) * std::cos(phi))); };
  cplx s = f(0.0) + f(std::numbers::pi);
  for (int i = 1; i < panels; ++i) s += (i % 2 ? 4.0 : 2.0) * f(i * h);
  return s * h / 3.0 / std::numbers::pi;
}

// m! / n! as a direct product (m >= n).
inline double factorial_ratio(int m, int n) {
  double r = 1.0;
  for (int k = n + 1; k <= m; ++k) r *= k;
  return r;
}

}  // namespace oracle
