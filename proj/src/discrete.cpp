#include "sl2/discrete.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

double log_binom(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

// log c_j for psi_j = c_j z^j, c_j^2 = binom(k + j - 1, j)
double log_c(int k, int j) { return 0.5 * log_binom(k + j - 1.0, j); }

void check_indices(const DiscreteParam& d, int m, int n) {
  if (m <= d.l || n <= d.l)
    throw IndexError("discrete series index must exceed l = " + std::to_string(d.l) + " (got m=" +
                     std::to_string(m) + ", n=" + std::to_string(n) + ")");
}

void check_u(double u) {
  if (!(u >= 1.0)) throw DomainError("discrete series coefficient: argument below 1");
}

}  // namespace

DiscreteParam::DiscreteParam(int l_) : l(l_) {
  if (l < 0) throw DomainError("DiscreteParam: l must be nonnegative");
}

int calP_sign(int m, int n) { return (std::max(0, m - n) % 2 == 0) ? 1 : -1; }

std::vector<std::vector<int>> sign_matrix(const DiscreteParam& d, int size) {
  std::vector<std::vector<int>> s(size, std::vector<int>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) s[i][j] = calP_sign(d.l + 1 + i, d.l + 1 + j);
  return s;
}

double calP(const DiscreteParam& d, int m, int n, double u) {
  check_indices(d, m, n);
  check_u(u);
  if (u == 1.0) return m == n ? 1.0 : 0.0;
  const int k = 2 * d.l + 2;
  const int jm = m - d.l - 1, jn = n - d.l - 1;
  const double log_th = 0.5 * std::log((u - 1.0) / (u + 1.0));
  const double pref = log_c(k, jn) - log_c(k, jm) - 0.5 * k * std::log(0.5 * (u + 1.0));

  const int pmax = std::min(jm, jn);
  std::vector<double> lt(pmax + 1);
  for (int p = 0; p <= pmax; ++p)
    lt[p] = log_binom(jn, p) + log_binom(k + jn + jm - p - 1.0, jm - p) +
            (jn + jm - 2 * p) * log_th;
  const double top = *std::max_element(lt.begin(), lt.end());
  double sum = 0.0;
  for (int p = 0; p <= pmax; ++p) sum += (((jm - p) % 2 == 0) ? 1.0 : -1.0) * std::exp(lt[p] - top);
  return calP_sign(m, n) * sum * std::exp(pref + top);
}

double log_calP_lowest_row(const DiscreteParam& d, int n, double u) {
  check_indices(d, d.l + 1, n);
  if (!(u > 1.0)) throw DomainError("log_calP_lowest_row: argument must exceed 1");
  const int j = n - d.l - 1;
  const double t = (u - 1.0) / (u + 1.0);
  return log_c(2 * d.l + 2, j) + 0.5 * j * std::log(t) + (d.l + 1.0) * std::log1p(-t);
}

double calP_lowest_row(const DiscreteParam& d, int n, double u) {
  check_indices(d, d.l + 1, n);
  check_u(u);
  if (u == 1.0) return n == d.l + 1 ? 1.0 : 0.0;
  return std::exp(log_calP_lowest_row(d, n, u));
}

double frakP_factor(const DiscreteParam& d, int m, int n) {
  check_indices(d, m, n);
  const int l = d.l;
  return std::exp(0.5 * (std::lgamma(m - l + 0.0) + std::lgamma(n + l + 1.0) -
                         std::lgamma(m + l + 1.0) - std::lgamma(n - l + 0.0)));
}

double frakP_from_calP(const DiscreteParam& d, int m, int n, double u) {
  return frakP_factor(d, m, n) * calP(d, m, n, u);
}

DiscreteRealization::DiscreteRealization(DiscreteParam d, int circle_points)
    : d_(d), points_(circle_points) {
  if (points_ < 8) throw DomainError("DiscreteRealization: too few circle points");
}

std::pair<std::complex<double>, std::complex<double>> DiscreteRealization::su11(
    const GroupElement& g) {
  using C = std::complex<double>;
  const double a = g.alpha(), b = g.beta(), c = g.gamma(), dd = g.delta();
  return {C(0.5 * (a + dd), -0.5 * (b - c)), C(0.5 * (a - dd), 0.5 * (b + c))};
}

std::complex<double> DiscreteRealization::coeff(int m, int n, const GroupElement& g) const {
  using C = std::complex<double>;
  check_indices(d_, m, n);
  const int k = 2 * d_.l + 2;
  const int jm = m - d_.l - 1, jn = n - d_.l - 1;
  const auto [al, be] = su11(g);
  C s = 0.0;
  for (int q = 0; q < points_; ++q) {
    const double phi = 2.0 * std::numbers::pi * q / points_;
    const C z = std::polar(1.0, phi);
    const C den = be * z + std::conj(al);
    const C w = (al * z + std::conj(be)) / den;
    s += std::pow(den, -k) * std::pow(w, jn) * std::polar(1.0, -jm * phi);
  }
  s /= static_cast<double>(points_);
  return double(calP_sign(m, n)) * std::exp(log_c(k, jn) - log_c(k, jm)) * s;
}

}  // namespace sl2
