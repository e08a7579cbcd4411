#pragma once

#include <complex>
#include <vector>

#include "sl2/group.hpp"

namespace sl2 {

// Discrete series T_l, l >= 0, with elliptic basis indexed by m > l.
struct DiscreteParam {
  DiscreteParam() = default;
  explicit DiscreteParam(int l);

  int l = 0;
};

// Sign applied to the raw realization coefficient of (m, n):
// (-1)^max(0, m - n). Makes every entry positive near u = 1.
int calP_sign(int m, int n);

// Rows m = l+1..l+size, columns likewise, of calP_sign.
std::vector<std::vector<int>> sign_matrix(const DiscreteParam& d, int size);

// Unitary coefficient calP^l_mn(u) at diag(e^tau, e^-tau), u = ch 2 tau.
// Finite sum, evaluated term by term in log space.
// Throws IndexError unless m, n > l; DomainError if u < 1.
double calP(const DiscreteParam& d, int m, int n, double u);

// calP^l_{l+1, n}(u) = c_j T^{j/2} (1 - T)^{l+1}, T = (u-1)/(u+1), j = n-l-1,
// c_j^2 = binom(2l+1+j, j). Safe for large l.
double calP_lowest_row(const DiscreteParam& d, int n, double u);
double log_calP_lowest_row(const DiscreteParam& d, int n, double u);  // u > 1

// sqrt((m-l-1)! (n+l)! / ((m+l)! (n-l-1)!))
double frakP_factor(const DiscreteParam& d, int m, int n);
double frakP_from_calP(const DiscreteParam& d, int m, int n, double u);

// T_l on holomorphic functions on the unit disc with orthonormal basis
// psi_j = c_j z^j (m = l + 1 + j), acting by
//   (T(g) f)(z) = (beta z + conj(alpha))^{-2l-2} f((alpha z + conj(beta)) / (beta z + conj(alpha))),
// where g is carried to SU(1,1) by the Cayley transform. Coefficients come
// from Taylor coefficients by an N-point rule on the unit circle.
class DiscreteRealization {
 public:
  explicit DiscreteRealization(DiscreteParam d, int circle_points = 512);

  // (T(g) psi_n | psi_m), sign convention of calP_sign included.
  std::complex<double> coeff(int m, int n, const GroupElement& g) const;

  // SU(1,1) image of g.
  static std::pair<std::complex<double>, std::complex<double>> su11(const GroupElement& g);

 private:
  DiscreteParam d_;
  int points_;
};

}  // namespace sl2
