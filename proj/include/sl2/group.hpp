#pragma once

#include <utility>

namespace sl2 {

// Element of SL(2,R), stored as the matrix [[alpha, beta], [gamma, delta]].
// Equality is the PSL(2,R) one: g and -g compare equal.
class GroupElement {
 public:
  GroupElement() = default;
  // Renormalizes by sqrt(det) when the determinant has drifted from 1.
  // Throws DomainError when det <= 0.
  GroupElement(double alpha, double beta, double gamma, double delta);

  static GroupElement identity() { return {}; }
  static GroupElement diagonal(double tau);  // diag(e^tau, e^-tau)

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  double gamma() const { return gamma_; }
  double delta() const { return delta_; }
  double det() const { return alpha_ * delta_ - beta_ * gamma_; }

  // Representative with the first nonzero entry positive.
  GroupElement sign_normalized() const;

  double distance(const GroupElement& other) const;  // max-entry, PSL sense

  friend bool operator==(const GroupElement& a, const GroupElement& b);

 private:
  double alpha_ = 1.0, beta_ = 0.0, gamma_ = 0.0, delta_ = 1.0;
};

GroupElement operator*(const GroupElement& a, const GroupElement& b);
GroupElement inverse(const GroupElement& g);
GroupElement compose(const GroupElement& a, const GroupElement& b);

// k_phi = [[cos, -sin], [sin, cos]], phi taken modulo pi.
class RotationElement {
 public:
  RotationElement() = default;
  explicit RotationElement(double phi);

  double phi() const { return phi_; }  // in [0, pi)
  GroupElement matrix() const;

 private:
  double phi_ = 0.0;
};

// [[a, 0], [b, 1/a]] with a > 0.
class HElement {
 public:
  HElement() = default;
  HElement(double a, double b);

  double a() const { return a_; }
  double b() const { return b_; }
  GroupElement matrix() const;

 private:
  double a_ = 1.0, b_ = 0.0;
};

// g = k_phi * h  (G = KH).
std::pair<RotationElement, HElement> iwasawa_kh(const GroupElement& g);

}  // namespace sl2
