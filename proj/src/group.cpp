#include "sl2/group.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sl2/errors.hpp"

namespace sl2 {

namespace {

constexpr double kDetDrift = 1e-13;

double reduce_mod_pi(double phi) {
  double r = std::fmod(phi, std::numbers::pi);
  if (r < 0) r += std::numbers::pi;
  if (r >= std::numbers::pi) r -= std::numbers::pi;
  return r;
}

}  // namespace

GroupElement::GroupElement(double alpha, double beta, double gamma, double delta)
    : alpha_(alpha), beta_(beta), gamma_(gamma), delta_(delta) {
  const double d = det();
  if (!(d > 0)) throw DomainError("GroupElement: determinant must be positive");
  if (std::abs(d - 1.0) > kDetDrift) {
    const double s = 1.0 / std::sqrt(d);
    alpha_ *= s;
    beta_ *= s;
    gamma_ *= s;
    delta_ *= s;
  }
}

GroupElement GroupElement::diagonal(double tau) {
  return {std::exp(tau), 0.0, 0.0, std::exp(-tau)};
}

GroupElement GroupElement::sign_normalized() const {
  const double first = alpha_ != 0 ? alpha_ : (beta_ != 0 ? beta_ : gamma_);
  if (first < 0) return {-alpha_, -beta_, -gamma_, -delta_};
  return *this;
}

double GroupElement::distance(const GroupElement& other) const {
  auto d = [](const GroupElement& a, const GroupElement& b, double s) {
    return std::max({std::abs(a.alpha_ - s * b.alpha_), std::abs(a.beta_ - s * b.beta_),
                     std::abs(a.gamma_ - s * b.gamma_), std::abs(a.delta_ - s * b.delta_)});
  };
  return std::min(d(*this, other, 1.0), d(*this, other, -1.0));
}

bool operator==(const GroupElement& a, const GroupElement& b) {
  const GroupElement x = a.sign_normalized();
  const GroupElement y = b.sign_normalized();
  return x.alpha_ == y.alpha_ && x.beta_ == y.beta_ && x.gamma_ == y.gamma_ &&
         x.delta_ == y.delta_;
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  return {a.alpha() * b.alpha() + a.beta() * b.gamma(), a.alpha() * b.beta() + a.beta() * b.delta(),
          a.gamma() * b.alpha() + a.delta() * b.gamma(), a.gamma() * b.beta() + a.delta() * b.delta()};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) { return a * b; }

GroupElement inverse(const GroupElement& g) {
  return {g.delta(), -g.beta(), -g.gamma(), g.alpha()};
}

RotationElement::RotationElement(double phi) : phi_(reduce_mod_pi(phi)) {}

GroupElement RotationElement::matrix() const {
  const double c = std::cos(phi_), s = std::sin(phi_);
  return {c, -s, s, c};
}

HElement::HElement(double a, double b) : a_(a), b_(b) {
  if (!(a > 0)) throw DomainError("HElement: a must be strictly positive");
}

GroupElement HElement::matrix() const { return {a_, 0.0, b_, 1.0 / a_}; }

std::pair<RotationElement, HElement> iwasawa_kh(const GroupElement& g) {
  // k_phi h = [[c a - s b, -s/a], [s a + c b, c/a]]
  const double phi = std::atan2(-g.beta(), g.delta());
  const double c = std::cos(phi), s = std::sin(phi);
  const double a = 1.0 / std::hypot(g.beta(), g.delta());
  const double b = -s * g.alpha() + c * g.gamma();
  return {RotationElement(phi), HElement(a, b)};
}

}  // namespace sl2
