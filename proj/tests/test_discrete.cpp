#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "sl2/discrete.hpp"
#include "sl2/errors.hpp"
#include "sl2/radial.hpp"

using namespace sl2;

namespace {

double overlap(int l, int lp, int m, int n, const RadialGrid& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < g.size(); ++i)
    s += g.w[i] * calP(DiscreteParam(l), m, n, g.x[i]) * calP(DiscreteParam(lp), m, n, g.x[i]);
  return s;
}

}  // namespace

TEST_SUITE("discrete") {
  TEST_CASE("lowest diagonal entry") {
    CHECK(calP(DiscreteParam(0), 1, 1, 3.0) == doctest::Approx(0.5).epsilon(1e-15));
    for (int l : {0, 1, 2, 7})
      for (double u : {1.0, 1.7, 30.0})
        CHECK(calP(DiscreteParam(l), l + 1, l + 1, u) == doctest::Approx(std::pow(2 / (u + 1), l + 1)).epsilon(1e-13));
  }

  TEST_CASE("identity element gives the unit matrix") {
    for (int l : {0, 3})
      for (int m = l + 1; m <= l + 5; ++m)
        for (int n = l + 1; n <= l + 5; ++n) CHECK(calP(DiscreteParam(l), m, n, 1.0) == (m == n ? 1.0 : 0.0));
  }

  TEST_CASE("anchor on a 50-point grid") {
    for (int l : {0, 1, 2, 5}) {
      for (int i = 0; i < 50; ++i) {
        const double u = 1.0 + std::expm1(0.2 * i);
        CHECK(std::abs(calP(DiscreteParam(l), l + 1, l + 1, u) - std::pow(2 / (u + 1), l + 1)) < 1e-8);
      }
    }
  }

  TEST_CASE("lowest row closed form") {
    for (int l : {0, 2}) {
      for (int n = l + 1; n <= l + 6; ++n) {
        for (double u : {1.2, 4.0, 100.0}) {
          const double v = calP(DiscreteParam(l), l + 1, n, u);
          CHECK(calP_lowest_row(DiscreteParam(l), n, u) == doctest::Approx(v).epsilon(1e-12));
          CHECK(log_calP_lowest_row(DiscreteParam(l), n, u) == doctest::Approx(std::log(std::abs(v))).epsilon(1e-12));
        }
      }
    }
    // large l stays finite
    const double big = log_calP_lowest_row(DiscreteParam(400), 801, 3.0);
    CHECK(std::isfinite(big));
  }

  TEST_CASE("square of the lowest entry integrates to 2") {
    const auto g = RadialGrid::make(14.0, 56);
    CHECK(overlap(0, 0, 1, 1, g) == doctest::Approx(2.0).epsilon(1e-9));
  }

  TEST_CASE("orthogonality") {
    const auto g = RadialGrid::make(14.0, 56);
    const std::pair<int, int> mns[] = {{2, 2}, {3, 2}, {4, 4}, {3, 3}};
    for (auto [m, n] : mns) {
      const int top = std::min(m, n);
      for (int l = 0; l < top; ++l)
        for (int lp = 0; lp < top; ++lp) {
          const double expect = l == lp ? 1.0 / (l + 0.5) : 0.0;
          CHECK(std::abs(overlap(l, lp, m, n, g) - expect) < 1e-6);
        }
    }
  }

  TEST_CASE("positivity near u = 1 and the sign matrix") {
    for (int l : {0, 1, 4})
      for (int m = l + 1; m <= l + 6; ++m)
        for (int n = l + 1; n <= l + 6; ++n) CHECK(calP(DiscreteParam(l), m, n, 1.0 + 1e-4) > 0.0);
    const auto s = sign_matrix(DiscreteParam(1), 3);
    CHECK(s[0][0] == 1);
    CHECK(s[1][0] == -1);
    CHECK(s[2][0] == 1);
    CHECK(s[0][2] == 1);
    CHECK(calP_sign(5, 2) == -1);
  }

  TEST_CASE("factorial factor") {
    CHECK(frakP_factor(DiscreteParam(0), 2, 1) == doctest::Approx(1 / std::sqrt(2.0)).epsilon(1e-15));
    for (int l : {0, 3, 9}) CHECK(frakP_factor(DiscreteParam(l), l + 1, l + 1) == doctest::Approx(1.0).epsilon(1e-14));
    for (int l = 0; l <= 5; ++l)
      for (int m = l + 1; m <= 20; ++m)
        for (int n = l + 1; n <= 20; ++n) {
          const double direct = std::sqrt(oracle::factorial_ratio(n + l, n - l - 1) / oracle::factorial_ratio(m + l, m - l - 1));
          CHECK(frakP_factor(DiscreteParam(l), m, n) == doctest::Approx(direct).epsilon(1e-12));
        }
    CHECK(frakP_from_calP(DiscreteParam(0), 2, 1, 3.0) ==
          doctest::Approx(calP(DiscreteParam(0), 2, 1, 3.0) / std::sqrt(2.0)).epsilon(1e-14));
  }

  TEST_CASE("realization: K-type") {
    const DiscreteRealization r{DiscreteParam(1)};
    const double phi = 0.61;
    const GroupElement k = RotationElement(phi).matrix();
    for (int m = 2; m <= 6; ++m)
      for (int n = 2; n <= 6; ++n) {
        const std::complex<double> expect = m == n ? std::exp(std::complex<double>(0, 2.0 * m * phi)) : 0.0;
        CHECK(std::abs(r.coeff(m, n, k) - expect) < 1e-10);
      }
  }

  TEST_CASE("realization matches the finite sum") {
    for (int l : {0, 1, 3}) {
      const DiscreteRealization r{DiscreteParam(l)};
      for (double tau : {0.05, 0.5, 1.2})
        for (int m = l + 1; m <= l + 5; ++m)
          for (int n = l + 1; n <= l + 5; ++n) {
            const auto c = r.coeff(m, n, GroupElement::diagonal(tau));
            CHECK(std::abs(c - calP(DiscreteParam(l), m, n, std::cosh(2 * tau))) < 1e-10);
          }
    }
  }

  TEST_CASE("unitarity of columns") {
    for (int l : {0, 2}) {
      const DiscreteParam d(l);
      for (double u : {1.5, 3.0}) {
        double s = 0.0, prev = 0.0;
        for (int m = l + 1; m <= l + 80; ++m) {
          s += calP(d, m, l + 2, u) * calP(d, m, l + 2, u);
          CHECK(s <= 1.0 + 1e-12);
          CHECK(s >= prev);
          prev = s;
        }
        CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("index and domain errors") {
    CHECK_THROWS_AS(calP(DiscreteParam(2), 2, 3, 1.5), IndexError);
    CHECK_THROWS_AS(calP(DiscreteParam(2), 3, 1, 1.5), IndexError);
    CHECK_THROWS_AS(calP(DiscreteParam(0), 1, 1, 0.5), DomainError);
    CHECK_THROWS_AS(DiscreteParam(-1), DomainError);
    CHECK_THROWS_AS(frakP_factor(DiscreteParam(1), 1, 3), IndexError);
  }
}
