#include <cmath>
#include <cstring>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "sl2/errors.hpp"
#include "sl2/principal.hpp"

using namespace sl2;

namespace {

const cplx I(0.0, 1.0);

GroupElement random_element(oracle::Rng& rng, double r = 1.5) {
  for (;;) {
    const double a = rng.uniform(-r, r), b = rng.uniform(-r, r), c = rng.uniform(-r, r),
                 d = rng.uniform(-r, r);
    if (a * d - b * c > 0.2) return {a, b, c, d};
  }
}

GroupElement rot(double phi) { return RotationElement(phi).matrix(); }

}  // namespace

TEST_SUITE("principal") {
  TEST_CASE("basis functions") {
    for (double lam : {0.0, 0.5, 3.0}) {
      const PrincipalParam p(lam);
      CHECK(std::abs(basis_e(p, 0, 0.0) - 1.0 / std::sqrt(std::numbers::pi)) < 1e-15);
      for (int m : {-3, 0, 2})
        for (double x : {-7.0, -0.3, 0.0, 1.0, 40.0})
          CHECK(std::abs(basis_e(p, m, x)) ==
                doctest::Approx(1.0 / std::sqrt(std::numbers::pi * (1 + x * x))).epsilon(1e-13));
    }
    CHECK(PrincipalParam(-0.7).lambda == 0.7);
  }

  TEST_CASE("basis functions have unit norm") {
    const ThetaGrid grid(1024);
    const auto x = grid.x_nodes();
    const auto w = grid.x_weights();
    for (int m : {-2, 0, 5}) {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::norm(basis_e(PrincipalParam(0.5), m, x[i]));
      CHECK(std::abs(s - 1.0) < 1e-10);
    }
  }

  TEST_CASE("action: identity, rotations, homomorphism") {
    const PrincipalParam p(0.5);
    const ThetaGrid grid(256);
    const auto xs = grid.x_nodes();
    for (int m : {-2, 1, 3}) {
      const RealFunction e = [&](double x) { return basis_e(p, m, x); };
      const auto same = act_T(p, GroupElement::identity(), e, grid);
      for (std::size_t i = 0; i < xs.size(); ++i) CHECK(std::abs(same.values[i] - e(xs[i])) < 1e-15);
      const double phi = 0.83;
      const auto turned = act_T(p, rot(phi), e, grid);
      double worst = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        worst = std::max(worst, std::abs(turned.values[i] - std::exp(2.0 * m * phi * I) * e(xs[i])));
      CHECK(worst < 1e-10);
    }
    oracle::Rng rng(42);
    const RealFunction f = [&](double x) { return basis_e(p, 2, x) + 0.5 * basis_e(p, -1, x); };
    for (int t = 0; t < 10; ++t) {
      const GroupElement g1 = random_element(rng), g2 = random_element(rng);
      const auto lhs = transformed(p, g1, transformed(p, g2, f));
      const auto rhs = act_T(p, g1 * g2, f, grid);
      double worst = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i)
        worst = std::max(worst, std::abs(lhs(xs[i]) - rhs.values[i]));
      CHECK(worst < 1e-9);
    }
  }

  TEST_CASE("coefficients at the identity and on K") {
    const PrincipalParam p(2.0);
    for (int m = -2; m <= 2; ++m)
      for (int n = -2; n <= 2; ++n) {
        CHECK(std::abs(coeff_t(p, m, n, GroupElement::identity()) - (m == n ? 1.0 : 0.0)) < 1e-12);
        const cplx expect = m == n ? std::exp(2.0 * m * 1.1 * I) : 0.0;
        CHECK(std::abs(coeff_t(p, m, n, rot(1.1)) - expect) < 1e-9);
      }
    const auto est = coeff_t_estimate(p, 1, 0, GroupElement::diagonal(0.4));
    CHECK(est.error < 1e-10);
    CHECK(est.grid_size >= 1024);
  }

  TEST_CASE("row sweep") {
    const PrincipalParam p(0.5);
    const ThetaGrid grid(4096);
    const auto unit = coeff_row(p, 1, GroupElement::identity(), 4, grid);
    REQUIRE(unit.size() == 9);
    for (int n = -4; n <= 4; ++n) CHECK(std::abs(unit[n + 4] - (n == 1 ? 1.0 : 0.0)) < 1e-12);

    const auto turned = coeff_row(p, -2, rot(0.3), 6, grid);
    for (int n = -6; n <= 6; ++n) {
      if (n == -2)
        CHECK(std::abs(turned[n + 6] - std::exp(-4.0 * 0.3 * I)) < 1e-12);
      else
        CHECK(std::abs(turned[n + 6]) < 1e-12);
    }

    oracle::Rng rng(42);
    for (int t = 0; t < 5; ++t) {
      const GroupElement g = random_element(rng);
      const int m = rng.integer(-3, 3);
      const auto row = coeff_row(p, m, g, 8, grid);
      for (int n = -8; n <= 8; ++n) CHECK(std::abs(row[n + 8] - coeff_t(p, m, n, g)) < 1e-9);
    }
    CHECK_THROWS_AS(coeff_row(p, 0, GroupElement::identity(), 65, ThetaGrid(256)), DomainError);
  }

  TEST_CASE("unitarity partial sums approach 1 from below") {
    const PrincipalParam p(0.5);
    const ThetaGrid grid(4096);
    const GroupElement g = GroupElement::diagonal(1.0);
    for (int n : {0, 2}) {
      // t_mn(g) = conj(t_nm(g^-1)), so one row sweep gives the whole column.
      const auto row = coeff_row(p, n, inverse(g), 40, grid);
      double prev = -1.0;
      for (int M : {5, 10, 20, 40}) {
        double s = 0.0;
        for (int m = -M; m <= M; ++m) s += std::norm(row[m + 40]);
        CHECK(s > prev);
        CHECK(s <= 1.0 + 1e-12);
        prev = s;
      }
      CHECK(prev >= 0.99);
    }
  }

  TEST_CASE("radiality") {
    oracle::Rng rng(42);
    const PrincipalParam p(0.8);
    for (int t = 0; t < 12; ++t) {
      const GroupElement g = random_element(rng);
      const double f1 = rng.uniform(0, std::numbers::pi), f2 = rng.uniform(0, std::numbers::pi);
      const int m = rng.integer(-3, 3), n = rng.integer(-3, 3);
      const cplx lhs = coeff_t(p, m, n, rot(f1) * g * rot(f2));
      const cplx rhs = std::exp(2.0 * m * f1 * I) * coeff_t(p, m, n, g) * std::exp(2.0 * n * f2 * I);
      CHECK(std::abs(lhs - rhs) < 1e-9);
    }
  }

  TEST_CASE("adjoint") {
    oracle::Rng rng(42);
    const PrincipalParam p(1.3);
    for (int t = 0; t < 12; ++t) {
      const GroupElement g = random_element(rng);
      const int m = rng.integer(-3, 3), n = rng.integer(-3, 3);
      CHECK(std::abs(coeff_t(p, m, n, inverse(g)) - std::conj(coeff_t(p, n, m, g))) < 1e-9);
    }
  }

  TEST_CASE("radial part at u = 1 and its symmetry") {
    const PrincipalParam p(0.5);
    CHECK(std::abs(frak_P(p, 2, 2, 1.0) - 1.0) < 1e-12);
    CHECK(std::abs(frak_P(p, 2, 1, 1.0)) < 1e-12);
    CHECK(std::abs(frak_P(p, 2, 1, 3.0) - frak_P(p, -2, -1, 3.0)) < 1e-9);
    for (double u : {1.5, 10.0, 1e3, 1e5})
      CHECK(std::abs(frak_P(p, 3, -1, u) - frak_P(p, -3, 1, u)) < 1e-9);
    CHECK_THROWS_AS(frak_P(p, 0, 0, 0.99), DomainError);
  }

  TEST_CASE("radial part agrees with the diagonal coefficient") {
    const PrincipalParam p(0.5);
    CHECK(std::abs(frak_P(p, 2, 1, std::cosh(2.0)) - coeff_t(p, 2, 1, GroupElement::diagonal(1.0))) < 1e-10);
  }

  TEST_CASE("conical function from Laplace's integral") {
    for (double lam : {0.0, 1.0, 2.5}) {
      const PrincipalParam p(lam);
      for (double tau : {0.1, 0.6, 1.5, 3.0}) {
        const cplx ref = oracle::conical_laplace(lam, 2 * tau);
        CHECK(std::abs(frak_P(p, 0, 0, std::cosh(2 * tau)) - ref) < 1e-9);
      }
    }
  }

  TEST_CASE("first derivative at u = 1") {
    const double h = 1e-4;
    for (double lam : {0.5, 1.5}) {
      const PrincipalParam p(lam);
      const cplx l = p.l();
      for (int m : {0, 1, 3}) {
        auto D = [&](double step) { return (frak_P(p, m, m, 1.0 + step) - 1.0) / step; };
        const cplx d = 2.0 * D(h) - D(2 * h);
        CHECK(std::abs(d - (l * (l + 1.0) - double(m * m)) / 2.0) < 1e-6);
      }
    }
  }

  TEST_CASE("oscillatory decay of the zonal coefficient") {
    // e^tau frakP_00(ch 2 tau) ~ A cos(2 tau + eta): fit A on three windows.
    const PrincipalParam p(1.0);
    std::vector<double> amps;
    for (double start : {5.0, 8.0, 12.0}) {
      double scc = 0, sss = 0, scs = 0, syc = 0, sys = 0;
      for (int i = 0; i <= 60; ++i) {
        const double tau = start + 3.0 * i / 60;
        const double y = std::exp(tau) * frak_P(p, 0, 0, std::cosh(2 * tau)).real();
        const double c = std::cos(2 * tau), s = std::sin(2 * tau);
        scc += c * c, sss += s * s, scs += c * s, syc += y * c, sys += y * s;
      }
      const double det = scc * sss - scs * scs;
      const double a = (syc * sss - sys * scs) / det, b = (sys * scc - syc * scs) / det;
      amps.push_back(std::hypot(a, b));
    }
    for (double a : amps) {
      CHECK(std::isfinite(a));
      CHECK(a == doctest::Approx(amps.back()).epsilon(0.2));
    }
  }

  TEST_CASE("repeated calls are bitwise identical") {
    const PrincipalParam p(0.7);
    const std::vector<double> us{1.0, 2.0, 50.0, 1e4};
    const auto a = frak_P_many(p, 2, -1, us);
    const auto b = frak_P_many(p, 2, -1, us);
    CHECK(std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0);
    const ThetaGrid grid(1024);
    const cplx c1 = coeff_t_on_grid(p, 1, 2, GroupElement(1.2, 0.3, -0.4, 0.7333333333333333), grid);
    const cplx c2 = coeff_t_on_grid(p, 1, 2, GroupElement(1.2, 0.3, -0.4, 0.7333333333333333), grid);
    CHECK(std::memcmp(&c1, &c2, sizeof c1) == 0);
    for (std::size_t i = 0; i < us.size(); ++i) CHECK(std::abs(a[i] - frak_P(p, 2, -1, us[i])) < 1e-11);
  }

  TEST_CASE("seed switch point") {
    CHECK(frak_P_seed_tau(0, 0) == doctest::Approx(0.5));
    CHECK(frak_P_seed_tau(1000, 0) == doctest::Approx(1.5));
  }
}
