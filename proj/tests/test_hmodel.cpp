#include <cmath>
#include <vector>

#include "doctest.h"
#include "sl2/errors.hpp"
#include "sl2/hmodel.hpp"
#include "sl2/principal.hpp"

using namespace sl2;

namespace {

double frob(const GroupElement& g) {
  return g.alpha() * g.alpha() + g.beta() * g.beta() + g.gamma() * g.gamma() + g.delta() * g.delta();
}

HGrid small_grid() { return {{std::exp(-0.5), std::exp(0.7)}, {-0.6, 0.4}}; }

}  // namespace

TEST_SUITE("hmodel") {
  TEST_CASE("Whittaker vectors") {
    CHECK(g_vector(1, 0.5, 0.7, 2) == 0.0);
    CHECK(g_vector(1, 0.5, 0.7, 1) == g_vector(1, 0.5, 0.7));
    CHECK_THROWS_AS(g_vector(0, 0.5, 0.0), DomainError);
    CHECK_THROWS_AS(g_vector(0, 0.5, 0.0, 3), DomainError);
    const cplx a = g_vector(0, 0.3, 1.0), b = g_vector(0, 0.3, -1.0);
    CHECK(std::isfinite(std::abs(a)));
    CHECK(std::isfinite(std::abs(b)));
    // j = 0 treats both half-lines alike
    CHECK(std::abs(a) == doctest::Approx(std::abs(b)).epsilon(1e-12));
    const std::vector<double> ys{-2.0, 0.5, 3.0};
    const auto many = g_vector_many(2, 0.3, ys);
    for (std::size_t i = 0; i < ys.size(); ++i) CHECK(std::abs(many[i] - g_vector(2, 0.3, ys[i])) < 1e-14);
  }

  TEST_CASE("Whittaker vectors have unit norm") {
    const YGrid grid = YGrid::make();
    const std::pair<int, double> cases[] = {{0, 0.5}, {1, 1.0}, {2, 0.3}, {-1, 0.8}};
    for (auto [j, lam] : cases) {
      const HalfNorms h = g_half_norms(j, lam, grid);
      CHECK(std::abs(h.total() - 1.0) < 2e-3);
      CHECK(whittaker_vector(j, lam, grid).norm2() == doctest::Approx(h.total()).epsilon(1e-12));
    }
    CHECK_THROWS_AS(YGrid::make(0.0), DomainError);
  }

  TEST_CASE("Fourier transform of the elliptic basis") {
    const std::vector<double> ys{-2.0, -1.0, -0.5, 0.5, 1.0, 2.0};
    for (int m : {-1, 0, 1, 2}) CHECK(ft_basis_identity(0.5, m, ys) < 1e-4);
    for (double y : {0.4, 1.7}) {
      CHECK(std::abs(fourier_basis(0.5, -2, y) - fourier_basis(0.5, 2, -y)) < 1e-10);
      CHECK(std::abs(fourier_basis(0.0, 0, y)) == doctest::Approx(std::abs(fourier_basis(0.0, 0, -y))).epsilon(1e-10));
    }
    CHECK_THROWS_AS(fourier_basis(0.5, 0, 0.0), DomainError);
  }

  TEST_CASE("pi_0: identity, unitarity, half-lines") {
    const YGrid grid = YGrid::make();
    const RealFunction eta = [](double y) { return cplx(y * std::exp(-y * y), 0.3 * y * y * std::exp(-y * y)); };
    const auto same = pi0_apply(HElement(1.0, 0.0), eta, grid);
    for (std::size_t i = 0; i < grid.y.size(); ++i) CHECK(same.values[i] == eta(grid.y[i]));
    const auto stretched = pi0_apply(HElement(2.0, 0.0), eta, grid);
    const auto base = sample(eta, grid.y, grid.w);
    CHECK(std::abs(stretched.norm2() - base.norm2()) < 1e-10);
    const auto moved = pi0_apply(HElement(0.7, 1.3), eta, grid);
    CHECK(std::abs(moved.norm2() - base.norm2()) < 1e-10);

    const RealFunction right = [](double y) { return y > 0 ? cplx(std::exp(-y)) : cplx(0.0); };
    const auto r = pi0_apply(HElement(1.6, -2.0), right, grid);
    for (std::size_t i = 0; i < grid.y.size(); ++i)
      if (grid.y[i] < 0) CHECK(r.values[i] == 0.0);
  }

  TEST_CASE("Whittaker side against coefficients") {
    const HGrid id{{1.0}, {0.0}};
    for (auto [j, jp] : {std::pair{0, 0}, std::pair{1, 0}, std::pair{2, 2}}) {
      const auto t = eq3_table(0.5, j, jp, id);
      REQUIRE(t.size() == 1);
      CHECK(std::abs(t[0].whittaker_side - (j == jp ? 1.0 : 0.0)) < 1e-6);
    }
    CHECK(eq3_table(0.5, 0, 0, HGrid{{std::exp(1.0)}, {0.0}})[0].error < 1e-5);
    CHECK(eq3_table(1.0, 1, 0, HGrid{{1.0}, {1.0}})[0].error < 1e-5);
    CHECK(verify_eq3(0.3, 2, 1, small_grid()) < 1e-5);
    const auto hg = HGrid::standard();
    CHECK(hg.size() == 25);
    CHECK(hg.at(7).a() == doctest::Approx(std::exp(-0.5)));
    CHECK(hg.at(7).b() == doctest::Approx(0.0));
  }

  TEST_CASE("A(H) norm of single coefficients") {
    const YGrid grid = YGrid::make();
    for (int j : {0, 1}) CHECK(std::abs(ah_norm_coeff(0.5, j, j, grid) - 1.0) < 3e-3);
    for (auto [j, jp] : {std::pair{0, 1}, std::pair{2, -1}, std::pair{1, 3}})
      CHECK(ah_norm_coeff(0.7, j, jp, grid) <= 1.0 + 3e-3);
    const double coarse = ah_norm_coeff(0.5, 0, 1, grid);
    const double fine = ah_norm_coeff(0.5, 0, 1, YGrid::make(1e-10, 60.0, 1.5, 32));
    CHECK(coarse > 0.0);
    CHECK(std::abs(coarse - fine) < 1e-4);
  }

  TEST_CASE("Phi of the constant function") {
    const HGrid hg = small_grid();
    const auto phi = phi_matrix([](const GroupElement&) { return cplx(1.0); }, 2, hg);
    const auto supp = phi.support(1e-12);
    REQUIRE(supp.size() == 1);
    CHECK(supp[0] == std::pair{0, 0});
    for (const auto& v : phi.at(0, 0)) CHECK(std::abs(v - 1.0) < 1e-14);
    CHECK(phi.contains(-4, 2));
    CHECK_FALSE(phi.contains(1, 0));
    CHECK_FALSE(phi.contains(6, 0));
    CHECK_THROWS_AS(phi.at(6, 0), IndexError);
  }

  TEST_CASE("Phi of a coefficient is a single transposed entry") {
    const HGrid hg = small_grid();
    struct Case {
      double lambda;
      int j, jp, k_points;
    };
    for (const Case& c : {Case{0.5, 1, 0, 0}, Case{1.5, 1, 0, 0}, Case{0.5, 1, 0, 24}, Case{0.5, -1, 2, 0}}) {
      const PrincipalParam p(c.lambda);
      const GroupFunction f = [&](const GroupElement& g) { return coeff_t(p, c.j, c.jp, g); };
      const auto phi = phi_matrix(f, 2, hg, c.k_points);
      const auto supp = phi.support(1e-6);
      REQUIRE(supp.size() == 1);
      CHECK(supp[0] == std::pair{2 * c.jp, 2 * c.j});
      for (std::size_t k = 0; k < hg.size(); ++k)
        CHECK(std::abs(phi.at(2 * c.jp, 2 * c.j)[k] - f(hg.at(k).matrix())) < 1e-6);
    }
  }

  TEST_CASE("Phi is linear") {
    const HGrid hg = small_grid();
    const GroupFunction f1 = [](const GroupElement& g) { return cplx(std::exp(-frob(g))); };
    const GroupFunction f2 = [](const GroupElement& g) { return cplx(g.alpha() * g.delta(), g.beta() * g.gamma()); };
    const auto a = phi_matrix(f1, 2, hg);
    const auto b = phi_matrix(f2, 2, hg);
    const auto c = phi_matrix([&](const GroupElement& g) { return f1(g) - 2.5 * f2(g); }, 2, hg);
    for (int m = -4; m <= 4; m += 2)
      for (int n = -4; n <= 4; n += 2)
        for (std::size_t k = 0; k < hg.size(); ++k)
          CHECK(std::abs(c.at(m, n)[k] - (a.at(m, n)[k] - 2.5 * b.at(m, n)[k])) < 1e-9);
  }

  TEST_CASE("index shifts") {
    const HGrid hg{{1.0}, {0.0}};
    CoefficientMatrix one(3, hg);
    one.at(2, 0)[0] = 7.0;
    const auto moved = theta_shift(one, 2, 0);
    CHECK(moved.at(4, 0)[0] == 7.0);
    CHECK(moved.support(0.0).size() == 1);

    CoefficientMatrix full(2, hg);
    for (int m = -4; m <= 4; m += 2)
      for (int n = -4; n <= 4; n += 2) full.at(m, n)[0] = cplx(m, n + 0.5);
    const auto same = theta_shift(full, 0, 0);
    const auto back = theta_shift(theta_shift(full, 2, -2), -2, 2);
    for (int m = -4; m <= 4; m += 2)
      for (int n = -4; n <= 4; n += 2) {
        CHECK(same.at(m, n)[0] == full.at(m, n)[0]);
        if (m < 4 && n > -4) CHECK(back.at(m, n)[0] == full.at(m, n)[0]);
        else CHECK(back.at(m, n)[0] == 0.0);
      }
    CHECK_THROWS_AS(theta_shift(full, 1, 0), DomainError);
  }

  TEST_CASE("truncated theta norm is monotone") {
    const HGrid hg = small_grid();
    const auto phi = phi_matrix([](const GroupElement& g) { return cplx(std::exp(-0.3 * frob(g)), 0.1 * g.alpha() * g.delta()); }, 3, hg);
    double prev = 0.0;
    for (int M = 0; M <= 3; ++M) {
      const double v = theta_norm_surrogate(phi, M);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
    CHECK(prev > 0.0);
  }

  TEST_CASE("Phi of f minus its value at infinity") {
    set_warnings_enabled(false);
    const GroupFunction f = [](const GroupElement& g) { return cplx(3.0 + std::exp(-frob(g))); };
    const HGrid hg = small_grid();
    const Phi1 r = phi1_matrix(f, 1, hg);
    set_warnings_enabled(true);
    CHECK(std::abs(r.lambda - 3.0) < 1e-12);
    const auto phi = phi_matrix(f, 1, hg);
    for (std::size_t k = 0; k < hg.size(); ++k) {
      CHECK(std::abs(r.phi.at(0, 0)[k] - (phi.at(0, 0)[k] - 3.0)) < 1e-12);
      CHECK(std::abs(r.phi.at(2, 0)[k] - phi.at(2, 0)[k]) < 1e-12);
    }
  }

  TEST_CASE("coefficients against scaled Whittaker functions") {
    const std::vector<int> ms{4, 8, 16, 32, 64};
    auto grid = [](int points) {
      std::vector<double> t(points);
      for (int i = 0; i < points; ++i) t[i] = 12.0 * i / (points - 1);
      return t;
    };
    for (auto [lam, n] : {std::pair{0.5, 0}, std::pair{1.0, 1}}) {
      const auto coarse = verify_prop7(lam, n, grid(25), ms);
      const auto fine = verify_prop7(lam, n, grid(49), ms);
      REQUIRE(coarse.sup_D.size() == ms.size());
      for (std::size_t i = 1; i < ms.size(); ++i) CHECK(fine.sup_D[i] < fine.sup_D[i - 1]);
      CHECK(std::isfinite(fine.sup_D_m2));
      CHECK(fine.sup_D_m2 < 2.0 * coarse.sup_D_m2);
      CHECK(coarse.sup_D_m2 < 2.0 * fine.sup_D_m2);
      CHECK(fine.lower_half_deviation < 1e-9);
      CHECK(fine.rows.size() == ms.size() * 49);
    }
    const std::vector<double> bad{-1.0};
    CHECK_THROWS_AS(verify_prop7(0.5, 0, bad, ms), DomainError);
    const std::vector<double> ok{0.0};
    CHECK_THROWS_AS(verify_prop7(0.5, 3, ok, {2}), DomainError);
  }
}
