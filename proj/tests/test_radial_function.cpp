#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "hartmann/radial_function.hpp"

using namespace hartmann;

namespace {

RadialFunction make(double s, double kappa, std::vector<double> coeffs) {
    return RadialFunction(s, kappa, Polynomial(std::move(coeffs)));
}

void check_function(const RadialFunction& f, double s, double kappa,
                    const std::vector<double>& coeffs, double tol = 1e-12) {
    REQUIRE(!f.is_zero());
    CHECK(f.s == doctest::Approx(s).epsilon(tol));
    CHECK(f.kappa == doctest::Approx(kappa).epsilon(tol));
    REQUIRE(f.poly.degree() == static_cast<int>(coeffs.size()) - 1);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        CHECK(f.poly.coeff(static_cast<int>(k)) ==
              doctest::Approx(coeffs[k]).epsilon(tol));
    }
}

// Generic member of the class, kept comfortably inside the integrable range.
RadialFunction random_function(std::mt19937& rng) {
    std::uniform_real_distribution<double> s_pick(0.6, 3.0);
    std::uniform_real_distribution<double> kappa_pick(0.3, 2.5);
    std::uniform_real_distribution<double> coeff_pick(-2.0, 2.0);
    std::uniform_int_distribution<int> deg_pick(0, 3);
    const int deg = deg_pick(rng);
    std::vector<double> coeffs(deg + 1);
    for (double& c : coeffs) {
        do {
            c = coeff_pick(rng);
        } while (std::abs(c) < 0.2);
    }
    return RadialFunction(s_pick(rng), kappa_pick(rng), Polynomial(coeffs));
}

}  // namespace

TEST_CASE("polynomial basics") {
    const Polynomial p({1.0, -2.0, 0.5});
    CHECK(p.degree() == 2);
    CHECK(p.evaluate(2.0) == doctest::Approx(1.0 - 4.0 + 2.0));
    CHECK(p.derivative().evaluate(2.0) == doctest::Approx(-2.0 + 2.0));
    CHECK(p.times_r().lowest_power() == 1);
    const Polynomial q = p.times(Polynomial({0.0, 1.0}));
    CHECK(q.degree() == 3);
    CHECK(q.coeff(1) == doctest::Approx(1.0));
    CHECK(Polynomial().is_zero());
    CHECK(Polynomial({0.0, 0.0}).is_zero());
}

TEST_CASE("canonical form folds powers of r into the exponent") {
    const RadialFunction f(0.5, 1.0, Polynomial({0.0, 0.0, 3.0, 1.0}));
    CHECK(f.s == doctest::Approx(2.5));
    CHECK(f.poly.coeff(0) == doctest::Approx(3.0));
    CHECK(f.poly.degree() == 1);
}

TEST_CASE("origin integrability is enforced on construction") {
    CHECK_THROWS_AS(make(-0.5, 1.0, {1.0}), std::domain_error);
    CHECK_THROWS_AS(make(-0.7, 1.0, {1.0}), std::domain_error);
    CHECK_NOTHROW(make(-0.4, 1.0, {1.0}));
    CHECK_THROWS_AS(RadialFunction(1.0, -1.0, Polynomial({1.0})),
                    std::invalid_argument);
}

TEST_CASE("evaluate") {
    const RadialFunction u = make(1.0, 1.0, {2.0});  // 2 r e^{-r}
    CHECK(u.evaluate(1.0) == doctest::Approx(2.0 / std::exp(1.0)).epsilon(1e-14));
    CHECK(u.evaluate(0.0) == 0.0);

    const RadialFunction g = make(1.0, 1.0, {1.0, -1.0});  // r e^{-r} (1 - r)
    CHECK(g.evaluate(1.0) == doctest::Approx(0.0));

    const RadialFunction h = make(-0.4, 1.0, {1.0});
    CHECK_THROWS_AS(h.evaluate(0.0), std::domain_error);
    CHECK_THROWS_AS(h.evaluate(-1.0), std::domain_error);
    CHECK(RadialFunction().evaluate(3.0) == 0.0);
}

TEST_CASE("differentiate follows the product rule") {
    // d/dr [r e^{-r}] = e^{-r} (1 - r)
    check_function(differentiate(make(1.0, 1.0, {1.0})), 0.0, 1.0, {1.0, -1.0});
    // d/dr [r^2 e^{-r/2}] = r e^{-r/2} (2 - r/2)
    check_function(differentiate(make(2.0, 0.5, {1.0})), 1.0, 0.5, {2.0, -0.5});
    CHECK(differentiate(RadialFunction()).is_zero());
}

TEST_CASE("ladder operators") {
    SUBCASE("A- annihilates the lowest rung") {
        for (double l : {0.0, 0.5, 1.0, 2.7, 5.0}) {
            for (double gamma : {0.5, 1.0, 3.0}) {
                const double kappa_l = gamma / (l + 1.0);
                const RadialFunction psi0 = make(l + 1.0, kappa_l, {1.0});
                const RadialFunction image =
                    apply_ladder(l, gamma, Ladder::minus, psi0);
                CHECK(image.is_zero());
            }
        }
    }
    SUBCASE("worked A+ application") {
        // A+_0 (gamma = 1) on r^2 e^{-r/2} = (1/sqrt 2) r e^{-r/2} (-3 + 3r/2)
        const RadialFunction image =
            apply_ladder(0.0, 1.0, Ladder::plus, make(2.0, 0.5, {1.0}));
        const double c = 1.0 / std::sqrt(2.0);
        check_function(image, 1.0, 0.5, {-3.0 * c, 1.5 * c});
    }
    SUBCASE("zero maps to zero") {
        CHECK(apply_ladder(1.0, 1.0, Ladder::plus, RadialFunction()).is_zero());
    }
    SUBCASE("exponent shift stays in {-1, 0}") {
        std::mt19937 rng(7);
        for (int trial = 0; trial < 50; ++trial) {
            const RadialFunction f = random_function(rng);
            for (Ladder sign : {Ladder::plus, Ladder::minus}) {
                const RadialFunction g = apply_ladder(1.3, 1.0, sign, f);
                if (g.is_zero()) continue;
                const double shift = g.s - f.s;
                CHECK(shift >= -1.0 - 1e-12);
                CHECK(shift <= 1e-12);
                CHECK(std::abs(shift - std::round(shift)) < 1e-12);
            }
        }
    }
}

TEST_CASE("radial Hamiltonian acts as expected on eigenfunctions") {
    SUBCASE("ground state of H_0 at gamma = 1") {
        const RadialFunction u = make(1.0, 1.0, {2.0});
        check_function(apply_radial_hamiltonian(0.0, 1.0, u), 1.0, 1.0, {-1.0});
    }
    SUBCASE("lowest rung of H_1 at gamma = 1") {
        // eigenvalue -1/(2 * 2^2) = -0.125
        const RadialFunction u = make(2.0, 0.5, {1.0});
        check_function(apply_radial_hamiltonian(1.0, 1.0, u), 2.0, 0.5, {-0.125});
    }
    SUBCASE("zero maps to zero") {
        CHECK(apply_radial_hamiltonian(2.0, 1.0, RadialFunction()).is_zero());
    }
    SUBCASE("exponent shift stays in {-2, -1, 0}") {
        std::mt19937 rng(11);
        for (int trial = 0; trial < 50; ++trial) {
            const RadialFunction f = random_function(rng);
            RadialFunction g;
            try {
                g = apply_radial_hamiltonian(2.0, 1.0, f);
            } catch (const std::domain_error&) {
                continue;  // image not integrable at the origin for this f
            }
            if (g.is_zero()) continue;
            const double shift = g.s - f.s;
            CHECK(shift >= -2.0 - 1e-12);
            CHECK(shift <= 1e-12);
            CHECK(std::abs(shift - std::round(shift)) < 1e-12);
        }
    }
}

TEST_CASE("inner products via gamma integrals") {
    const RadialFunction u1 = make(1.0, 1.0, {1.0});
    CHECK(inner_product(u1, u1) == doctest::Approx(0.25).epsilon(1e-14));
    const RadialFunction u2 = make(1.0, 1.0, {2.0});
    CHECK(inner_product(u2, u2) == doctest::Approx(1.0).epsilon(1e-14));
    // mixed decay rates: int r^2 e^{-3r/2} = Gamma(3)/(1.5)^3
    const RadialFunction v = make(1.0, 0.5, {1.0});
    CHECK(inner_product(u1, v) ==
          doctest::Approx(2.0 / std::pow(1.5, 3)).epsilon(1e-14));
    // int r^{-0.8} e^{-2r} still converges at the origin
    const RadialFunction w = make(-0.4, 1.0, {1.0});
    CHECK(inner_product(w, w) ==
          doctest::Approx(std::exp(log_gamma(0.2) - 0.2 * std::log(2.0)))
              .epsilon(1e-13));
    // pairing against a raw derivative-form function can diverge
    const RadialFunction raw =
        RadialFunction::unchecked(-0.7, 1.0, Polynomial({1.0}));
    CHECK_THROWS_AS(inner_product(w, raw), std::domain_error);
    CHECK(inner_product(RadialFunction(), u1) == 0.0);
}

TEST_CASE("normalize") {
    SUBCASE("r e^{-r} -> 2 r e^{-r}") {
        check_function(normalize(make(1.0, 1.0, {1.0})), 1.0, 1.0, {2.0});
    }
    SUBCASE("idempotence") {
        const RadialFunction n1 = normalize(make(1.5, 0.7, {0.3, -0.1}));
        const RadialFunction n2 = normalize(n1);
        check_function(n2, n1.s, n1.kappa,
                       {n1.poly.coeff(0), n1.poly.coeff(1)});
    }
    SUBCASE("real exponent path") {
        // ||r^{3/2} e^{-r}||^2 = Gamma(4) / 2^4
        const RadialFunction n = normalize(make(1.5, 1.0, {1.0}));
        check_function(n, 1.5, 1.0, {1.0 / std::sqrt(6.0 / 16.0)});
    }
    SUBCASE("canonical sign is positive") {
        const RadialFunction n = normalize(make(1.0, 1.0, {-1.0, -2.0}));
        CHECK(n.poly.coeff(0) > 0.0);
    }
    SUBCASE("zero function rejected") {
        CHECK_THROWS_AS(normalize(RadialFunction()), std::domain_error);
    }
}

TEST_CASE("log gamma") {
    CHECK(log_gamma(3.0) == doctest::Approx(std::log(2.0)).epsilon(1e-14));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0));
    // recurrence down from Gamma(1/2) = sqrt(pi)
    const double g45 = 3.5 * 2.5 * 1.5 * 0.5 * std::sqrt(M_PI);
    CHECK(log_gamma(4.5) == doctest::Approx(std::log(g45)).epsilon(1e-13));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
}

TEST_CASE("gamma recurrence Gamma(x+1) = x Gamma(x)") {
    for (double x = 0.1; x <= 100.0; x += 0.37) {
        CHECK(std::exp(log_gamma(x + 1.0) - log_gamma(x)) ==
              doctest::Approx(x).epsilon(1e-10));
    }
}

TEST_CASE("ladder adjointness under the half-line measure") {
    // <A- f, A- f> = <f, A+ A- f>
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const RadialFunction f = random_function(rng);
        const double l = 0.8 + 0.01 * trial;
        const double gamma = 0.5 + 0.02 * trial;
        const RadialFunction af = apply_ladder(l, gamma, Ladder::minus, f);
        if (af.is_zero()) continue;
        RadialFunction aaf;
        try {
            aaf = apply_ladder(l, gamma, Ladder::plus, af);
        } catch (const std::domain_error&) {
            continue;  // A+A- f itself not square-integrable for small s
        }
        const double lhs = inner_product(af, af);
        const double rhs = inner_product(f, aaf);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
    }
}

TEST_CASE("linear combinations align exponents") {
    const RadialFunction f = make(1.0, 1.0, {1.0});
    const RadialFunction g = make(2.0, 1.0, {3.0});
    const RadialFunction h = linear_combination(2.0, f, 1.0, g);
    check_function(h, 1.0, 1.0, {2.0, 3.0});
    // exact cancellation gives the zero function
    CHECK(linear_combination(1.0, f, -1.0, f).is_zero());
    const RadialFunction other_kappa = make(1.0, 2.0, {1.0});
    CHECK_THROWS_AS(linear_combination(1.0, f, 1.0, other_kappa),
                    std::invalid_argument);
    const RadialFunction frac = make(1.5, 1.0, {1.0});
    CHECK_THROWS_AS(linear_combination(1.0, f, 1.0, frac), std::invalid_argument);
}
