#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hartmann/model.hpp"
#include "hartmann/oracle.hpp"
#include "hartmann/susy_fullline.hpp"
#include "hartmann/susy_halfline.hpp"

using namespace hartmann;

TEST_CASE("Morse coordinates") {
    CHECK(to_morse_coordinates(1.0, 1.0) == doctest::Approx(0.0));
    CHECK(to_morse_coordinates(2.0, 0.5) == doctest::Approx(0.0));
    CHECK(to_morse_coordinates(1.0, std::exp(3.0)) == doctest::Approx(3.0));
    CHECK_THROWS_AS(to_morse_coordinates(1.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(to_morse_coordinates(0.0, 1.0), std::invalid_argument);
}

TEST_CASE("transformed eigenfunction") {
    const RadialFunction u = ground_state(0.0, 1.0);  // 2 r e^{-r}
    const LineFunction psi = transform_eigenfunction(u, 1.0);

    SUBCASE("peak sits at x = ln(1/2)") {
        // psi(x) = 2 e^{x/2} e^{-e^x}; stationary where e^x = 1/2
        const double x_peak = std::log(0.5);
        const double h = 1e-5;
        const double deriv = (psi(x_peak + h) - psi(x_peak - h)) / (2.0 * h);
        CHECK(deriv == doctest::Approx(0.0).epsilon(1e-8));
        CHECK(psi(x_peak) > psi(x_peak + 0.3));
        CHECK(psi(x_peak) > psi(x_peak - 0.3));
    }
    SUBCASE("round trip through r = e^x / gamma") {
        for (double r : {0.2, 1.0, 3.7}) {
            const double x = to_morse_coordinates(1.0, r);
            CHECK(psi(x) * std::exp(0.5 * x) ==
                  doctest::Approx(u.evaluate(r)).epsilon(1e-12));
        }
    }
    SUBCASE("line normalization equals the 1/r^2-weighted radial integral") {
        const double analytic = line_norm_squared(u, 1.0);
        const double by_quadrature =
            quadrature([&](double x) { return psi(x) * psi(x); }, -30.0, 4.0);
        CHECK(by_quadrature == doctest::Approx(analytic).epsilon(1e-9));
    }
}

TEST_CASE("transformed states satisfy the Morse equation") {
    // numeric second derivative against eigenvalue -(1/2)(L+1/2)^2
    const double gamma = 1.3;
    for (double cm : {0.0, 0.7}) {
        for (int level = 1; level <= 3; ++level) {
            const double n = cm + level;
            for (double l : allowed_l_values(n, cm)) {
                const RadialFunction u = build_eigenfunction(n, l, gamma);
                const LineFunction psi = transform_eigenfunction(u, gamma);
                const double eig = -0.5 * (l + 0.5) * (l + 0.5);
                const double h = 3e-3;
                double worst_residual = 0.0;
                double scale = 0.0;
                for (double x = std::log(n * n) - 4.0; x <= std::log(n * n) + 2.0;
                     x += 0.37) {
                    const double d2 =
                        (-psi(x + 2 * h) + 16 * psi(x + h) - 30 * psi(x) +
                         16 * psi(x - h) - psi(x - 2 * h)) /
                        (12 * h * h);
                    const double ex = std::exp(x);
                    const double v = ex * ex / (2.0 * n * n) - ex;
                    const double residual = -0.5 * d2 + v * psi(x) - eig * psi(x);
                    worst_residual = std::max(worst_residual, std::abs(residual));
                    scale = std::max(scale, std::abs(eig * psi(x)));
                }
                CAPTURE(n);
                CAPTURE(l);
                CHECK(worst_residual / scale <= 1e-8);
            }
        }
    }
}

TEST_CASE("SUSY eigenvalues") {
    CHECK(susy_eigenvalue(3.0, 2.0) == doctest::Approx(0.0));
    CHECK(susy_eigenvalue(3.0, 1.0) == doctest::Approx(2.0));
    CHECK(susy_eigenvalue(3.0, 0.0) == doctest::Approx(3.0));
    // zero exactly at the ground rung
    for (double n : {1.5, 2.0, 4.25}) {
        CHECK(susy_eigenvalue(n, n - 1.0) == doctest::Approx(0.0));
    }
}

TEST_CASE("Morse superpotential and Ricatti identity") {
    CHECK(morse_superpotential(1.0, 0.0) == doctest::Approx(0.5));
    CHECK(morse_superpotential(10.0, -30.0) ==
          doctest::Approx(-9.5).epsilon(1e-12));
    for (double n : {1.5, 2.0, 2.5, 3.3, 5.0}) {
        for (double x = -10.0; x <= 5.0; x += 0.7) {
            const double scale =
                std::max(1.0, std::abs(morse_partner_potentials(n).v1(x)));
            CHECK(morse_ricatti_residual(n, x) ==
                  doctest::Approx(0.0).scale(scale).epsilon(1e-12));
        }
    }
}

TEST_CASE("partner potentials") {
    const MorsePartnerPotentials pots = morse_partner_potentials(2.0);
    SUBCASE("V2 - V1 = e^x / N") {
        CHECK(pots.v2(0.0) - pots.v1(0.0) == doctest::Approx(0.5).epsilon(1e-14));
        for (double x = -10.0; x <= 5.0; x += 0.31) {
            CHECK(pots.v2(x) - pots.v1(x) ==
                  doctest::Approx(std::exp(x) / 2.0).epsilon(1e-12));
        }
    }
    SUBCASE("x -> -inf asymptote is the shift") {
        const double shift = MorseProblem(2.0, 1.0, Sector::bose).shift();
        CHECK(pots.v1(-40.0) == doctest::Approx(shift).epsilon(1e-15));
        CHECK(pots.v2(-40.0) == doctest::Approx(shift).epsilon(1e-15));
    }
    SUBCASE("pointwise Ricatti identities for both partners") {
        for (double n : {2.0, 3.0, 4.5}) {
            const MorsePartnerPotentials p = morse_partner_potentials(n);
            for (double x = -10.0; x <= 5.0; x += 0.45) {
                const double w = morse_superpotential(n, x);
                const double w_prime = std::exp(x) / n;
                const double scale = std::max(1.0, std::abs(p.v2(x)));
                CHECK(0.5 * (w * w + w_prime) - p.v2(x) ==
                      doctest::Approx(0.0).scale(scale).epsilon(1e-12));
                CHECK(0.5 * (w * w - w_prime) - p.v1(x) ==
                      doctest::Approx(0.0).scale(scale).epsilon(1e-12));
            }
        }
    }
    SUBCASE("Morse problem sectors expose shifted potentials") {
        const MorseProblem bose(3.0, 1.0, Sector::bose);
        const MorseProblem fermi(3.0, 1.0, Sector::fermi);
        CHECK(bose.potential(0.3) ==
              doctest::Approx(morse_partner_potentials(3.0).v1(0.3)));
        CHECK(fermi.potential(0.3) ==
              doctest::Approx(morse_partner_potentials(3.0).v2(0.3)));
        CHECK_THROWS_AS(MorseProblem(0.0, 1.0, Sector::bose),
                        std::invalid_argument);
    }
}

TEST_CASE("partner map") {
    SUBCASE("worked values") {
        const PartnerMapResult r = partner_map(3.0, 1.0);
        CHECK(r.n_prime == doctest::Approx(2.0));
        CHECK(r.delta_prime == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(std::abs(r.energy_check) <= 1e-15 / 3.0);

        const PartnerMapResult r2 = partner_map(2.0, 4.0);
        CHECK(r2.n_prime == doctest::Approx(1.0));
        CHECK(r2.delta_prime == doctest::Approx(2.0));
        CHECK(r2.delta_prime / r2.n_prime == doctest::Approx(2.0));

        // N = |M| + 3 with |M| = 1: delta' = (3/4) delta
        const PartnerMapResult r3 = partner_map(4.0, 1.6);
        CHECK(r3.delta_prime == doctest::Approx(0.75 * 1.6).epsilon(1e-15));
    }
    SUBCASE("no partner below the lowest level") {
        CHECK_THROWS_AS(partner_map(1.0, 1.0), std::invalid_argument);
        CHECK_THROWS_AS(partner_map(0.5, 1.0), std::invalid_argument);
    }
    SUBCASE("randomized map invariant delta'/N' = delta/N") {
        std::mt19937 rng(31415);
        std::uniform_real_distribution<double> n_pick(2.0, 20.0);
        std::uniform_real_distribution<double> d_pick(0.1, 10.0);
        for (int trial = 0; trial < 1000; ++trial) {
            const double n = n_pick(rng);
            const double delta = d_pick(rng);
            const PartnerMapResult r = partner_map(n, delta);
            CHECK(std::abs(r.energy_check) <= 1e-15 * (delta / n));
            // paired states share the physical energy
            CHECK(energy_scaled(n, delta) ==
                  doctest::Approx(energy_scaled(r.n_prime, r.delta_prime))
                      .epsilon(1e-15));
        }
        // just above the lowest level the map is still defined
        for (double n : {1.1, 1.5, 1.9}) {
            CHECK(std::abs(partner_map(n, 0.7).energy_check) <=
                  1e-15 * (0.7 / n));
        }
    }
    SUBCASE("composing twice") {
        const double n = 4.7;
        const double delta = 2.2;
        const PartnerMapResult once = partner_map(n, delta);
        const PartnerMapResult twice = partner_map(once.n_prime, once.delta_prime);
        CHECK(twice.n_prime == doctest::Approx(n - 2.0));
        CHECK(twice.delta_prime ==
              doctest::Approx((1.0 - 1.0 / n) * (1.0 - 1.0 / (n - 1.0)) * delta)
                  .epsilon(1e-14));
        CHECK(twice.delta_prime / twice.n_prime ==
              doctest::Approx(delta / n).epsilon(1e-14));
    }
}

TEST_CASE("partner spectra are isospectral up to the ground state") {
    SUBCASE("N = 3") {
        const IsospectralityReport report =
            verify_partner_spectra(3.0, default_morse_grid(3.0));
        CHECK(report.pass);
        REQUIRE(report.bose_eigenvalues.size() == 3);
        REQUIRE(report.fermi_eigenvalues.size() == 2);
        CHECK(report.missing_ground == doctest::Approx(0.0).epsilon(1e-3));
        CHECK(report.max_abs_mismatch <= 1e-3);
        CHECK(report.max_reference_error <= 1e-3);
    }
    SUBCASE("N = 2") {
        const IsospectralityReport report =
            verify_partner_spectra(2.0, default_morse_grid(2.0));
        CHECK(report.pass);
        REQUIRE(report.bose_eigenvalues.size() == 2);
        REQUIRE(report.fermi_eigenvalues.size() == 1);
        CHECK(report.bose_eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(report.fermi_eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-3));
    }
    SUBCASE("non-integer N") {
        const IsospectralityReport report =
            verify_partner_spectra(2.5, default_morse_grid(2.5));
        CHECK(report.pass);
        REQUIRE(report.bose_eigenvalues.size() == 2);
    }
    SUBCASE("N = 1 has no partner spectrum to verify") {
        CHECK_THROWS_AS(verify_partner_spectra(1.0, default_morse_grid(1.0)),
                        std::invalid_argument);
    }
}
