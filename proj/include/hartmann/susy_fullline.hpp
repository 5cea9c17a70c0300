#pragma once

#include <utility>
#include <vector>

#include "hartmann/oracle.hpp"
#include "hartmann/radial_function.hpp"

// Full-line SUSY formulation.  With y = gamma r and x = ln y the radial
// problem at level N becomes a Morse eigenproblem on (-inf, inf),
//
//   [ -(1/2) d^2/dx^2 + e^{2x}/(2N^2) - e^x ] psi = -(1/2)(L+1/2)^2 psi,
//
// whose superpotential W_1 = e^x/N + 1/2 - N generates the partner
//   V_2 = e^{2x}/(2N^2) - (1 - 1/N) e^x (+ shift).
// Undoing the change of variables identifies the partner spectrum with the
// Hartmann problem at N' = N - 1 and coupling delta' = (1 - 1/N) delta:
// partner states share the physical energy (delta'/N' = delta/N) while
// their SUSY eigenvalues differ.

namespace hartmann {

enum class Sector { bose, fermi };

struct MorseProblem {
    double n_label = 2.0;
    double delta = 1.0;
    Sector sector = Sector::bose;

    MorseProblem(double n_label_in, double delta_in, Sector sector_in);

    // (1/2)(N - 1/2)^2; added so the Bose-sector ground state sits at zero.
    double shift() const {
        const double c = n_label - 0.5;
        return 0.5 * c * c;
    }

    double potential(double x) const;
};

// x = ln(gamma r).
double to_morse_coordinates(double gamma, double r);

// psi(x) = e^(-x/2) u(e^x / gamma); the full-line image of a half-line
// eigenfunction under u = e^(x/2) psi.
struct LineFunction {
    RadialFunction u;
    double gamma = 1.0;

    double radius_at(double x) const;
    double operator()(double x) const;
};

LineFunction transform_eigenfunction(const RadialFunction& u, double gamma);

// int |psi|^2 dx = (1/gamma) int |u(r)/r|^2 dr, evaluated analytically.
double line_norm_squared(const RadialFunction& u, double gamma);

// Shifted SUSY eigenvalue (1/2)(N-1/2)^2 - (1/2)(L+1/2)^2; zero at the
// ground rung L = N-1.
double susy_eigenvalue(double n, double l);

// W_1(x) = e^x / N + 1/2 - N.
double morse_superpotential(double n, double x);

// (1/2)(W_1^2 - W_1') - V_1(x); analytically zero.
double morse_ricatti_residual(double n, double x);

struct MorsePartnerPotentials {
    double n_label = 2.0;

    double v1(double x) const;  // Bose sector, shifted
    double v2(double x) const;  // Fermi sector, shifted
};

// The shifted partner pair; V2 - V1 = e^x / N pointwise.
MorsePartnerPotentials morse_partner_potentials(double n);

struct PartnerMapResult {
    double n_prime = 1.0;
    double delta_prime = 0.0;
    double energy_check = 0.0;  // delta'/N' - delta/N, identically zero
};

// (N, delta) -> (N-1, (1-1/N) delta).  Throws for N <= 1.
PartnerMapResult partner_map(double n, double delta);

struct IsospectralityReport {
    double n_label = 2.0;
    std::vector<double> bose_eigenvalues;
    std::vector<double> fermi_eigenvalues;
    std::vector<double> reference_eigenvalues;  // susy_eigenvalue ladder
    std::vector<std::pair<double, double>> matched;
    double missing_ground = 0.0;
    double max_abs_mismatch = 0.0;
    double max_reference_error = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// Solves both sectors with the finite-difference oracle and checks that the
// Fermi spectrum equals the Bose spectrum with its ground state removed.
IsospectralityReport verify_partner_spectra(double n, const Grid& grid,
                                            double tol = 1e-3);

}  // namespace hartmann
