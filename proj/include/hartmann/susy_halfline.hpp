#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hartmann/oracle.hpp"
#include "hartmann/radial_function.hpp"

// Half-line SUSY formulation of the Hartmann radial problem.  The shifted
// Hamiltonian
//
//   curly_H_L = H_L + gamma^2/(2(L+1)^2) = A^+_L A^-_L
//
// factorizes through the superpotential W_L = -(L+1)/r + gamma/(L+1), and
// the shape-invariant partner A^-_L A^+_L equals curly_H at L+1 up to the
// same constant.  Each rung L carries a nodeless ground state
// r^(L+1) e^(-kappa_L r) annihilated by A^-_L; every excited state u_{N,L}
// is reached from the lowest rung of level N-1 by applying
// A^+_{N-2}, ..., A^+_L and normalizing once at the end.

namespace hartmann {

// W_L(r) = -(L+1)/r + gamma/(L+1).
double superpotential(double l, double gamma, double r);

// The potential of curly_H_L: L(L+1)/(2r^2) - gamma/r + gamma^2/(2(L+1)^2).
double effective_potential(double l, double gamma, double r);

// (1/2)(W_L^2 - W_L') minus the effective potential; analytically zero.
double ricatti_residual(double l, double gamma, double r);

// (1/2)(W_L^2 + W_L') = (L+1)(L+2)/(2r^2) - gamma/r + gamma^2/(2(L+1)^2),
// i.e. the effective potential with L -> L+1 at the unchanged shift.
double partner_potential(double l, double gamma, double r);

// gamma^2/(2(L+1)^2), the offset between H_L and curly_H_L.
double level_shift(double l, double gamma);

struct HierarchyLevel {
    double l = 0.0;
    double gamma = 1.0;
    double shift = 0.0;
    RadialFunction ground_state;
};

HierarchyLevel hierarchy_level(double l, double gamma);

// Normalized r^(L+1) e^(-kappa_L r); annihilated by A^-_L.
RadialFunction ground_state(double l, double gamma);

// u_{N,L}: ladder construction from ground_state(N-1) with A^+ applied at
// L' = N-2, N-3, ..., L, normalized with positive lowest coefficient.
// Requires N - L - 1 to be a nonnegative integer.
RadialFunction build_eigenfunction(double n, double l, double gamma);

// R_{N,L} = u_{N,L} / r; carries the same normalization constant since
// int |R|^2 r^2 dr = int |u|^2 dr.
RadialFunction radial_wavefunction(double n, double l, double gamma);

struct SpectrumRow {
    double n = 1.0;
    double l = 0.0;
    double energy_analytic = 0.0;
    std::optional<double> energy_oracle;
    std::vector<std::string> builder_trace;
};

struct SpectrumReport {
    double capital_m = 0.0;
    double gamma = 1.0;
    std::vector<SpectrumRow> rows;
};

// Triangular (N, L) table for N = |M|+1 ... |M|+n_levels with one shared
// energy -gamma^2/(2N^2) per N group.
SpectrumReport spectrum(double capital_m, int n_levels, double gamma);

struct AlgebraReport {
    int n_points = 0;
    double h = 0.0;
    double q_squared_norm = 0.0;
    double qdag_squared_norm = 0.0;
    double anticommutator_residual = 0.0;
    double commutator_rel_residual = 0.0;
    double hss_norm = 0.0;
    // || (A+A- - curly_H_L) u || / || curly_H_L u || on a smooth
    // eigenfunction, at h and h/2, with the observed convergence order.
    double factorization_err = 0.0;
    double factorization_err_refined = 0.0;
    double factorization_order = 0.0;
    bool pass = false;
};

// Discretizes A^\pm_L as banded maps on the grid (central differences, so
// A^+ is exactly the transpose of A^-), assembles Q, Q\dagger, H_ss
// blockwise and measures the algebra relations.  Throws when the grid is
// too coarse for the factorization check.
AlgebraReport verify_susy_algebra(double l, double gamma, const Grid& grid);

}  // namespace hartmann
