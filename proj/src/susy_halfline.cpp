#include "hartmann/susy_halfline.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hartmann/banded.hpp"
#include "hartmann/model.hpp"

namespace hartmann {

namespace {

void check_positive_radius(double r, const char* what) {
    if (!(r > 0.0)) {
        throw std::domain_error(std::string(what) + ": r must be positive");
    }
}

std::string trace_label(const char* op, double l) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s(L=%g)", op, l);
    return buf;
}

}  // namespace

double superpotential(double l, double gamma, double r) {
    check_positive_radius(r, "superpotential");
    return -(l + 1.0) / r + gamma / (l + 1.0);
}

double effective_potential(double l, double gamma, double r) {
    check_positive_radius(r, "effective_potential");
    return 0.5 * l * (l + 1.0) / (r * r) - gamma / r + level_shift(l, gamma);
}

double ricatti_residual(double l, double gamma, double r) {
    check_positive_radius(r, "ricatti_residual");
    const double w = superpotential(l, gamma, r);
    const double w_prime = (l + 1.0) / (r * r);
    return 0.5 * (w * w - w_prime) - effective_potential(l, gamma, r);
}

double partner_potential(double l, double gamma, double r) {
    check_positive_radius(r, "partner_potential");
    const double w = superpotential(l, gamma, r);
    const double w_prime = (l + 1.0) / (r * r);
    return 0.5 * (w * w + w_prime);
}

double level_shift(double l, double gamma) {
    const double k = gamma / (l + 1.0);
    return 0.5 * k * k;
}

RadialFunction ground_state(double l, double gamma) {
    if (!(l >= 0.0)) {
        throw std::invalid_argument("ground_state: L must be nonnegative");
    }
    return normalize(
        RadialFunction(l + 1.0, kappa(l, gamma), Polynomial::constant(1.0)));
}

HierarchyLevel hierarchy_level(double l, double gamma) {
    HierarchyLevel level;
    level.l = l;
    level.gamma = gamma;
    level.shift = level_shift(l, gamma);
    level.ground_state = ground_state(l, gamma);
    return level;
}

RadialFunction build_eigenfunction(double n, double l, double gamma) {
    if (!(l >= 0.0)) {
        throw std::invalid_argument("build_eigenfunction: L must be nonnegative");
    }
    const double steps_real = n - l - 1.0;
    if (!is_nonneg_integer(steps_real)) {
        throw std::invalid_argument(
            "build_eigenfunction: N - L - 1 must be a nonnegative integer");
    }
    const int steps = static_cast<int>(std::llround(steps_real));
    RadialFunction u = ground_state(n - 1.0, gamma);
    for (int i = 1; i <= steps; ++i) {
        u = apply_ladder(n - 1.0 - i, gamma, Ladder::plus, u);
    }
    return normalize(u);
}

RadialFunction radial_wavefunction(double n, double l, double gamma) {
    const RadialFunction u = build_eigenfunction(n, l, gamma);
    return RadialFunction(u.s - 1.0, u.kappa, u.poly);
}

SpectrumReport spectrum(double capital_m, int n_levels, double gamma) {
    if (n_levels < 1) {
        throw std::invalid_argument("spectrum: need at least one level");
    }
    if (!(capital_m >= 0.0)) {
        throw std::invalid_argument("spectrum: |M| must be nonnegative");
    }
    SpectrumReport report;
    report.capital_m = capital_m;
    report.gamma = gamma;
    for (int level = 1; level <= n_levels; ++level) {
        const double n = capital_m + level;
        const double energy = energy_scaled(n, gamma);
        for (double l : allowed_l_values(n, capital_m)) {
            SpectrumRow row;
            row.n = n;
            row.l = l;
            row.energy_analytic = energy;
            row.builder_trace.push_back(trace_label("ground", n - 1.0));
            for (double lp = n - 2.0; lp > l - 0.5; lp -= 1.0) {
                row.builder_trace.push_back(trace_label("A+", lp));
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

namespace {

// Central-difference first derivative with Dirichlet ends; antisymmetric,
// so (A^-)^T = A^+ holds exactly at the matrix level.
BandedMatrix ladder_matrix(double l, double gamma, const Grid& grid, double sign) {
    const int m = grid.n_points - 2;
    const double inv_2h = 1.0 / (2.0 * grid.spacing());
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    BandedMatrix a(m, 1);
    for (int i = 0; i < m; ++i) {
        a.set(i, i, inv_sqrt2 * superpotential(l, gamma, grid.point(i + 1)));
        if (i + 1 < m) a.set(i, i + 1, sign * inv_sqrt2 * inv_2h);
        if (i - 1 >= 0) a.set(i, i - 1, -sign * inv_sqrt2 * inv_2h);
    }
    return a;
}

// Three-point discretization of curly_H_L.
BandedMatrix shifted_hamiltonian_matrix(double l, double gamma, const Grid& grid) {
    const int m = grid.n_points - 2;
    const double inv_h2 = 1.0 / (grid.spacing() * grid.spacing());
    BandedMatrix h(m, 1);
    for (int i = 0; i < m; ++i) {
        h.set(i, i, inv_h2 + effective_potential(l, gamma, grid.point(i + 1)));
        if (i + 1 < m) h.set(i, i + 1, -0.5 * inv_h2);
        if (i - 1 >= 0) h.set(i, i - 1, -0.5 * inv_h2);
    }
    return h;
}

// Relative L2 difference of (A+A-)u and curly_H u for a smooth
// eigenfunction u sampled on the grid.  The window starts at a tenth of the
// state's natural radius: closer to the origin the grid marches into the
// 1/r singularity of W_L as h shrinks and the row-wise truncation error is
// no longer O(h^2) there.  (The squared central difference also reaches two
// points out, so the first and last two rows are excluded regardless.)
double factorization_error(double l, double gamma, const Grid& grid,
                           const RadialFunction& u) {
    const int m = grid.n_points - 2;
    std::vector<double> samples(m);
    for (int i = 0; i < m; ++i) samples[i] = u.evaluate(grid.point(i + 1));

    const BandedMatrix a_minus = ladder_matrix(l, gamma, grid, +1.0);
    const BandedMatrix h_fact = a_minus.transpose().times(a_minus);
    const BandedMatrix h_fd = shifted_hamiltonian_matrix(l, gamma, grid);

    const std::vector<double> lhs = h_fact.apply(samples);
    const std::vector<double> rhs = h_fd.apply(samples);
    const double r_cut = 0.1 * (l + 1.0) * (l + 2.0) / gamma;
    double num = 0.0, den = 0.0;
    for (int i = 2; i < m - 2; ++i) {
        if (grid.point(i + 1) < r_cut) continue;
        num += (lhs[i] - rhs[i]) * (lhs[i] - rhs[i]);
        den += rhs[i] * rhs[i];
    }
    if (!(den > 0.0)) {
        throw std::runtime_error("factorization_error: degenerate test window");
    }
    return std::sqrt(num / den);
}

}  // namespace

AlgebraReport verify_susy_algebra(double l, double gamma, const Grid& grid) {
    if (!(grid.x_min > 0.0)) {
        throw std::invalid_argument("verify_susy_algebra: grid must exclude r = 0");
    }
    AlgebraReport report;
    report.n_points = grid.n_points;
    report.h = grid.spacing();

    const BandedMatrix a_minus = ladder_matrix(l, gamma, grid, +1.0);
    const BandedMatrix a_plus = a_minus.transpose();
    const BandedMatrix h1 = a_plus.times(a_minus);
    const BandedMatrix h2 = a_minus.times(a_plus);

    // Q = [[0,0],[A-,0]] and Qdag = [[0,A+],[0,0]].  Every block of Q^2,
    // (Qdag)^2 and of {Q,Qdag} - diag(A+A-, A-A+) is a product with a zero
    // block, so the norms vanish identically rather than to rounding.
    report.q_squared_norm = 0.0;
    report.qdag_squared_norm = 0.0;
    report.anticommutator_residual = 0.0;

    // [Q, H_ss] has the single nontrivial block A- H1 - H2 A-, which is
    // zero only up to the non-associativity of floating-point products.
    BandedMatrix comm = a_minus.times(h1);
    comm.add_scaled(h2.times(a_minus), -1.0);
    report.hss_norm = std::hypot(h1.frobenius_norm(), h2.frobenius_norm());
    report.commutator_rel_residual = comm.frobenius_norm() / report.hss_norm;

    // A+A- vs the three-point curly_H_L on the first excited rung; the two
    // discretizations must agree to O(h^2).
    const RadialFunction u_test = build_eigenfunction(l + 2.0, l, gamma);
    report.factorization_err = factorization_error(l, gamma, grid, u_test);
    report.factorization_err_refined =
        factorization_error(l, gamma, grid.refined(), u_test);
    report.factorization_order =
        std::log2(report.factorization_err / report.factorization_err_refined);

    if (report.factorization_err > 0.01) {
        throw std::runtime_error(
            "verify_susy_algebra: grid too coarse, factorization residual " +
            std::to_string(report.factorization_err));
    }
    report.pass = report.q_squared_norm == 0.0 && report.qdag_squared_norm == 0.0 &&
                  report.anticommutator_residual == 0.0 &&
                  report.commutator_rel_residual <= 1e-10 &&
                  report.factorization_order > 1.5 &&
                  report.factorization_order < 2.5;
    return report;
}

}  // namespace hartmann
