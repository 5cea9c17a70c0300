#include "hartmann/oracle.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hartmann {

namespace {

// Lowest k eigenpairs of the symmetric tridiagonal matrix (diag, offdiag)
// via LAPACK's dstevr.  Eigenvalues ascending, eigenvectors unit Euclidean.
struct TriEigen {
    std::vector<double> values;
    std::vector<std::vector<double>> vectors;
};

TriEigen tridiag_lowest(std::vector<double> diag, std::vector<double> offdiag,
                        int k, bool want_vectors) {
    const lapack_int n = static_cast<lapack_int>(diag.size());
    if (k < 1 || k > n) {
        throw std::invalid_argument("tridiag_lowest: bad eigenpair count");
    }
    offdiag.resize(std::max<std::size_t>(diag.size(), 1), 0.0);
    std::vector<double> w(n);
    std::vector<double> z(want_vectors ? static_cast<std::size_t>(n) * k : 1);
    std::vector<lapack_int> isuppz(2 * std::max(1, k));
    lapack_int found = 0;
    const lapack_int info = LAPACKE_dstevr(
        LAPACK_COL_MAJOR, want_vectors ? 'V' : 'N', 'I', n, diag.data(),
        offdiag.data(), 0.0, 0.0, 1, k, 0.0, &found, w.data(), z.data(),
        n, isuppz.data());
    if (info != 0) {
        throw std::runtime_error("tridiag_lowest: LAPACKE_dstevr failed, info = " +
                                 std::to_string(info));
    }
    if (found < k) {
        throw std::runtime_error("tridiag_lowest: fewer eigenvalues than requested");
    }
    TriEigen out;
    out.values.assign(w.begin(), w.begin() + k);
    if (want_vectors) {
        out.vectors.resize(k);
        for (int j = 0; j < k; ++j) {
            out.vectors[j].assign(z.begin() + static_cast<std::size_t>(j) * n,
                                  z.begin() + static_cast<std::size_t>(j + 1) * n);
        }
    }
    return out;
}

// Eigenpairs of -(1/2) d^2/dx^2 + V on the interior points of `grid`,
// Dirichlet at both ends.  Vectors come back on the full grid, normalized
// so that h * sum u_i^2 = 1 (trapezoid measure with zero endpoints).
TriEigen schroedinger_lowest(const std::function<double(double)>& potential,
                             const Grid& grid, int k, bool want_vectors) {
    const int m = grid.n_points - 2;
    const double h = grid.spacing();
    const double inv_h2 = 1.0 / (h * h);
    std::vector<double> diag(m), off(m > 1 ? m - 1 : 0);
    for (int i = 0; i < m; ++i) {
        diag[i] = inv_h2 + potential(grid.point(i + 1));
    }
    std::fill(off.begin(), off.end(), -0.5 * inv_h2);
    TriEigen eig = tridiag_lowest(std::move(diag), std::move(off), k, want_vectors);
    if (want_vectors) {
        const double scale = 1.0 / std::sqrt(h);
        for (auto& v : eig.vectors) {
            std::vector<double> full(grid.n_points, 0.0);
            for (int i = 0; i < m; ++i) full[i + 1] = v[i] * scale;
            // Fix the overall sign: first appreciable entry positive.
            for (double x : full) {
                if (std::abs(x) > 1e-8) {
                    if (x < 0.0)
                        for (double& y : full) y = -y;
                    break;
                }
            }
            v = std::move(full);
        }
    }
    return eig;
}

// Doubling gate: an eigenvalue is accepted only if one grid doubling moves
// it by less than 10% of the downstream tolerance, measured in the same
// metric as that tolerance (relative for the radial spectrum, absolute for
// the Morse problems whose shifted ground state sits at zero).
EigenResult solve_with_doubling(const std::function<double(double)>& potential,
                                const Grid& grid, int k, double tol,
                                bool relative_gate, const char* what) {
    if (k < 1) {
        throw std::invalid_argument(std::string(what) + ": k must be >= 1");
    }
    if (grid.n_points - 2 < k) {
        throw std::invalid_argument(std::string(what) + ": grid too small for k");
    }
    TriEigen coarse = schroedinger_lowest(potential, grid, k, true);
    TriEigen fine = schroedinger_lowest(potential, grid.refined(), k, false);
    for (int i = 0; i < k; ++i) {
        double shift = std::abs(coarse.values[i] - fine.values[i]);
        if (relative_gate) shift /= std::max(std::abs(fine.values[i]), 1e-12);
        if (shift >= 0.1 * tol) {
            throw std::runtime_error(
                std::string(what) + ": not converged; one grid doubling moves "
                "eigenvalue " + std::to_string(i) + " by " +
                std::to_string(shift) + (relative_gate ? " relative" : "") +
                " (gate " + std::to_string(0.1 * tol) + ")");
        }
    }
    EigenResult out;
    out.eigenvalues = std::move(coarse.values);
    out.eigenvectors = std::move(coarse.vectors);
    out.convergence_estimate = std::abs(out.eigenvalues[0] - fine.values[0]);
    return out;
}

}  // namespace

Grid::Grid(double x_min_in, double x_max_in, int n_points_in)
    : x_min(x_min_in), x_max(x_max_in), n_points(n_points_in) {
    if (!(x_min < x_max)) {
        throw std::invalid_argument("Grid: x_min must be < x_max");
    }
    if (n_points < 64) {
        throw std::invalid_argument("Grid: need at least 64 points");
    }
}

Grid default_radial_grid(double n, double gamma) {
    // Classical turning point of the (N, L) tower sits at 2 N^2 / gamma;
    // the decay length is N / gamma.
    const double r_max =
        std::max({60.0, 30.0 * n / gamma, (2.0 * n * n + 20.0 * n) / gamma});
    const double r_min = 1e-8;
    const int points =
        std::max(8000, static_cast<int>(std::ceil((r_max - r_min) / 4.5e-3)) + 1);
    return Grid(r_min, r_max, points);
}

Grid default_morse_grid(double n_label) {
    const double x_c = std::log(n_label * n_label);
    return Grid(x_c - 12.0, x_c + 6.0, 4001);
}

EigenResult solve_radial(double l, double gamma, const Grid& grid, int k,
                         double tol) {
    if (!(grid.x_min > 0.0)) {
        throw std::invalid_argument("solve_radial: grid must exclude the origin");
    }
    if (!(l >= 0.0)) {
        throw std::invalid_argument("solve_radial: L must be nonnegative");
    }
    const double centrifugal = 0.5 * l * (l + 1.0);
    auto potential = [l, gamma, centrifugal](double r) {
        return centrifugal / (r * r) - gamma / r;
    };
    EigenResult result =
        solve_with_doubling(potential, grid, k, tol, true, "solve_radial");
    if (result.eigenvalues[0] >= 0.0) {
        throw std::runtime_error("solve_radial: no bound states (lowest eigenvalue " +
                                 std::to_string(result.eigenvalues[0]) + " >= 0)");
    }
    return result;
}

EigenResult solve_fullline(const std::function<double(double)>& potential,
                           const Grid& grid, int k, double bound_threshold,
                           double tol) {
    EigenResult result =
        solve_with_doubling(potential, grid, k, tol, false, "solve_fullline");
    if (std::isfinite(bound_threshold)) {
        std::size_t bound = 0;
        while (bound < result.eigenvalues.size() &&
               result.eigenvalues[bound] < bound_threshold) {
            ++bound;
        }
        if (bound < result.eigenvalues.size()) {
            result.eigenvalues.resize(bound);
            result.eigenvectors.resize(bound);
            result.truncated = true;
        }
    }
    return result;
}

double quadrature(const std::function<double(double)>& f, double a, double b) {
    if (!(a < b)) {
        throw std::invalid_argument("quadrature: require a < b");
    }
    auto simpson = [&](int intervals) {
        const double h = (b - a) / intervals;
        double acc = f(a) + f(b);
        for (int i = 1; i < intervals; ++i) {
            acc += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
        }
        return acc * h / 3.0;
    };
    double prev = simpson(64);
    for (int intervals = 128; intervals <= (1 << 22); intervals *= 2) {
        const double cur = simpson(intervals);
        // Simpson is fourth order, so the Richardson estimate is |cur-prev|/15.
        const double err = std::abs(cur - prev) / 15.0;
        if (err <= 1e-10 * std::max(1.0, std::abs(cur))) {
            return cur + (cur - prev) / 15.0;
        }
        prev = cur;
    }
    throw std::runtime_error("quadrature: did not converge under refinement");
}

MatchReport compare_spectra(const EigenResult& a, const EigenResult& b,
                            bool drop_ground, double tol) {
    std::vector<double> ref(a.eigenvalues.begin() + (drop_ground ? 1 : 0),
                            a.eigenvalues.end());
    if (ref.size() != b.eigenvalues.size()) {
        throw std::invalid_argument(
            "compare_spectra: spectra have different lengths after pairing (" +
            std::to_string(ref.size()) + " vs " +
            std::to_string(b.eigenvalues.size()) + ")");
    }
    MatchReport report;
    report.tol = tol;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        report.pairs.emplace_back(ref[i], b.eigenvalues[i]);
        report.max_abs_mismatch =
            std::max(report.max_abs_mismatch, std::abs(ref[i] - b.eigenvalues[i]));
    }
    report.pass = report.max_abs_mismatch <= tol;
    return report;
}

}  // namespace hartmann
