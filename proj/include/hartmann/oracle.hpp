#pragma once

#include <functional>
#include <limits>
#include <utility>
#include <vector>

// Brute-force validation path: three-point finite-difference eigensolvers
// for the half-line radial problem and for full-line potentials, plus
// composite Simpson quadrature.  Nothing here touches the symbolic ladder
// machinery; agreement between the two routes is the point.

namespace hartmann {

struct Grid {
    double x_min = 0.0;
    double x_max = 1.0;
    int n_points = 64;

    Grid() = default;
    Grid(double x_min_in, double x_max_in, int n_points_in);

    double spacing() const { return (x_max - x_min) / (n_points - 1); }
    double point(int i) const { return x_min + i * spacing(); }

    // Same interval at half the spacing.
    Grid refined() const { return Grid(x_min, x_max, 2 * n_points - 1); }
};

struct EigenResult {
    // Ascending; eigenvectors are sampled on the full grid (endpoint values
    // zero) and normalized under the trapezoid measure.
    std::vector<double> eigenvalues;
    std::vector<std::vector<double>> eigenvectors;
    // Shift of the lowest eigenvalue under one grid doubling.
    double convergence_estimate = 0.0;
    // Set when fewer bound states than requested exist below the threshold.
    bool truncated = false;
};

// Radial grid covering every bound state up to level N, sized so the
// three-point truncation error stays well below the 1e-4 eigenvalue
// tolerance.  The inner cutoff sits at 1e-8: a Dirichlet wall at radius a
// shifts an s-wave level by |u'(0)|^2 a / 2, so a larger cutoff would both
// eat the error budget of the ground state and put a floor under
// grid-doubling studies.
Grid default_radial_grid(double n, double gamma);

// Morse problems live on [ln(N^2) - 12, ln(N^2) + 6]: bound states decay
// like e^{(L+1/2)x} to the left of the well minimum at x = ln(N^2) and
// super-exponentially to the right.
Grid default_morse_grid(double n_label);

// Lowest k eigenpairs of H_L = -(1/2) d^2/dr^2 + L(L+1)/(2r^2) - gamma/r
// with Dirichlet ends.  Throws on an empty bound spectrum (lowest
// eigenvalue nonnegative) or when one grid doubling moves any requested
// eigenvalue by 10% or more of `tol` (relative).
EigenResult solve_radial(double l, double gamma, const Grid& grid, int k,
                         double tol = 1e-4);

// Lowest k eigenpairs of -(1/2) d^2/dx^2 + V(x) with Dirichlet ends.  When
// `bound_threshold` is finite, eigenvalues at or above it are dropped and
// the result is flagged truncated if fewer than k remain.  The doubling
// gate here is absolute (the shifted Morse ground state sits at zero).
EigenResult solve_fullline(
    const std::function<double(double)>& potential, const Grid& grid, int k,
    double bound_threshold = std::numeric_limits<double>::infinity(),
    double tol = 1e-3);

// Composite Simpson with interval doubling until the Richardson error
// estimate drops below 1e-10 relative.  Throws on non-convergence.
double quadrature(const std::function<double(double)>& f, double a, double b);

struct MatchReport {
    std::vector<std::pair<double, double>> pairs;
    double max_abs_mismatch = 0.0;
    double tol = 0.0;
    bool pass = false;
};

// Pairs b's eigenvalues against a's, skipping a's lowest when drop_ground.
// Throws when the counts differ after the skip.
MatchReport compare_spectra(const EigenResult& a, const EigenResult& b,
                            bool drop_ground, double tol);

}  // namespace hartmann
