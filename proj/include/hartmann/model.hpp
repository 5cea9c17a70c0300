#pragma once

#include <vector>

// Physical parameters and quantum-number bookkeeping for the ring-shaped
// Hartmann potential
//
//   V(r, theta) = eta sigma^2 eps0 (2 a0 / r - eta a0^2 / (r^2 sin^2 theta))
//
// in atomic units (mu = hbar = e = 1, so a0 = 1 and eps0 = -1/2).  After
// separation of variables the radial problem is Coulomb-like with coupling
// gamma = eta sigma^2 and energy scale Lambda = eta^2 sigma^4 / 2.
//
// The angular sector only enters through |M| = sqrt(m^2 + eta^2 sigma^2);
// |M|, L and N are real-valued in general (|M| is irrational for generic
// eta, sigma), but the differences L - |M| and N - L - 1 are nonnegative
// integers.

namespace hartmann {

// Tolerance used when checking that a real quantum-number difference is an
// integer.  Inputs come from closed-form arithmetic, not iteration.
inline constexpr double kIntegerTol = 1e-9;

bool is_nonneg_integer(double x, double tol = kIntegerTol);

struct HartmannParams {
    double eta;
    double sigma;

    HartmannParams(double eta_in, double sigma_in);

    // Coulomb coupling of the radial equation, gamma = eta sigma^2.
    double gamma() const { return eta * sigma * sigma; }

    // Lambda = eta^2 sigma^4 |eps0| = gamma^2 / 2 in atomic units.
    double lambda_scale() const {
        const double g = gamma();
        return 0.5 * g * g;
    }
};

// (m, |M|, nu', L, n', N) with the consistency relations
//   |M|^2 = m^2 + eta^2 sigma^2,   L = nu' + |M|,   N = L + 1 + n'.
struct QuantumNumbers {
    int m = 0;
    double capital_m = 0.0;
    int nu_prime = 0;
    double l = 0.0;
    int n_prime = 0;
    double n = 1.0;

    static QuantumNumbers from_labels(int m, const HartmannParams& params,
                                      int nu_prime, int n_prime);
};

// |M| = sqrt(m^2 + eta^2 sigma^2).
double magnetic_to_capital_m(int m, const HartmannParams& params);

// eps_N = -gamma^2 / (2 N^2), the eigenvalue of the scaled radial operator.
// Identical to the physical E_N = -Lambda / N^2 in atomic units.
double energy_scaled(double n, double gamma);
double energy_physical(double n, const HartmannParams& params);

// Decay rate of the lowest-rung radial eigenfunction, kappa_L = gamma/(L+1).
double kappa(double l, double gamma);

// L values that share the energy -gamma^2/(2N^2): {N-1, N-2, ..., |M|},
// descending, of length N - |M|.  Throws if N - |M| is not a positive
// integer (within kIntegerTol).
std::vector<double> allowed_l_values(double n, double capital_m);

}  // namespace hartmann
