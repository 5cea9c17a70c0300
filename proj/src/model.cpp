#include "hartmann/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hartmann {

bool is_nonneg_integer(double x, double tol) {
    return x > -tol && std::abs(x - std::round(x)) <= tol;
}

HartmannParams::HartmannParams(double eta_in, double sigma_in)
    : eta(eta_in), sigma(sigma_in) {
    if (!(eta > 0.0) || !(sigma > 0.0)) {
        throw std::invalid_argument("HartmannParams: eta and sigma must be positive");
    }
}

QuantumNumbers QuantumNumbers::from_labels(int m, const HartmannParams& params,
                                           int nu_prime, int n_prime) {
    if (nu_prime < 0 || n_prime < 0) {
        throw std::invalid_argument("QuantumNumbers: nu' and n' must be nonnegative");
    }
    QuantumNumbers q;
    q.m = m;
    q.capital_m = magnetic_to_capital_m(m, params);
    q.nu_prime = nu_prime;
    q.l = q.capital_m + nu_prime;
    q.n_prime = n_prime;
    q.n = q.l + 1.0 + n_prime;
    return q;
}

double magnetic_to_capital_m(int m, const HartmannParams& params) {
    const double es = params.eta * params.sigma;
    return std::sqrt(static_cast<double>(m) * m + es * es);
}

double energy_scaled(double n, double gamma) {
    if (!(n >= 1.0)) {
        throw std::invalid_argument("energy_scaled: N must be >= 1");
    }
    return -gamma * gamma / (2.0 * n * n);
}

double energy_physical(double n, const HartmannParams& params) {
    if (!(n >= 1.0)) {
        throw std::invalid_argument("energy_physical: N must be >= 1");
    }
    return -params.lambda_scale() / (n * n);
}

double kappa(double l, double gamma) {
    if (!(l >= 0.0)) {
        throw std::invalid_argument("kappa: L must be nonnegative");
    }
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("kappa: gamma must be positive");
    }
    return gamma / (l + 1.0);
}

std::vector<double> allowed_l_values(double n, double capital_m) {
    const double diff = n - capital_m;
    if (!(diff >= 1.0 - kIntegerTol) || !is_nonneg_integer(diff)) {
        throw std::invalid_argument(
            "allowed_l_values: N - |M| must be a positive integer, got " +
            std::to_string(diff));
    }
    const int count = static_cast<int>(std::llround(diff));
    std::vector<double> ls;
    ls.reserve(count);
    // Built upward from |M| so the lowest entry is exactly capital_m.
    for (int j = count - 1; j >= 0; --j) {
        ls.push_back(capital_m + j);
    }
    return ls;
}

}  // namespace hartmann
