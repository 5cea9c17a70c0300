#include "hartmann/susy_fullline.hpp"

#include <cmath>
#include <stdexcept>

namespace hartmann {

MorseProblem::MorseProblem(double n_label_in, double delta_in, Sector sector_in)
    : n_label(n_label_in), delta(delta_in), sector(sector_in) {
    if (!(n_label > 0.0) || !(delta > 0.0)) {
        throw std::invalid_argument("MorseProblem: N and delta must be positive");
    }
}

double MorseProblem::potential(double x) const {
    const double ex = std::exp(x);
    const double well = (sector == Sector::bose) ? ex : (1.0 - 1.0 / n_label) * ex;
    return ex * ex / (2.0 * n_label * n_label) - well + shift();
}

double to_morse_coordinates(double gamma, double r) {
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("to_morse_coordinates: gamma must be positive");
    }
    if (!(r > 0.0)) {
        throw std::domain_error("to_morse_coordinates: r must be positive");
    }
    return std::log(gamma * r);
}

double LineFunction::radius_at(double x) const { return std::exp(x) / gamma; }

double LineFunction::operator()(double x) const {
    return std::exp(-0.5 * x) * u.evaluate(radius_at(x));
}

LineFunction transform_eigenfunction(const RadialFunction& u, double gamma) {
    if (!(gamma > 0.0)) {
        throw std::invalid_argument("transform_eigenfunction: gamma must be positive");
    }
    return LineFunction{u, gamma};
}

double line_norm_squared(const RadialFunction& u, double gamma) {
    if (u.is_zero()) return 0.0;
    // The measure picks up 1/r^2: dividing the exponent by one power of r
    // on each factor keeps the integral in the gamma-function class.
    const RadialFunction over_r = RadialFunction::unchecked(u.s - 1.0, u.kappa, u.poly);
    return inner_product(over_r, over_r) / gamma;
}

double susy_eigenvalue(double n, double l) {
    const double a = n - 0.5;
    const double b = l + 0.5;
    return 0.5 * (a * a - b * b);
}

double morse_superpotential(double n, double x) {
    if (!(n > 0.0)) {
        throw std::invalid_argument("morse_superpotential: N must be positive");
    }
    return std::exp(x) / n + 0.5 - n;
}

double morse_ricatti_residual(double n, double x) {
    const double w = morse_superpotential(n, x);
    const double w_prime = std::exp(x) / n;
    const MorsePartnerPotentials pots = morse_partner_potentials(n);
    return 0.5 * (w * w - w_prime) - pots.v1(x);
}

double MorsePartnerPotentials::v1(double x) const {
    const double ex = std::exp(x);
    const double c = n_label - 0.5;
    return ex * ex / (2.0 * n_label * n_label) - ex + 0.5 * c * c;
}

double MorsePartnerPotentials::v2(double x) const {
    const double ex = std::exp(x);
    const double c = n_label - 0.5;
    return ex * ex / (2.0 * n_label * n_label) - (1.0 - 1.0 / n_label) * ex +
           0.5 * c * c;
}

MorsePartnerPotentials morse_partner_potentials(double n) {
    if (!(n > 0.0)) {
        throw std::invalid_argument("morse_partner_potentials: N must be positive");
    }
    return MorsePartnerPotentials{n};
}

PartnerMapResult partner_map(double n, double delta) {
    if (!(n > 1.0)) {
        throw std::invalid_argument("partner_map: no partner below N = 1");
    }
    if (!(delta > 0.0)) {
        throw std::invalid_argument("partner_map: delta must be positive");
    }
    PartnerMapResult result;
    result.n_prime = n - 1.0;
    result.delta_prime = (1.0 - 1.0 / n) * delta;
    result.energy_check = result.delta_prime / result.n_prime - delta / n;
    return result;
}

IsospectralityReport verify_partner_spectra(double n, const Grid& grid,
                                            double tol) {
    if (!(n >= 2.0)) {
        throw std::invalid_argument("verify_partner_spectra: need N >= 2");
    }
    const MorsePartnerPotentials pots = morse_partner_potentials(n);
    const double threshold = MorseProblem(n, 1.0, Sector::bose).shift();

    // The Morse well at label N holds ceil(N - 1/2) bound states; ask for
    // one extra so the threshold filter has something to discard.
    const int n_bound = static_cast<int>(std::ceil(n - 0.5));
    auto bose = solve_fullline([&](double x) { return pots.v1(x); }, grid,
                               n_bound + 1, threshold, tol);
    auto fermi = solve_fullline([&](double x) { return pots.v2(x); }, grid,
                                n_bound, threshold, tol);

    IsospectralityReport report;
    report.n_label = n;
    report.tol = tol;
    report.bose_eigenvalues = bose.eigenvalues;
    report.fermi_eigenvalues = fermi.eigenvalues;
    if (bose.eigenvalues.empty()) {
        throw std::runtime_error("verify_partner_spectra: no bound Bose states");
    }
    report.missing_ground = bose.eigenvalues.front();

    const MatchReport match = compare_spectra(bose, fermi, true, tol);
    report.matched = match.pairs;
    report.max_abs_mismatch = match.max_abs_mismatch;

    // Independent reference: the SUSY eigenvalue ladder over the L tower.
    for (std::size_t k = 0; k < bose.eigenvalues.size(); ++k) {
        const double l = n - 1.0 - static_cast<double>(k);
        report.reference_eigenvalues.push_back(susy_eigenvalue(n, l));
        report.max_reference_error =
            std::max(report.max_reference_error,
                     std::abs(bose.eigenvalues[k] - report.reference_eigenvalues[k]));
    }
    report.pass = match.pass && report.max_reference_error <= tol;
    return report;
}

}  // namespace hartmann
