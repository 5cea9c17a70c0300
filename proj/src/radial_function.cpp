#include "hartmann/radial_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hartmann/model.hpp"

namespace hartmann {

namespace {

// Minimum admissible origin exponent: 2s > -1 keeps int |f|^2 dr finite.
constexpr double kMinOriginExponent = -0.5;

void check_origin_integrability(double s, const Polynomial& p) {
    if (p.is_zero()) return;
    if (s + p.lowest_power() <= kMinOriginExponent + 1e-12) {
        throw std::domain_error(
            "RadialFunction: exponent violates square-integrability at the origin");
    }
}

}  // namespace

Polynomial::Polynomial(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

Polynomial Polynomial::constant(double c) {
    return Polynomial(std::vector<double>{c});
}

int Polynomial::lowest_power() const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] != 0.0) return static_cast<int>(k);
    }
    return -1;
}

double Polynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0.0;
    return coeffs_[static_cast<std::size_t>(k)];
}

double Polynomial::evaluate(double r) const {
    double acc = 0.0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        acc = acc * r + coeffs_[k];
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    }
    return Polynomial(std::move(d));
}

Polynomial Polynomial::times_r() const {
    if (is_zero()) return Polynomial();
    std::vector<double> c(coeffs_.size() + 1, 0.0);
    std::copy(coeffs_.begin(), coeffs_.end(), c.begin() + 1);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::times(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<double> c(coeffs_.size() + other.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            c[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(double factor) const {
    std::vector<double> c(coeffs_);
    for (double& x : c) x *= factor;
    return Polynomial(std::move(c));
}

Polynomial& Polynomial::add_scaled(const Polynomial& other, double factor) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0.0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] += factor * other.coeffs_[k];
    }
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
    return *this;
}

double Polynomial::max_abs_coeff() const {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

void Polynomial::trim(double rel_threshold) {
    const double cutoff = rel_threshold * max_abs_coeff();
    for (double& c : coeffs_) {
        if (std::abs(c) <= cutoff) c = 0.0;
    }
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

RadialFunction::RadialFunction(double s_in, double kappa_in, Polynomial poly_in)
    : RadialFunction(unchecked(s_in, kappa_in, std::move(poly_in))) {
    check_origin_integrability(s, poly);
}

RadialFunction RadialFunction::unchecked(double s, double kappa, Polynomial poly) {
    if (!(kappa > 0.0)) {
        throw std::invalid_argument("RadialFunction: kappa must be positive");
    }
    RadialFunction f;
    f.s = s;
    f.kappa = kappa;
    f.poly = std::move(poly);
    f.poly.trim(kCoeffTrimRel);
    // Fold leading powers of r into the exponent so poly(0) != 0.
    const int low = f.poly.lowest_power();
    if (low > 0) {
        std::vector<double> shifted(f.poly.coefficients().begin() + low,
                                    f.poly.coefficients().end());
        f.poly = Polynomial(std::move(shifted));
        f.s += low;
    }
    return f;
}

double RadialFunction::evaluate(double r) const {
    if (r < 0.0) {
        throw std::domain_error("RadialFunction::evaluate: r must be nonnegative");
    }
    if (is_zero()) return 0.0;
    if (r == 0.0) {
        if (s < 0.0) {
            throw std::domain_error("RadialFunction::evaluate: singular at r = 0");
        }
        return s == 0.0 ? poly.evaluate(0.0) : 0.0;
    }
    return std::pow(r, s) * std::exp(-kappa * r) * poly.evaluate(r);
}

RadialFunction differentiate(const RadialFunction& f) {
    if (f.is_zero()) return RadialFunction();
    // s P + r P' - kappa r P at exponent s - 1.
    Polynomial q = f.poly.scaled(f.s);
    q.add_scaled(f.poly.derivative().times_r(), 1.0);
    q.add_scaled(f.poly.times_r(), -f.kappa);
    if (q.is_zero()) return RadialFunction();
    return RadialFunction::unchecked(f.s - 1.0, f.kappa, std::move(q));
}

RadialFunction apply_ladder(double l, double gamma, Ladder sign,
                            const RadialFunction& f) {
    if (!(l >= 0.0) || !(gamma > 0.0)) {
        throw std::invalid_argument("apply_ladder: require L >= 0 and gamma > 0");
    }
    if (f.is_zero()) return RadialFunction();
    const double deriv_factor = (sign == Ladder::plus) ? -1.0 : 1.0;
    // All three terms live at exponent s - 1:
    //   -+ f' = r^(s-1) e [ -+ (s P + r P' - kappa r P) ]
    //   -(L+1) f / r = r^(s-1) e [ -(L+1) P ]
    //   (gamma/(L+1)) f = r^(s-1) e [ (gamma/(L+1)) r P ]
    Polynomial q = f.poly.scaled(deriv_factor * f.s - (l + 1.0));
    q.add_scaled(f.poly.derivative().times_r(), deriv_factor);
    q.add_scaled(f.poly.times_r(), -deriv_factor * f.kappa + gamma / (l + 1.0));
    q = q.scaled(1.0 / std::sqrt(2.0));
    q.trim(kCoeffTrimRel);
    if (q.is_zero()) return RadialFunction();
    return RadialFunction(f.s - 1.0, f.kappa, std::move(q));
}

RadialFunction apply_radial_hamiltonian(double l, double gamma,
                                        const RadialFunction& f) {
    if (!(l >= 0.0) || !(gamma > 0.0)) {
        throw std::invalid_argument(
            "apply_radial_hamiltonian: require L >= 0 and gamma > 0");
    }
    if (f.is_zero()) return RadialFunction();
    const RadialFunction fpp = differentiate(differentiate(f));
    // Common exponent s - 2:
    //   -(1/2) f''                -> -(1/2) Q2
    //   L(L+1)/(2 r^2) f          -> (L(L+1)/2) P
    //   -(gamma/r) f              -> -gamma r P
    Polynomial q = f.poly.scaled(0.5 * l * (l + 1.0));
    if (!fpp.is_zero()) {
        // fpp may have been re-canonicalized; realign to exponent s - 2.
        const int offset = static_cast<int>(std::llround(fpp.s - (f.s - 2.0)));
        Polynomial q2 = fpp.poly;
        for (int i = 0; i < offset; ++i) q2 = q2.times_r();
        q.add_scaled(q2, -0.5);
    }
    q.add_scaled(f.poly.times_r(), -gamma);
    q.trim(kCoeffTrimRel);
    if (q.is_zero()) return RadialFunction();
    return RadialFunction(f.s - 2.0, f.kappa, std::move(q));
}

RadialFunction linear_combination(double a, const RadialFunction& f,
                                  double b, const RadialFunction& g) {
    if (f.is_zero() && g.is_zero()) return RadialFunction();
    if (f.is_zero()) {
        if (b == 0.0 || g.is_zero()) return RadialFunction();
        return RadialFunction(g.s, g.kappa, g.poly.scaled(b));
    }
    if (g.is_zero()) {
        if (a == 0.0) return RadialFunction();
        return RadialFunction(f.s, f.kappa, f.poly.scaled(a));
    }
    if (std::abs(f.kappa - g.kappa) > 1e-12 * std::max(f.kappa, g.kappa)) {
        throw std::invalid_argument(
            "linear_combination: decay rates differ; result leaves the class");
    }
    const double offset = g.s - f.s;
    if (!is_nonneg_integer(std::abs(offset))) {
        throw std::invalid_argument(
            "linear_combination: exponents differ by a non-integer");
    }
    const double s0 = std::min(f.s, g.s);
    const int shift_f = static_cast<int>(std::llround(f.s - s0));
    const int shift_g = static_cast<int>(std::llround(g.s - s0));
    Polynomial pf = f.poly;
    for (int i = 0; i < shift_f; ++i) pf = pf.times_r();
    Polynomial pg = g.poly;
    for (int i = 0; i < shift_g; ++i) pg = pg.times_r();
    Polynomial q = pf.scaled(a);
    q.add_scaled(pg, b);
    q.trim(kCoeffTrimRel);
    if (q.is_zero()) return RadialFunction();
    return RadialFunction(s0, f.kappa, std::move(q));
}

double inner_product(const RadialFunction& f, const RadialFunction& g) {
    if (f.is_zero() || g.is_zero()) return 0.0;
    const double a0 = f.s + g.s;
    const double b = f.kappa + g.kappa;
    const Polynomial prod = f.poly.times(g.poly);
    if (a0 + prod.lowest_power() <= -1.0 + 1e-12) {
        throw std::domain_error("inner_product: integral divergent at the origin");
    }
    const double log_b = std::log(b);
    double acc = 0.0;
    for (int k = 0; k <= prod.degree(); ++k) {
        const double c = prod.coeff(k);
        if (c == 0.0) continue;
        const double a = a0 + k;
        acc += c * std::exp(log_gamma(a + 1.0) - (a + 1.0) * log_b);
    }
    return acc;
}

double norm(const RadialFunction& f) {
    if (f.is_zero()) return 0.0;
    return std::sqrt(inner_product(f, f));
}

RadialFunction normalize(const RadialFunction& f) {
    if (f.is_zero()) {
        throw std::domain_error("normalize: zero function");
    }
    const double nrm = norm(f);
    if (!(nrm > 0.0) || !std::isfinite(nrm)) {
        throw std::domain_error("normalize: norm is not finite and positive");
    }
    double scale = 1.0 / nrm;
    if (f.poly.coeff(f.poly.lowest_power()) < 0.0) scale = -scale;
    return RadialFunction(f.s, f.kappa, f.poly.scaled(scale));
}

double log_gamma(double x) {
    if (!(x > 0.0)) {
        throw std::domain_error("log_gamma: argument must be positive");
    }
    // lgamma_r instead of std::lgamma: the latter races on the global
    // signgam, and everything here is documented reentrant.
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

}  // namespace hartmann
