#pragma once

#include <vector>

// Closed class of radial functions r^s e^(-kappa r) P(r) with real exponent
// s and polynomial P.  The ladder operators
//
//   A^{+-}_L = (1/sqrt(2)) (-+ d/dr - (L+1)/r + gamma/(L+1))
//
// and the radial Hamiltonian
//
//   H_L = -(1/2) d^2/dr^2 + L(L+1)/(2 r^2) - gamma/r
//
// map the class into itself, so every bound eigenfunction of the Hartmann
// radial problem is manipulated exactly (up to floating-point coefficient
// arithmetic).  Inner products under the half-line measure dr reduce
// termwise to gamma integrals
//
//   int_0^inf r^a e^(-b r) dr = Gamma(a+1) / b^(a+1),  a > -1, b > 0,
//
// evaluated through log-gamma to avoid overflow.  The exponent s is a real
// number throughout; |M| is irrational for generic parameters and nothing
// here may assume integer powers of the prefactor.

namespace hartmann {

// Dense polynomial in r, coefficient k multiplies r^k.  The zero polynomial
// is the empty coefficient list.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(std::vector<double> coeffs);

    static Polynomial constant(double c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    int lowest_power() const;
    double coeff(int k) const;
    const std::vector<double>& coefficients() const { return coeffs_; }

    double evaluate(double r) const;
    Polynomial derivative() const;
    Polynomial times_r() const;
    Polynomial times(const Polynomial& other) const;
    Polynomial scaled(double factor) const;

    Polynomial& add_scaled(const Polynomial& other, double factor);

    double max_abs_coeff() const;

    // Drops coefficients with |c| <= rel_threshold * max|c| and trailing
    // zeros.  Exact cancellations (e.g. A^- annihilating a ground state)
    // otherwise leave float dust that breaks degree logic.
    void trim(double rel_threshold);

  private:
    std::vector<double> coeffs_;
};

inline constexpr double kCoeffTrimRel = 1e-13;

// r^s e^(-kappa r) P(r).  Canonical form: P(0) != 0 (leading powers of r are
// folded into s) and the squared function is integrable at the origin,
// 2s > -1.  The zero function has an empty polynomial.
struct RadialFunction {
    double s = 0.0;
    double kappa = 1.0;
    Polynomial poly;

    RadialFunction() = default;
    RadialFunction(double s_in, double kappa_in, Polynomial poly_in);

    // Canonicalizes without the origin-integrability check.  Derivatives of
    // class members need not stay square-integrable; only ladder and
    // Hamiltonian images are required to.
    static RadialFunction unchecked(double s, double kappa, Polynomial poly);

    bool is_zero() const { return poly.is_zero(); }
    double evaluate(double r) const;
};

enum class Ladder { plus, minus };

// d/dr [r^s e^(-kr) P] = r^(s-1) e^(-kr) [s P + r P' - k r P].
RadialFunction differentiate(const RadialFunction& f);

// A^{+-}_L f; the 1/r term lowers the exponent by one and the result is
// re-canonicalized.  Throws if the image is not square-integrable at the
// origin.
RadialFunction apply_ladder(double l, double gamma, Ladder sign,
                            const RadialFunction& f);

// H_L f = -(1/2) f'' + [L(L+1)/(2 r^2)] f - (gamma/r) f.
RadialFunction apply_radial_hamiltonian(double l, double gamma,
                                        const RadialFunction& f);

// a f + b g; requires matching decay rates and an integer exponent offset.
RadialFunction linear_combination(double a, const RadialFunction& f,
                                  double b, const RadialFunction& g);

// int_0^inf f g dr via termwise gamma integrals.  Throws when the combined
// exponent makes the integral divergent at the origin.
double inner_product(const RadialFunction& f, const RadialFunction& g);

double norm(const RadialFunction& f);

// f / ||f|| with the sign fixed so the lowest-power coefficient is positive.
RadialFunction normalize(const RadialFunction& f);

// ln Gamma(x) for x > 0.
double log_gamma(double x);

}  // namespace hartmann
