#ifndef WILM_POLY_HPP
#define WILM_POLY_HPP

#include "wilm/dyadic.hpp"

#include <utility>
#include <vector>

namespace wilm {

// Real polynomial with exact dyadic coefficients, coeffs[k] = coefficient
// of x^k.
struct RealPoly {
    std::vector<Dyadic> coeffs;

    RealPoly() = default;
    explicit RealPoly(std::vector<Dyadic> c) : coeffs(std::move(c)) {}

    // Largest k with nonzero coefficient, -1 for the zero polynomial.
    int degree() const;
    Dyadic eval(const Dyadic& x) const;
    RealPoly derivative() const;
};

// Complex polynomial q(z) = sum (a_k + i b_k) z^k.
struct ComplexPoly {
    std::vector<std::pair<Dyadic, Dyadic>> coeffs;

    int degree() const;
};

// The harmonic family h(z) = eps z^n + q(z) + conj(q(z)).
struct WilmshurstInstance {
    unsigned n = 0;
    unsigned m = 0;
    Dyadic epsilon;
    ComplexPoly q;

    // Throws ParameterError unless n > m >= 1, epsilon > 0, deg q == m.
    void validate() const;
};

// All real roots of poly lie in [-R, R], R = 1 + max_{k<d}|c_k| / |c_d|.
Dyadic cauchy_root_bound(const RealPoly& poly);

// Returns (Re h(z), Im h(z)) at z = re + i*im; Im h(z) = eps * Im(z^n)
// exactly.
std::pair<Dyadic, Dyadic> eval_harmonic(const WilmshurstInstance& inst,
                                        const Dyadic& re, const Dyadic& im);

} // namespace wilm

#endif
