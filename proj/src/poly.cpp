#include "wilm/poly.hpp"
#include "wilm/error.hpp"

namespace wilm {

int RealPoly::degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k)
        if (!coeffs[static_cast<size_t>(k)].is_zero())
            return k;
    return -1;
}

Dyadic RealPoly::eval(const Dyadic& x) const {
    Dyadic acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RealPoly RealPoly::derivative() const {
    RealPoly d;
    for (size_t k = 1; k < coeffs.size(); ++k)
        d.coeffs.push_back(Dyadic(static_cast<long>(k)) * coeffs[k]);
    return d;
}

int ComplexPoly::degree() const {
    for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
        const auto& c = coeffs[static_cast<size_t>(k)];
        if (!c.first.is_zero() || !c.second.is_zero())
            return k;
    }
    return -1;
}

void WilmshurstInstance::validate() const {
    if (m < 1)
        throw ParameterError("m >= 1 required");
    if (n <= m)
        throw ParameterError("n > m required");
    if (epsilon.sign() <= 0)
        throw ParameterError("epsilon > 0 required");
    if (q.degree() != static_cast<int>(m))
        throw ParameterError("deg q must equal m");
}

Dyadic cauchy_root_bound(const RealPoly& poly) {
    int d = poly.degree();
    if (d < 1)
        throw ParameterError("cauchy_root_bound requires degree >= 1");
    const Dyadic lead = poly.coeffs[static_cast<size_t>(d)].abs();
    Dyadic max_abs;
    for (int k = 0; k < d; ++k) {
        Dyadic a = poly.coeffs[static_cast<size_t>(k)].abs();
        if (a > max_abs)
            max_abs = a;
    }
    if (max_abs.is_zero())
        return Dyadic(1);
    mpq_class ratio = max_abs.to_mpq() / lead.to_mpq();
    return Dyadic(1) + Dyadic::from_mpq_round_up(ratio, 32);
}

std::pair<Dyadic, Dyadic> eval_harmonic(const WilmshurstInstance& inst,
                                        const Dyadic& re, const Dyadic& im) {
    // Powers z^k by exact complex multiplication.
    Dyadic px(1), py; // z^0
    Dyadic re_q;
    for (unsigned k = 0; k <= inst.n; ++k) {
        if (k <= inst.m && k < inst.q.coeffs.size()) {
            const auto& [a, b] = inst.q.coeffs[k];
            re_q = re_q + a * px - b * py;
        }
        if (k == inst.n)
            break;
        Dyadic nx = px * re - py * im;
        py = px * im + py * re;
        px = nx;
    }
    // After the loop (px, py) = z^n.
    Dyadic re_h = inst.epsilon * px + Dyadic(2) * re_q;
    Dyadic im_h = inst.epsilon * py;
    return {re_h, im_h};
}

} // namespace wilm
