#include "wilm/restriction.hpp"
#include "wilm/error.hpp"
#include "wilm/trig.hpp"

namespace wilm {

RealPoly LineRestriction::midpoint() const {
    RealPoly p;
    p.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs)
        p.coeffs.push_back(c.midpoint());
    return p;
}

LineRestriction restrict_to_line(const WilmshurstInstance& inst, unsigned j,
                                 unsigned precision_bits) {
    inst.validate();
    if (j >= inst.n)
        throw ParameterError("line index out of range");

    LineRestriction res;
    res.inst = inst;
    res.j = j;
    res.precision_bits = precision_bits;
    res.coeffs.assign(inst.n + 1, Interval());
    res.coeffs[inst.n] = Interval::point(inst.epsilon);

    const long parity = (j % 2 == 0) ? 1 : -1;
    for (unsigned k = 0; k <= inst.m; ++k) {
        const auto& [a, b] = inst.q.coeffs[k];
        auto [cosI, sinI] = trig_enclose(k, j, inst.n, precision_bits);
        Interval alpha = cosI.scale(a) - sinI.scale(b);
        res.coeffs[k] = alpha.scale(Dyadic(2 * parity));
    }
    return res;
}

Interval interval_eval(const LineRestriction& restriction, const Dyadic& r) {
    const Interval rI = Interval::point(r);
    Interval acc;
    for (auto it = restriction.coeffs.rbegin(); it != restriction.coeffs.rend();
         ++it)
        acc = acc * rI + *it;
    return acc;
}

CertifiedSign certified_sign(const LineRestriction& restriction,
                             const Dyadic& r, unsigned max_precision_bits) {
    LineRestriction cur = restriction;
    for (;;) {
        Interval v = interval_eval(cur, r);
        int s = v.certified_sign();
        if (s > 0)
            return {SignKind::Positive, Dyadic()};
        if (s < 0)
            return {SignKind::Negative, Dyadic()};
        // A point interval containing zero is an exact zero; no precision
        // will resolve it.
        if (v.is_point() || cur.precision_bits >= max_precision_bits)
            return {SignKind::Undetermined, v.width()};
        unsigned next = std::min(cur.precision_bits * 2, max_precision_bits);
        cur = restrict_to_line(cur.inst, cur.j, next);
    }
}

std::vector<CertifiedSign> certify_samples(const LineRestriction& restriction,
                                           const std::vector<Dyadic>& samples,
                                           unsigned max_precision_bits) {
    std::vector<CertifiedSign> signs;
    signs.reserve(samples.size());
    for (const auto& r : samples)
        signs.push_back(certified_sign(restriction, r, max_precision_bits));
    return signs;
}

unsigned sign_change_lower_bound(const LineRestriction& restriction,
                                 const std::vector<Dyadic>& samples,
                                 unsigned max_precision_bits) {
    for (size_t i = 1; i < samples.size(); ++i)
        if (!(samples[i - 1] < samples[i]))
            throw ParameterError("samples must be strictly increasing");
    auto signs = certify_samples(restriction, samples, max_precision_bits);
    unsigned count = 0;
    for (size_t i = 1; i < signs.size(); ++i)
        if (signs[i - 1].strict() && signs[i].strict() &&
            signs[i - 1].value() != signs[i].value())
            ++count;
    return count;
}

} // namespace wilm
