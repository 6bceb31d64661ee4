#include "wilm/sturm.hpp"
#include "wilm/error.hpp"

#include <algorithm>
#include <vector>

namespace wilm {

namespace {

using ZPoly = std::vector<mpz_class>; // coeffs[k] of x^k, no trailing zeros

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

int deg(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

void divide_content(ZPoly& p) {
    if (p.empty())
        return;
    mpz_class g = 0;
    for (const auto& c : p)
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g > 1)
        for (auto& c : p)
            c /= g;
}

// Pseudo-remainder of a by b with a positive multiplier, so signs are a
// positive rescaling of the true remainder.
ZPoly prem_pos(ZPoly a, const ZPoly& b) {
    const mpz_class& lb = b.back();
    while (deg(a) >= deg(b) && !a.empty()) {
        mpz_class c = a.back();
        size_t shift = static_cast<size_t>(deg(a) - deg(b));
        // a <- lb * a - c * x^shift * b  (top term cancels)
        for (auto& x : a)
            x *= lb;
        for (size_t i = 0; i < b.size(); ++i)
            a[i + shift] -= c * b[i];
        trim(a);
        // Keep the overall multiplier positive.
        if (lb < 0)
            for (auto& x : a)
                x *= -1;
    }
    return a;
}

ZPoly to_zpoly(const RealPoly& p) {
    long min_exp = 0;
    for (const auto& c : p.coeffs)
        if (!c.is_zero())
            min_exp = std::min(min_exp, c.exponent());
    ZPoly z;
    z.reserve(p.coeffs.size());
    for (const auto& c : p.coeffs) {
        if (c.is_zero())
            z.emplace_back(0);
        else
            z.push_back(c.mantissa() <<
                        static_cast<unsigned long>(c.exponent() - min_exp));
    }
    trim(z);
    return z;
}

ZPoly z_derivative(const ZPoly& p) {
    ZPoly d;
    for (size_t k = 1; k < p.size(); ++k)
        d.push_back(static_cast<long>(k) * p[k]);
    return d;
}

int sign_at(const ZPoly& p, const mpq_class& x) {
    mpq_class acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return sgn(acc);
}

unsigned variations(const std::vector<ZPoly>& chain, const mpq_class& x) {
    unsigned v = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sign_at(p, x);
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

} // namespace

unsigned sturm_count(const RealPoly& poly, const Dyadic& a, const Dyadic& b) {
    if (poly.degree() < 0)
        throw ParameterError("sturm_count: zero polynomial");
    if (!(a < b))
        throw ParameterError("sturm_count: need a < b");
    if (poly.degree() == 0)
        return 0;

    std::vector<ZPoly> chain;
    chain.push_back(to_zpoly(poly));
    chain.push_back(z_derivative(chain[0]));
    divide_content(chain[0]);
    divide_content(chain[1]);
    while (deg(chain.back()) >= 1) {
        ZPoly r = prem_pos(chain[chain.size() - 2], chain.back());
        if (r.empty())
            break;
        for (auto& c : r)
            c *= -1;
        divide_content(r);
        chain.push_back(std::move(r));
    }

    mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    // Nudge endpoints off roots, outward so the bracket only grows.
    auto nudge = [&](mpq_class& x, int dir) {
        mpq_class ax = abs(x);
        if (ax < 1)
            ax = 1;
        mpq_class step = ax / mpq_class(mpz_class(1) << 53);
        while (sign_at(chain[0], x) == 0)
            x += (dir > 0) ? step : -step;
    };
    nudge(qa, -1);
    nudge(qb, +1);

    unsigned va = variations(chain, qa);
    unsigned vb = variations(chain, qb);
    return va >= vb ? va - vb : 0;
}

unsigned sturm_count_all(const RealPoly& poly) {
    if (poly.degree() < 1)
        return 0;
    Dyadic r = cauchy_root_bound(poly);
    return sturm_count(poly, -r, r);
}

unsigned descartes_positive_bound(const RealPoly& poly) {
    if (poly.degree() < 0)
        throw ParameterError("descartes_positive_bound: zero polynomial");
    unsigned v = 0;
    int prev = 0;
    for (const auto& c : poly.coeffs) {
        int s = c.sign();
        if (s == 0)
            continue;
        if (prev != 0 && s != prev)
            ++v;
        prev = s;
    }
    return v;
}

FamilyBound family_upper_bound(unsigned n, unsigned m) {
    if (m < 1 || n <= m)
        throw ParameterError("family_upper_bound: need n > m >= 1");
    FamilyBound fb;
    fb.descartes_total = static_cast<unsigned long>(n) * (m + 2);
    fb.lll_conjecture = 2ul * m * (n - 1) + n;
    if (n >= 4 && m >= 2 && fb.descartes_total > fb.lll_conjecture)
        throw Error("family_upper_bound: n(m+2) <= 2m(n-1)+n violated");
    return fb;
}

} // namespace wilm
