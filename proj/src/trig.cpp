#include "wilm/trig.hpp"
#include "wilm/error.hpp"

#include <mpfr.h>

#include <mutex>
#include <tuple>
#include <map>

namespace wilm {

namespace {

Dyadic dyadic_from_mpfr(mpfr_srcptr x) {
    if (mpfr_zero_p(x))
        return Dyadic();
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    return Dyadic(m, static_cast<long>(e));
}

Interval clamp_unit(Interval v) {
    const Dyadic one(1), mone(-1);
    if (v.lo < mone) v.lo = mone;
    if (v.hi > one) v.hi = one;
    return v;
}

// cos/sin of s*pi/2 for s in 0..3.
const int kQuarterCos[4] = {1, 0, -1, 0};
const int kQuarterSin[4] = {0, 1, 0, -1};

std::mutex cache_mutex;
std::map<std::tuple<unsigned long, unsigned, unsigned>,
         std::pair<Interval, Interval>> cache;

} // namespace

std::pair<Interval, Interval> trig_enclose(unsigned long k, unsigned j,
                                           unsigned n,
                                           unsigned precision_bits) {
    if (n < 1 || j >= n || precision_bits < 1)
        throw ParameterError("trig_enclose: need n >= 1, 0 <= j < n, precision >= 1");

    // Angle k*j*pi/n depends only on t = k*j mod 2n.
    unsigned long t = (k % (2ul * n)) * j % (2ul * n);
    if ((2 * t) % n == 0) {
        unsigned s = static_cast<unsigned>((2 * t / n) % 4);
        return {Interval::point(Dyadic(kQuarterCos[s])),
                Interval::point(Dyadic(kQuarterSin[s]))};
    }

    auto key = std::make_tuple(t, n, precision_bits);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
    }

    // Working precision P: pi, *, /, cos, sin are each correctly rounded,
    // so the accumulated error of cos(theta~) vs cos(theta) is below
    // 2^(6-P) (theta in [0, 2pi), derivative bound 1, <= 4 rounding steps
    // with ulp <= 2^(3-P)).
    const mpfr_prec_t P = static_cast<mpfr_prec_t>(precision_bits) + 16;
    mpfr_t theta, c, s;
    mpfr_inits2(P, theta, c, s, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(theta, MPFR_RNDN);
    mpfr_mul_ui(theta, theta, t, MPFR_RNDN);
    mpfr_div_ui(theta, theta, n, MPFR_RNDN);
    mpfr_cos(c, theta, MPFR_RNDN);
    mpfr_sin(s, theta, MPFR_RNDN);
    Dyadic cd = dyadic_from_mpfr(c);
    Dyadic sd = dyadic_from_mpfr(s);
    mpfr_clears(theta, c, s, static_cast<mpfr_ptr>(nullptr));

    const Dyadic err = Dyadic::pow2(6 - static_cast<long>(P));
    auto result = std::make_pair(clamp_unit({cd - err, cd + err}),
                                 clamp_unit({sd - err, sd + err}));

    std::lock_guard<std::mutex> lock(cache_mutex);
    if (cache.size() > 100000)
        cache.clear();
    cache.emplace(key, result);
    return result;
}

} // namespace wilm
