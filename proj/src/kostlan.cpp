#include "wilm/kostlan.hpp"
#include "wilm/error.hpp"

#include <cmath>

namespace wilm {

namespace {

uint64_t mix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double binom_double(unsigned m, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), m, k);
    return b.get_d();
}

} // namespace

CounterRng::CounterRng(uint64_t seed, uint64_t stream) {
    key = mix64(mix64(seed) ^ (0xD2B74407B1CE6E93ull * (stream + 1)));
}

uint64_t CounterRng::bits(uint64_t i) const {
    return mix64(key ^ (0x9E3779B97F4A7C15ull * (i + 1)));
}

double CounterRng::uniform_open(uint64_t i) const {
    return static_cast<double>((bits(i) >> 11) + 1) * 0x1p-53;
}

double CounterRng::uniform_half(uint64_t i) const {
    return static_cast<double>(bits(i) >> 11) * 0x1p-53;
}

double CounterRng::gaussian(uint64_t i) const {
    double u1 = uniform_open(2 * i);
    double u2 = uniform_half(2 * i + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
}

RealPoly sample_real_kostlan(const KostlanSampler& sampler) {
    if (sampler.m < 1)
        throw ParameterError("sample_real_kostlan: m >= 1 required");
    CounterRng rng(sampler.seed, sampler.stream);
    RealPoly p;
    p.coeffs.reserve(sampler.m + 1);
    for (unsigned k = 0; k <= sampler.m; ++k) {
        double sd = std::sqrt(binom_double(sampler.m, k));
        p.coeffs.push_back(Dyadic::from_double(rng.gaussian(k) * sd));
    }
    return p;
}

ComplexPoly sample_complex_kostlan(const KostlanSampler& sampler) {
    if (sampler.m < 1)
        throw ParameterError("sample_complex_kostlan: m >= 1 required");
    CounterRng rng(sampler.seed, sampler.stream);
    ComplexPoly q;
    q.coeffs.reserve(sampler.m + 1);
    for (unsigned k = 0; k <= sampler.m; ++k) {
        double sd = std::sqrt(binom_double(sampler.m, k) / 2.0);
        q.coeffs.emplace_back(Dyadic::from_double(rng.gaussian(2 * k) * sd),
                              Dyadic::from_double(rng.gaussian(2 * k + 1) * sd));
    }
    // Degree m exactly: resample the leading pair if both snapped to zero.
    uint64_t extra = 2ull * (sampler.m + 1);
    double sd = std::sqrt(binom_double(sampler.m, sampler.m) / 2.0);
    while (q.coeffs.back().first.is_zero() && q.coeffs.back().second.is_zero()) {
        q.coeffs.back() = {Dyadic::from_double(rng.gaussian(extra) * sd),
                           Dyadic::from_double(rng.gaussian(extra + 1) * sd)};
        extra += 2;
    }
    return q;
}

double ek_expected_count(unsigned m, double a, double b) {
    if (m < 1)
        throw ParameterError("ek_expected_count: m >= 1 required");
    if (!(a < b))
        throw ParameterError("ek_expected_count: need a < b");
    return std::sqrt(static_cast<double>(m)) / M_PI *
           (std::atan(b) - std::atan(a));
}

} // namespace wilm
