#ifndef WILM_KOSTLAN_HPP
#define WILM_KOSTLAN_HPP

#include "wilm/poly.hpp"

#include <cstdint>

namespace wilm {

// Counter-based generator: output i is a pure function of
// (seed, stream, i), so trials are reproducible under any schedule.
struct CounterRng {
    uint64_t key;

    CounterRng(uint64_t seed, uint64_t stream);
    uint64_t bits(uint64_t i) const;
    double uniform_open(uint64_t i) const;  // (0, 1]
    double uniform_half(uint64_t i) const;  // [0, 1)
    // Standard normal via Box-Muller; one draw per index.
    double gaussian(uint64_t i) const;
};

struct KostlanSampler {
    unsigned m = 1;          // degree
    uint64_t seed = 0;
    uint64_t stream = 0;     // per-trial substream
};

// alpha_k independent N(0, C(m,k)), drawn in double precision and
// snapped bit-exactly to dyadics.
RealPoly sample_real_kostlan(const KostlanSampler& sampler);

// a_k, b_k independent N(0, C(m,k)/2); the leading pair is resampled in
// the (snapped-to-zero) degenerate case.
ComplexPoly sample_complex_kostlan(const KostlanSampler& sampler);

// Expected number of real zeros of a degree-m real Kostlan polynomial in
// (a, b): (sqrt(m)/pi) (arctan b - arctan a).  a may be -inf, b +inf.
double ek_expected_count(unsigned m, double a, double b);

} // namespace wilm

#endif
