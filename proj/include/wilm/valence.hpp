#ifndef WILM_VALENCE_HPP
#define WILM_VALENCE_HPP

#include "wilm/restriction.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace wilm {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr unsigned kDefaultPrecisionCap = 4096;
inline constexpr unsigned kInitialPrecision = 64;

struct LineCount {
    unsigned j = 0;
    unsigned certified_lower = 0;
    unsigned float_estimate = 0;
    std::vector<Dyadic> samples;
    std::string signs; // one of "+-?" per sample
};

// Machine-verifiable witness: per-line rational sample points whose
// certified signs alternate.
struct ValenceCertificate {
    WilmshurstInstance inst;
    std::vector<LineCount> per_line;
    bool origin_is_zero = false;
    unsigned total_certified = 0;
    uint64_t seed = 0;
    std::string version = kToolVersion;
    unsigned precision_bits = kDefaultPrecisionCap;
};

// Approximate real roots of the midpoint polynomial via companion-matrix
// eigenvalues, filtered to |imag| < 1e-7 (1 + |real|), sorted.
std::vector<double> float_root_estimate(const LineRestriction& restriction);

// Certified lower bound on the zeros of g_j via sign alternation at
// midpoints between float root estimates.  r = 0 always enters the
// sample set so no pair straddles the origin: an origin root never
// contributes to any per-line count.
LineCount count_line_zeros(const LineRestriction& restriction,
                           unsigned max_precision_bits);

ValenceCertificate certified_valence(const WilmshurstInstance& inst,
                                     unsigned max_precision_bits,
                                     uint64_t seed = 0);

// Sweeps the epsilon schedule, returns the entry maximizing the certified
// total (ties break toward larger epsilon).
std::pair<Dyadic, ValenceCertificate>
choose_epsilon(const ComplexPoly& q, unsigned n,
               const std::vector<Dyadic>& schedule,
               unsigned max_precision_bits);

// 2^-10, 2^-20, ..., 2^-60.
std::vector<Dyadic> default_epsilon_schedule();

} // namespace wilm

#endif
