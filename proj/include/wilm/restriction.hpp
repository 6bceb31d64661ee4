#ifndef WILM_RESTRICTION_HPP
#define WILM_RESTRICTION_HPP

#include "wilm/interval.hpp"
#include "wilm/poly.hpp"

#include <vector>

namespace wilm {

// The restriction of Re h to the line z = r e^{i j pi / n}, after the
// sign normalization by (-1)^j:
//   g_j(r) = eps r^n + 2 sum_k (-1)^j [a_k cos(k theta_j) - b_k sin(k theta_j)] r^k.
// Coefficient k = n is the exact point eps; k in (m, n) are exact zeros;
// k <= m are enclosures whose width shrinks with precision_bits.
struct LineRestriction {
    WilmshurstInstance inst;
    unsigned j = 0;
    unsigned precision_bits = 0;
    std::vector<Interval> coeffs; // size n + 1

    // Midpoint polynomial (used for floating root estimates).
    RealPoly midpoint() const;
};

LineRestriction restrict_to_line(const WilmshurstInstance& inst, unsigned j,
                                 unsigned precision_bits);

// Interval Horner: contains g_j(r) for every coefficient vector
// consistent with the stored enclosures.
Interval interval_eval(const LineRestriction& restriction, const Dyadic& r);

// Doubles trig precision and re-restricts until the evaluation interval
// excludes zero or max_precision_bits is reached.  Never reports a wrong
// strict sign.
CertifiedSign certified_sign(const LineRestriction& restriction,
                             const Dyadic& r, unsigned max_precision_bits);

// Number of adjacent sample pairs with certified opposite strict signs;
// a rigorous lower bound on the zeros in (samples.front(), samples.back())
// by the intermediate value theorem.  Pairs touching an undetermined
// sample contribute nothing.
unsigned sign_change_lower_bound(const LineRestriction& restriction,
                                 const std::vector<Dyadic>& samples,
                                 unsigned max_precision_bits);

// Signs for each sample, certifying lazily with precision escalation.
std::vector<CertifiedSign> certify_samples(const LineRestriction& restriction,
                                           const std::vector<Dyadic>& samples,
                                           unsigned max_precision_bits);

} // namespace wilm

#endif
