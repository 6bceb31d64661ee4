#ifndef WILM_STURM_HPP
#define WILM_STURM_HPP

#include "wilm/poly.hpp"

namespace wilm {

// Exact number of distinct real roots of poly in (a, b] via sign
// variations of the Sturm chain, computed in exact arithmetic.
// Endpoints landing on a root are nudged outward by 2^-53 units.
unsigned sturm_count(const RealPoly& poly, const Dyadic& a, const Dyadic& b);

// Number of real roots over the whole line (bracket from the Cauchy bound).
unsigned sturm_count_all(const RealPoly& poly);

// Sign changes in the nonzero coefficient sequence; an upper bound on the
// positive real roots counted with multiplicity (Descartes).
unsigned descartes_positive_bound(const RealPoly& poly);

struct FamilyBound {
    unsigned long descartes_total; // n (m + 2)
    unsigned long lll_conjecture;  // 2 m (n - 1) + n
};

// Descartes upper bound n(m+2) for the zero count of the whole family,
// with the conjectured bound 2m(n-1)+n for comparison.
FamilyBound family_upper_bound(unsigned n, unsigned m);

} // namespace wilm

#endif
