#ifndef WILM_INTERVAL_HPP
#define WILM_INTERVAL_HPP

#include "wilm/dyadic.hpp"

#include <algorithm>

namespace wilm {

// Closed interval with exact dyadic endpoints. Dyadics are closed under
// +,-,* so interval arithmetic here is exact: no rounding step is needed
// and results are the tightest enclosures.
struct Interval {
    Dyadic lo, hi;

    Interval() = default;
    Interval(Dyadic l, Dyadic h) : lo(std::move(l)), hi(std::move(h)) {}

    static Interval point(const Dyadic& d) { return {d, d}; }

    bool is_point() const { return lo == hi; }
    Dyadic width() const { return hi - lo; }
    Dyadic midpoint() const { return (lo + hi).mul_pow2(-1); }
    bool contains(const Dyadic& d) const { return lo <= d && d <= hi; }
    Dyadic mag() const { return std::max(lo.abs(), hi.abs()); }

    // -1, +1 when the interval excludes zero, 0 otherwise.
    int certified_sign() const {
        if (lo.sign() > 0) return 1;
        if (hi.sign() < 0) return -1;
        return 0;
    }

    Interval operator-() const { return {-hi, -lo}; }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return {a.lo + b.lo, a.hi + b.hi};
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        return {a.lo - b.hi, a.hi - b.lo};
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        Dyadic p1 = a.lo * b.lo, p2 = a.lo * b.hi;
        Dyadic p3 = a.hi * b.lo, p4 = a.hi * b.hi;
        return {std::min(std::min(p1, p2), std::min(p3, p4)),
                std::max(std::max(p1, p2), std::max(p3, p4))};
    }

    Interval scale(const Dyadic& d) const {
        return d.sign() >= 0 ? Interval{d * lo, d * hi}
                             : Interval{d * hi, d * lo};
    }
};

enum class SignKind { Negative, Positive, Undetermined };

// Result of a rigorous sign evaluation.  Negative/Positive are only
// produced when the enclosing interval excludes zero.
struct CertifiedSign {
    SignKind kind = SignKind::Undetermined;
    Dyadic width; // enclosure width when undetermined

    bool strict() const { return kind != SignKind::Undetermined; }
    int value() const {
        return kind == SignKind::Positive ? 1
             : kind == SignKind::Negative ? -1 : 0;
    }
    char symbol() const {
        return kind == SignKind::Positive ? '+'
             : kind == SignKind::Negative ? '-' : '?';
    }
};

} // namespace wilm

#endif
