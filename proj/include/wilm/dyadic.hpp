#ifndef WILM_DYADIC_HPP
#define WILM_DYADIC_HPP

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace wilm {

// Exact binary rational mantissa * 2^exponent.
// Canonical form: mantissa odd or zero; zero has exponent 0.
// Closed under +, -, *; certificates only ever need these.
class Dyadic {
public:
    Dyadic() : exp_(0) {}
    Dyadic(long v) : man_(v), exp_(0) { canonicalize(); }
    Dyadic(const mpz_class& mantissa, long exponent)
        : man_(mantissa), exp_(exponent) { canonicalize(); }

    // Bit-exact: every finite double is a dyadic rational.
    static Dyadic from_double(double d);
    static Dyadic pow2(long e) { return Dyadic(mpz_class(1), e); }

    // Smallest dyadic with frac_bits fractional bits that is >= q.
    // Exact when q already has a power-of-two denominator fitting in frac_bits.
    static Dyadic from_mpq_round_up(const mpq_class& q, unsigned frac_bits);

    const mpz_class& mantissa() const { return man_; }
    long exponent() const { return exp_; }

    bool is_zero() const { return man_ == 0; }
    int sign() const { return sgn(man_); }

    Dyadic operator-() const;
    Dyadic abs() const { return sign() < 0 ? -*this : *this; }
    Dyadic mul_pow2(long e) const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);

    int compare(const Dyadic& o) const;
    bool operator==(const Dyadic& o) const { return compare(o) == 0; }
    bool operator!=(const Dyadic& o) const { return compare(o) != 0; }
    bool operator<(const Dyadic& o) const { return compare(o) < 0; }
    bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
    bool operator>(const Dyadic& o) const { return compare(o) > 0; }
    bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }

    double to_double() const;
    mpq_class to_mpq() const;

    // "mantissa*2^exponent", e.g. "3*2^-1" for 1.5, "0*2^0" for zero.
    std::string str() const;

    // Accepts "m*2^e", "2^e", plain integers, and "p/q" with q a power
    // of two. Throws SchemaError on anything else.
    static Dyadic parse(const std::string& s);

private:
    void canonicalize();

    mpz_class man_;
    long exp_;
};

} // namespace wilm

#endif
