#include "wilm/dyadic.hpp"
#include "wilm/error.hpp"

#include <cmath>
#include <limits>

namespace wilm {

void Dyadic::canonicalize() {
    if (man_ == 0) {
        exp_ = 0;
        return;
    }
    mp_bitcnt_t tz = mpz_scan1(man_.get_mpz_t(), 0);
    if (tz > 0) {
        man_ >>= tz;
        exp_ += static_cast<long>(tz);
    }
}

Dyadic Dyadic::from_double(double d) {
    if (d == 0.0)
        return Dyadic();
    if (!std::isfinite(d))
        throw ParameterError("cannot convert non-finite double to dyadic");
    int e;
    double f = std::frexp(d, &e); // d = f * 2^e, |f| in [1/2, 1)
    auto m = static_cast<long>(std::ldexp(f, 53));
    return Dyadic(mpz_class(m), e - 53);
}

Dyadic Dyadic::from_mpq_round_up(const mpq_class& q, unsigned frac_bits) {
    // ceil(q * 2^frac_bits) * 2^-frac_bits
    mpz_class num = q.get_num() << frac_bits;
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den().get_mpz_t());
    return Dyadic(r, -static_cast<long>(frac_bits));
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.man_ = -man_;
    r.exp_ = exp_;
    return r;
}

Dyadic Dyadic::mul_pow2(long e) const {
    if (is_zero())
        return Dyadic();
    Dyadic r;
    r.man_ = man_;
    r.exp_ = exp_ + e;
    return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    long e = std::min(a.exp_, b.exp_);
    mpz_class m = (a.man_ << static_cast<unsigned long>(a.exp_ - e)) +
                  (b.man_ << static_cast<unsigned long>(b.exp_ - e));
    return Dyadic(m, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero())
        return Dyadic();
    return Dyadic(a.man_ * b.man_, a.exp_ + b.exp_);
}

int Dyadic::compare(const Dyadic& o) const {
    if (man_ == 0)
        return -o.sign();
    if (o.man_ == 0)
        return sign();
    int sa = sign(), sb = o.sign();
    if (sa != sb)
        return sa < sb ? -1 : 1;
    return (*this - o).sign();
}

double Dyadic::to_double() const {
    if (is_zero())
        return 0.0;
    signed long e;
    double d = mpz_get_d_2exp(&e, man_.get_mpz_t());
    return std::ldexp(d, static_cast<int>(e + exp_));
}

mpq_class Dyadic::to_mpq() const {
    mpq_class q;
    if (exp_ >= 0)
        q = mpq_class(man_ << static_cast<unsigned long>(exp_));
    else
        q = mpq_class(man_, mpz_class(1) << static_cast<unsigned long>(-exp_));
    q.canonicalize();
    return q;
}

std::string Dyadic::str() const {
    return man_.get_str() + "*2^" + std::to_string(exp_);
}

Dyadic Dyadic::parse(const std::string& s) {
    if (s.empty())
        throw SchemaError("empty dyadic literal");
    try {
        auto star = s.find("*2^");
        if (star != std::string::npos) {
            mpz_class m(s.substr(0, star));
            long e = std::stol(s.substr(star + 3));
            return Dyadic(m, e);
        }
        if (s.rfind("2^", 0) == 0)
            return Dyadic(mpz_class(1), std::stol(s.substr(2)));
        if (s.rfind("-2^", 0) == 0)
            return Dyadic(mpz_class(-1), std::stol(s.substr(3)));
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            mpz_class num(s.substr(0, slash));
            std::string den_s = s.substr(slash + 1);
            mpz_class den;
            if (den_s.rfind("2^", 0) == 0) {
                den = 1;
                den <<= std::stoul(den_s.substr(2));
            } else {
                den = mpz_class(den_s);
            }
            if (den <= 0)
                throw SchemaError("dyadic denominator must be positive: " + s);
            auto bits = mpz_scan1(den.get_mpz_t(), 0);
            if ((den >> bits) != 1)
                throw SchemaError("denominator is not a power of two: " + s);
            return Dyadic(num, -static_cast<long>(bits));
        }
        return Dyadic(mpz_class(s), 0);
    } catch (const SchemaError&) {
        throw;
    } catch (const std::exception&) {
        throw SchemaError("malformed dyadic literal: " + s);
    }
}

} // namespace wilm
