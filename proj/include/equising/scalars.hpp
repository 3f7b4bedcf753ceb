// Exact arbitrary-precision scalars used throughout: integers and rationals
// over Q, backed by GMP. Everything downstream assumes these never overflow.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace equising {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Exact quotient; throws if b does not divide a.
inline Int int_divexact(const Int& a, const Int& b) {
    if (b == 0 || a % b != 0)
        throw std::logic_error("int_divexact: not divisible");
    return a / b;
}

// Inverse of a modulo m (gcd(a,m)=1 required).
inline Int int_invmod(const Int& a, const Int& m) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::logic_error("int_invmod: not invertible");
    return r;
}

// Nonnegative remainder of a modulo m > 0.
inline Int int_mod(const Int& a, const Int& m) {
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int int_pow(const Int& b, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline long long to_i64(const Int& v) {
    if (!v.fits_slong_p())
        throw std::overflow_error("integer too large for a machine exponent");
    return v.get_si();
}

inline Int int_of(long long v) {
    if constexpr (sizeof(long) == sizeof(long long)) {
        return Int(static_cast<long>(v));
    } else {
        return Int(std::to_string(v));
    }
}

inline Rat rat_from_text(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational text: " + s);
    q.canonicalize();
    if (q.get_den() <= 0)
        throw std::invalid_argument("bad rational text (zero denominator): " + s);
    return q;
}

// "a/b" with b omitted when 1; canonical sign on the numerator.
inline std::string rat_text(const Rat& q) { return q.get_str(); }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

inline Int rat_ceil(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

}  // namespace equising
