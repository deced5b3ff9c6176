#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gkt {

// All arithmetic in this library is exact: Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational with canonical representation
// (lowest terms, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// g = gcd(a,b) = x*a + y*b
inline Int int_gcdext(const Int& a, const Int& b, Int& x, Int& y) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Euclidean division: a = q*b + r with 0 <= r < |b|.
inline void int_fdiv_qr(const Int& a, const Int& b, Int& q, Int& r) {
    if (b == 0) throw std::invalid_argument("division by zero");
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());  // always in [0, |b|)
    Int num = a - r;
    mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), b.get_mpz_t());
}

inline int int_cmpabs(const Int& a, const Int& b) {
    return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

inline Int int_pow(Int base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int int_pow2(unsigned long e) { return int_pow(Int(2), e); }

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// If |a| = 2^r returns r, else -1.
inline long log2_exact(const Int& a) {
    Int m = abs(a);
    if (m == 0) return -1;
    if (mpz_popcount(m.get_mpz_t()) != 1) return -1;
    return static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2)) - 1;
}

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Int& a) { return a.get_str(); }
inline std::string to_string(const Rat& a) { return a.get_str(); }

}  // namespace gkt
