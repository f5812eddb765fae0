#pragma once

// Exact arbitrary-precision integer and rational scalars, p-adic valuations,
// and small number-theoretic helpers shared by every other header.
//
// Rationals are kept canonical at all times: reduced to lowest terms,
// denominator > 0, zero stored as 0/1. GMP's mpq arithmetic preserves this
// once the operands are canonical, so the only place canonicalization has to
// happen explicitly is construction from a num/den pair.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace unip {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den) {
    return make_rational(Integer(num), Integer(den));
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// "num/den" in decimal, the wire format used by the CLI.
inline std::string rational_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::uint64_t next_prime_at_least(std::uint64_t n) {
    while (!is_prime(n)) ++n;
    return n;
}

inline void require_prime(std::uint64_t p, const char* where) {
    if (!is_prime(p)) throw std::invalid_argument(std::string(where) + ": p must be prime");
}

// Sentinel for vp(0).
inline constexpr int vp_infinity = std::numeric_limits<int>::max();

inline int vp(const Integer& x, std::uint64_t p) {
    require_prime(p, "vp");
    if (x == 0) return vp_infinity;
    Integer reduced;
    const Integer pz = Integer(static_cast<unsigned long>(p));
    return static_cast<int>(mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

inline int vp(const Rational& q, std::uint64_t p) {
    require_prime(p, "vp");
    if (q == 0) return vp_infinity;
    return vp(Integer(q.get_num()), p) - vp(Integer(q.get_den()), p);
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial_coeff(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer ipow(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Integer ipow(std::uint64_t base, unsigned long e) {
    return ipow(Integer(static_cast<unsigned long>(base)), e);
}

// Legendre's formula: nu_p(n!) = sum_{i>=1} floor(n/p^i).
inline long nu_p_factorial(unsigned long n, std::uint64_t p) {
    require_prime(p, "nu_p_factorial");
    long total = 0;
    for (unsigned long q = n / p; q > 0; q /= p) total += static_cast<long>(q);
    return total;
}

// Moebius function by trial factorization; inputs here stay tiny.
inline int mobius(unsigned long m) {
    if (m == 0) throw std::invalid_argument("mobius: m >= 1 required");
    int factors = 0;
    for (unsigned long d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            m /= d;
            if (m % d == 0) return 0;
            ++factors;
        }
    }
    if (m > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

}  // namespace unip
