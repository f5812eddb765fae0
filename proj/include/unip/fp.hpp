#pragma once

// Prime-field scalars. Each element carries its modulus so values from
// different fields cannot be mixed silently; all moduli at desk scale fit
// comfortably in 64 bits.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "unip/rational.hpp"

namespace unip {

class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {
        if (p < 2) throw std::invalid_argument("Fp: modulus must be >= 2");
    }

    static Fp from_int(long long x, std::uint64_t p) {
        long long r = x % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return Fp(static_cast<std::uint64_t>(r), p);
    }

    static Fp from_integer(const Integer& x, std::uint64_t p) {
        Integer r = x % Integer(static_cast<unsigned long>(p));
        if (r < 0) r += Integer(static_cast<unsigned long>(p));
        return Fp(r.get_ui(), p);
    }

    // Reduction of a p-integral rational (vp(den) = 0 required).
    static Fp from_rational(const Rational& q, std::uint64_t p) {
        Fp num = from_integer(Integer(q.get_num()), p);
        Fp den = from_integer(Integer(q.get_den()), p);
        if (den.is_zero())
            throw std::domain_error("Fp::from_rational: denominator not invertible mod p");
        return num / den;
    }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const {
        check(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return Fp(s, p_, tag{});
    }
    Fp operator-(const Fp& o) const {
        check(o);
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_, tag{});
    }
    Fp operator-() const {
        require_set();
        return Fp(v_ == 0 ? 0 : p_ - v_, p_, tag{});
    }
    Fp operator*(const Fp& o) const {
        check(o);
        return Fp(static_cast<std::uint64_t>((static_cast<unsigned __int128>(v_) * o.v_) % p_), p_, tag{});
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp pow(std::uint64_t e) const {
        require_set();
        Fp r(1 % p_, p_, tag{});
        Fp b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    Fp inverse() const {
        require_set();
        if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
        return pow(p_ - 2);
    }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Fp& o) const { return !(*this == o); }
    // Total order so Fp can key ordered containers.
    bool operator<(const Fp& o) const { return v_ < o.v_; }

    std::string str() const { return std::to_string(v_); }

  private:
    struct tag {};
    Fp(std::uint64_t v, std::uint64_t p, tag) : v_(v), p_(p) {}
    void require_set() const {
        if (p_ == 0) throw std::logic_error("Fp: use of default-constructed element");
    }
    void check(const Fp& o) const {
        require_set();
        if (p_ != o.p_) throw std::invalid_argument("Fp: mixed moduli");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

// Uniform construction of ring constants from an exemplar element. Scalar
// types carry their parameters (Fp its modulus), so generic containers keep
// an exemplar zero around instead of requiring default construction.
template <typename T>
struct ring_ops;

template <>
struct ring_ops<Rational> {
    static Rational zero(const Rational&) { return Rational(0); }
    static Rational one(const Rational&) { return Rational(1); }
    static Rational from_integer(const Integer& x, const Rational&) { return Rational(x); }
    static Rational from_rational(const Rational& q, const Rational&) { return q; }
    static constexpr std::uint64_t characteristic(const Rational&) { return 0; }
    static bool invertible(const Rational& x) { return x != 0; }
    static Rational invert(const Rational& x) {
        if (x == 0) throw std::domain_error("Rational: inverse of zero");
        return Rational(1) / x;
    }
};

template <>
struct ring_ops<Integer> {
    static Integer zero(const Integer&) { return Integer(0); }
    static Integer one(const Integer&) { return Integer(1); }
    static Integer from_integer(const Integer& x, const Integer&) { return x; }
    static constexpr std::uint64_t characteristic(const Integer&) { return 0; }
};

template <>
struct ring_ops<Fp> {
    static Fp zero(const Fp& e) { return Fp(0, e.modulus()); }
    static Fp one(const Fp& e) { return Fp(1, e.modulus()); }
    static Fp from_integer(const Integer& x, const Fp& e) { return Fp::from_integer(x, e.modulus()); }
    static Fp from_rational(const Rational& q, const Fp& e) { return Fp::from_rational(q, e.modulus()); }
    static std::uint64_t characteristic(const Fp& e) { return e.modulus(); }
    static bool invertible(const Fp& x) { return !x.is_zero(); }
    static Fp invert(const Fp& x) { return x.inverse(); }
};

}  // namespace unip
