#pragma once

// Sparse multivariate polynomials over an exact coefficient ring
// (Integer, Rational, or Fp). Terms are kept in a canonical ordered map
// keyed by exponent vectors; zero coefficients are erased immediately, so
// the zero polynomial has an empty term list and equality is structural.
//
// Dense in exponent, sparse in term: fine for the degrees handled here
// (Witt sum polynomials up to length 4, matrix-entry polynomials).

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/fp.hpp"
#include "unip/rational.hpp"

namespace unip {

template <typename T>
class Polynomial {
  public:
    using Mono = std::vector<int>;

    Polynomial(int nvars, T coeff_zero, std::vector<std::string> names = {})
        : nvars_(nvars), zero_(std::move(coeff_zero)), names_(std::move(names)) {
        if (nvars_ < 0) throw std::invalid_argument("Polynomial: negative variable count");
        if (!names_.empty() && static_cast<int>(names_.size()) != nvars_)
            throw std::invalid_argument("Polynomial: name count mismatch");
    }

    static Polynomial constant(const T& c, int nvars, const T& coeff_zero,
                               std::vector<std::string> names = {}) {
        Polynomial p(nvars, coeff_zero, std::move(names));
        p.add_term(Mono(nvars, 0), c);
        return p;
    }

    static Polynomial variable(int index, int nvars, const T& coeff_zero,
                               std::vector<std::string> names = {}) {
        Polynomial p(nvars, coeff_zero, std::move(names));
        Mono m(nvars, 0);
        m.at(index) = 1;
        p.add_term(m, ring_ops<T>::one(coeff_zero));
        return p;
    }

    int nvars() const { return nvars_; }
    const T& coeff_zero() const { return zero_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::map<Mono, T>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) {
            int s = 0;
            for (int e : m) s += e;
            if (s > d) d = s;
        }
        return d;
    }

    T coefficient(const Mono& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? zero_ : it->second;
    }

    T constant_term() const { return coefficient(Mono(nvars_, 0)); }

    void add_term(const Mono& m, const T& c) {
        if (static_cast<int>(m.size()) != nvars_)
            throw std::invalid_argument("Polynomial: monomial arity mismatch");
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!(c == zero_)) terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == zero_) terms_.erase(it);
        }
    }

    Polynomial operator+(const Polynomial& o) const {
        check(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-(const Polynomial& o) const {
        check(o);
        Polynomial r = *this;
        for (const auto& [m, c] : o.terms_) r.add_term(m, zero_ - c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(nvars_, zero_, names_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, zero_ - c);
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check(o);
        Polynomial r(nvars_, zero_, names_.empty() ? o.names_ : names_);
        Mono m(nvars_);
        for (const auto& [ma, ca] : terms_) {
            for (const auto& [mb, cb] : o.terms_) {
                for (int i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    Polynomial scaled(const T& k) const {
        Polynomial r(nvars_, zero_, names_);
        if (k == zero_) return r;
        for (const auto& [m, c] : terms_) {
            T v = c * k;
            if (!(v == zero_)) r.terms_.emplace(m, v);
        }
        return r;
    }

    Polynomial pow(unsigned long e) const {
        Polynomial r = constant(ring_ops<T>::one(zero_), nvars_, zero_, names_);
        Polynomial b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    Polynomial derivative(int var) const {
        Polynomial r(nvars_, zero_, names_);
        for (const auto& [m, c] : terms_) {
            if (m.at(var) == 0) continue;
            Mono d = m;
            d[var] -= 1;
            r.add_term(d, c * ring_ops<T>::from_integer(Integer(m[var]), zero_));
        }
        return r;
    }

    // Simultaneous substitution of every variable by a polynomial (all in
    // the same target ring/arity).
    Polynomial substitute(const std::vector<Polynomial>& images) const {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("Polynomial::substitute: image count mismatch");
        if (nvars_ == 0) return *this;
        const int tn = images.front().nvars_;
        Polynomial r(tn, zero_, images.front().names_);
        for (const auto& [m, c] : terms_) {
            Polynomial term = constant(c, tn, zero_, images.front().names_);
            for (int i = 0; i < nvars_; ++i)
                if (m[i] > 0) term = term * images[i].pow(static_cast<unsigned long>(m[i]));
            r = r + term;
        }
        return r;
    }

    T eval(const std::vector<T>& point) const {
        if (static_cast<int>(point.size()) != nvars_)
            throw std::invalid_argument("Polynomial::eval: point arity mismatch");
        // Cache variable powers; exponents can be large for Witt polynomials.
        std::vector<std::vector<T>> powers(nvars_);
        for (int i = 0; i < nvars_; ++i) powers[i].push_back(ring_ops<T>::one(zero_));
        T acc = zero_;
        for (const auto& [m, c] : terms_) {
            T t = c;
            for (int i = 0; i < nvars_; ++i) {
                auto& pw = powers[i];
                while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * point[i]);
                if (m[i] > 0) t = t * pw[m[i]];
            }
            acc += t;
        }
        return acc;
    }

    bool operator==(const Polynomial& o) const {
        return nvars_ == o.nvars_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            out += coeff_str(c);
            for (int i = 0; i < nvars_; ++i) {
                if (m[i] == 0) continue;
                out += "*" + var_name(i);
                if (m[i] > 1) out += "^" + std::to_string(m[i]);
            }
        }
        return out;
    }

  private:
    static std::string coeff_str(const Integer& c) { return c.get_str(); }
    static std::string coeff_str(const Rational& c) { return rational_string(c); }
    static std::string coeff_str(const Fp& c) { return c.str(); }

    std::string var_name(int i) const {
        return names_.empty() ? "x" + std::to_string(i) : names_[i];
    }

    void check(const Polynomial& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("Polynomial: arity mismatch");
    }

    int nvars_;
    T zero_;
    std::vector<std::string> names_;
    std::map<Mono, T> terms_;
};

template <typename C>
struct ring_ops<Polynomial<C>> {
    static Polynomial<C> zero(const Polynomial<C>& e) {
        return Polynomial<C>(e.nvars(), e.coeff_zero(), e.names());
    }
    static Polynomial<C> one(const Polynomial<C>& e) {
        return Polynomial<C>::constant(ring_ops<C>::one(e.coeff_zero()), e.nvars(),
                                       e.coeff_zero(), e.names());
    }
    static Polynomial<C> from_integer(const Integer& x, const Polynomial<C>& e) {
        return Polynomial<C>::constant(ring_ops<C>::from_integer(x, e.coeff_zero()), e.nvars(),
                                       e.coeff_zero(), e.names());
    }
    static Polynomial<C> from_rational(const Rational& q, const Polynomial<C>& e) {
        return Polynomial<C>::constant(ring_ops<C>::from_rational(q, e.coeff_zero()), e.nvars(),
                                       e.coeff_zero(), e.names());
    }
    static std::uint64_t characteristic(const Polynomial<C>& e) {
        return ring_ops<C>::characteristic(e.coeff_zero());
    }
};

}  // namespace unip
