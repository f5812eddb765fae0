#pragma once

// Truncated formal power series with exact rational coefficients.
//
// Every series knows the order N it is truncated at (coefficients 0..N, i.e.
// the series is known mod t^{N+1}); arithmetic propagates the minimum of the
// operand truncations and never silently extends precision.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/rational.hpp"

namespace unip {

class Series {
  public:
    explicit Series(unsigned order) : c_(order + 1, Rational(0)) {}

    static Series constant(const Rational& v, unsigned order) {
        Series s(order);
        s.c_[0] = v;
        return s;
    }

    static Series t(unsigned order) {
        Series s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }

    unsigned truncation_order() const { return static_cast<unsigned>(c_.size()) - 1; }

    const Rational& operator[](unsigned i) const { return c_.at(i); }
    void set(unsigned i, const Rational& v) { c_.at(i) = v; }

    Series truncate(unsigned order) const {
        Series r(std::min(order, truncation_order()));
        for (unsigned i = 0; i <= r.truncation_order(); ++i) r.c_[i] = c_[i];
        return r;
    }

    Series operator+(const Series& o) const {
        Series r(std::min(truncation_order(), o.truncation_order()));
        for (unsigned i = 0; i <= r.truncation_order(); ++i) r.c_[i] = c_[i] + o.c_[i];
        return r;
    }

    Series operator-(const Series& o) const {
        Series r(std::min(truncation_order(), o.truncation_order()));
        for (unsigned i = 0; i <= r.truncation_order(); ++i) r.c_[i] = c_[i] - o.c_[i];
        return r;
    }

    Series operator-() const {
        Series r(truncation_order());
        for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }

    Series operator*(const Series& o) const {
        Series r(std::min(truncation_order(), o.truncation_order()));
        for (unsigned i = 0; i <= r.truncation_order(); ++i) {
            for (unsigned j = 0; i + j <= r.truncation_order() && j <= o.truncation_order(); ++j) {
                if (i > truncation_order()) break;
                r.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        return r;
    }

    Series scaled(const Rational& k) const {
        Series r(truncation_order());
        for (unsigned i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * k;
        return r;
    }

    bool operator==(const Series& o) const { return c_ == o.c_; }
    bool operator!=(const Series& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != 0) return false;
        return true;
    }

  private:
    std::vector<Rational> c_;
};

// exp(f) for f with zero constant term, via the recurrence
// n*h_n = sum_{k=1..n} k f_k h_{n-k} coming from h' = f' h.
inline Series series_exp(const Series& f) {
    if (f[0] != 0) throw std::invalid_argument("series_exp: nonzero constant term");
    const unsigned n = f.truncation_order();
    Series h(n);
    h.set(0, 1);
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc(0);
        for (unsigned k = 1; k <= m; ++k) acc += Rational(k) * f[k] * h[m - k];
        h.set(m, acc / Rational(m));
    }
    return h;
}

// log(f) for f with constant term 1, via f g' = f' so that
// g_m = f_m - (1/m) sum_{k=1..m-1} k g_k f_{m-k}.
inline Series series_log(const Series& f) {
    if (f[0] != 1) throw std::invalid_argument("series_log: constant term must be 1");
    const unsigned n = f.truncation_order();
    Series g(n);
    for (unsigned m = 1; m <= n; ++m) {
        Rational acc = f[m] * Rational(m);
        for (unsigned k = 1; k < m; ++k) acc -= Rational(k) * g[k] * f[m - k];
        g.set(m, acc / Rational(m));
    }
    return g;
}

// (1+u)^e for u with zero constant term and rational exponent e.
inline Series series_binomial(const Series& u, const Rational& e) {
    if (u[0] != 0) throw std::invalid_argument("series_binomial: nonzero constant term");
    Series one_plus = u;
    one_plus.set(0, 1);
    return series_exp(series_log(one_plus).scaled(e));
}

}  // namespace unip
