#pragma once

// The Artin-Hasse series F(t) = exp(-(t + t^p/p + t^{p^2}/p^2 + ...)), its
// Moebius product form, the homomorphism E_X(t) = F(t_0 X) F(t_1 X^p) ...
// into matrix groups, truncated exponentials and logarithms of nilpotent
// matrices, and lattice-preservation predicates.
//
// The sign convention is fixed as above (exp of the negated sum); every
// constructed series is certified p-integral coefficient by coefficient and
// construction fails loudly otherwise.

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/matrix.hpp"
#include "unip/poly.hpp"
#include "unip/rational.hpp"
#include "unip/series.hpp"
#include "unip/witt.hpp"

namespace unip {

struct AHSeries {
    std::uint64_t p = 0;
    Series series{0};  // constant term 1; vp >= 0 certified at construction
};

namespace detail {

inline void certify_p_integral(const Series& s, std::uint64_t p, const char* what) {
    for (unsigned i = 0; i <= s.truncation_order(); ++i)
        if (s[i] != 0 && vp(s[i], p) < 0)
            throw std::logic_error(std::string(what) + ": coefficient with negative vp");
}

}  // namespace detail

// F(t) mod t^{N+1}, via the exponential of -(t + t^p/p + ...).
inline AHSeries ah_series(std::uint64_t p, unsigned terms) {
    require_prime(p, "ah_series");
    if (terms < 1) throw std::invalid_argument("ah_series: at least one term required");
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, AHSeries> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, terms);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    Series arg(terms);
    Integer pk(1);
    for (unsigned k = 0;; ++k) {
        if (pk > terms) break;
        arg.set(static_cast<unsigned>(pk.get_ui()), make_rational(Integer(-1), pk));
        pk *= static_cast<unsigned long>(p);
    }
    AHSeries f{p, series_exp(arg)};
    detail::certify_p_integral(f.series, p, "ah_series");
    return cache.emplace(key, std::move(f)).first->second;
}

// The Moebius product form prod_{(m,p)=1} (1 - t^m)^{mu(m)/m}, computed
// factor by factor with the binomial series; an independent construction of
// the same series.
inline AHSeries ah_product_form(std::uint64_t p, unsigned terms) {
    require_prime(p, "ah_product_form");
    if (terms < 1) throw std::invalid_argument("ah_product_form: at least one term required");
    Series acc = Series::constant(1, terms);
    for (unsigned m = 1; m <= terms; ++m) {
        if (m % p == 0) continue;
        int mu = mobius(m);
        if (mu == 0) continue;
        Series u(terms);
        u.set(m, -1);
        acc = acc * series_binomial(u, make_rational(mu, static_cast<long>(m)));
    }
    AHSeries f{p, acc};
    detail::certify_p_integral(f.series, p, "ah_product_form");
    return f;
}

// Distinct error for the "must use the Artin-Hasse path instead" regime.
class trunc_exp_degree_error : public std::domain_error {
  public:
    explicit trunc_exp_degree_error(const std::string& what) : std::domain_error(what) {}
};

// Truncated exponential sum_{i<e} X^i/i! of a nilpotent matrix. Over a ring
// of characteristic p the nilpotence degree must not exceed p.
template <typename T>
Matrix<T> trunc_exp(const Matrix<T>& x) {
    const int deg = nilpotence_degree(x);
    const std::uint64_t ch = ring_ops<T>::characteristic(x.zero());
    if (ch != 0 && static_cast<std::uint64_t>(deg) > ch)
        throw trunc_exp_degree_error("trunc_exp: nilpotence degree exceeds the characteristic");
    Matrix<T> acc = Matrix<T>::identity(x.rows(), x.zero());
    Matrix<T> power = acc;
    for (int i = 1; i < deg; ++i) {
        power = power * x;
        acc = acc + power.scaled(ring_ops<T>::from_rational(
                  make_rational(Integer(1), factorial(static_cast<unsigned long>(i))), x.zero()));
    }
    return acc;
}

// Inverse of trunc_exp on unipotent matrices of the same degree bound:
// log(1 + N) = sum_{i>=1} (-1)^{i+1} N^i / i.
template <typename T>
Matrix<T> trunc_log(const Matrix<T>& u) {
    u.require_square();
    Matrix<T> n = u - Matrix<T>::identity(u.rows(), u.zero());
    const int deg = nilpotence_degree(n);
    const std::uint64_t ch = ring_ops<T>::characteristic(u.zero());
    if (ch != 0 && static_cast<std::uint64_t>(deg) > ch)
        throw trunc_exp_degree_error("trunc_log: unipotence degree exceeds the characteristic");
    Matrix<T> acc = Matrix<T>::zeros(u.rows(), u.rows(), u.zero());
    Matrix<T> power = Matrix<T>::identity(u.rows(), u.zero());
    for (int i = 1; i < deg; ++i) {
        power = power * n;
        Rational c = make_rational(Integer(i % 2 == 1 ? 1 : -1), Integer(i));
        acc = acc + power.scaled(ring_ops<T>::from_rational(c, u.zero()));
    }
    return acc;
}

// F(t X^{p^i}) as a finite matrix polynomial, with the Artin-Hasse
// coefficients mapped into the entry ring.
template <typename T>
Matrix<T> ah_factor(const Matrix<T>& x_power_block, const T& t, std::uint64_t p, int degree_cap) {
    AHSeries f = ah_series(p, static_cast<unsigned>(degree_cap));
    Matrix<T> acc = Matrix<T>::identity(x_power_block.rows(), x_power_block.zero());
    Matrix<T> power = acc;
    T tpow = ring_ops<T>::one(x_power_block.zero());
    for (int m = 1; m < degree_cap; ++m) {
        power = power * x_power_block;
        tpow = tpow * t;
        if (power.is_zero()) break;
        const Rational& c = f.series[static_cast<unsigned>(m)];
        if (c == 0) continue;
        acc = acc + power.scaled(ring_ops<T>::from_rational(c, x_power_block.zero()) * tpow);
    }
    return acc;
}

// E_X(t) = F(t_0 X) F(t_1 X^p) ... F(t_{n-1} X^{p^{n-1}}) for X nilpotent
// with X^{p^n} = 0. Truncation orders are sized from the matrix nilpotence
// degree automatically.
template <typename T>
Matrix<T> ex_eval(const Matrix<T>& x, const std::vector<T>& coords, std::uint64_t p) {
    require_prime(p, "ex_eval");
    const int n = static_cast<int>(coords.size());
    if (n < 1) throw std::invalid_argument("ex_eval: at least one coordinate");
    const int deg = nilpotence_degree(x);
    if (Integer(deg) > ipow(p, static_cast<unsigned long>(n)))
        throw std::invalid_argument("ex_eval: X^{p^n} != 0");
    Matrix<T> acc = Matrix<T>::identity(x.rows(), x.zero());
    for (int i = 0; i < n; ++i) {
        Matrix<T> block = x.pow(ipow(p, static_cast<unsigned long>(i)).get_ui());
        acc = acc * ah_factor(block, coords[i], p, deg);
    }
    return acc;
}

template <typename T>
Matrix<T> ex_eval(const Matrix<T>& x, const WittVector<T>& t) {
    return ex_eval(x, t.coords, t.p);
}

// Over a ring containing the rationals, E_X factors through the ghost map:
// with this file's sign convention F = exp(-(t + t^p/p + ...)), the exact
// identity is E_X(t) = exp(-sum_j p^{-j} w_j(t) X^{p^j}), since
// sum_j p^{-j} w_j(t) X^{p^j} = sum_{m,l} p^{-l} (t_m X^{p^m})^{p^l}.
template <typename T>
bool ghost_factorization_check(const Matrix<T>& x, const std::vector<T>& coords, std::uint64_t p) {
    if (ring_ops<T>::characteristic(x.zero()) != 0)
        throw std::invalid_argument("ghost_factorization_check: p must be invertible");
    const int n = static_cast<int>(coords.size());
    WittVector<T> t;
    t.p = p;
    t.coords = coords;
    std::vector<T> ghosts = ghost(t);
    Matrix<T> arg = Matrix<T>::zeros(x.rows(), x.rows(), x.zero());
    for (int j = 0; j < n; ++j) {
        Matrix<T> block = x.pow(ipow(p, static_cast<unsigned long>(j)).get_ui());
        T scale = ghosts[j] * ring_ops<T>::from_rational(
                                  make_rational(Integer(1), ipow(p, static_cast<unsigned long>(j))),
                                  x.zero());
        arg = arg + block.scaled(scale);
    }
    return trunc_exp(-arg) == ex_eval(x, coords, p);
}

struct LatticePreservation {
    bool preserves = false;         // every entry of exp(X) has vp >= 0
    bool remark_condition = false;  // vp(entries of X^p) >= 1 and X^{p^2} = 0
    int min_entry_vp = 0;           // worst entry valuation of exp(X)
};

// X must have integer entries (the lattice is the standard one).
inline LatticePreservation lattice_preservation(const Matrix<Rational>& x, std::uint64_t p) {
    require_prime(p, "lattice_preservation");
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < x.cols(); ++j)
            if (!is_integral(x(i, j)))
                throw std::invalid_argument("lattice_preservation: integer entries required");
    LatticePreservation out;
    Matrix<Rational> e = trunc_exp(x);
    int min_vp = vp_infinity;
    for (int i = 0; i < e.rows(); ++i)
        for (int j = 0; j < e.cols(); ++j)
            if (e(i, j) != 0) min_vp = std::min(min_vp, vp(e(i, j), p));
    out.min_entry_vp = min_vp == vp_infinity ? 0 : min_vp;
    out.preserves = out.min_entry_vp >= 0;

    Matrix<Rational> xp = x.pow(static_cast<unsigned long>(p));
    bool cond = true;
    for (int i = 0; i < xp.rows() && cond; ++i)
        for (int j = 0; j < xp.cols() && cond; ++j)
            if (xp(i, j) != 0 && vp(xp(i, j), p) < 1) cond = false;
    if (cond) cond = xp.pow(static_cast<unsigned long>(p)).is_zero();
    out.remark_condition = cond;
    return out;
}

}  // namespace unip
