#pragma once

// Witt vectors of finite length: the Witt (ghost) polynomials w_m, the
// universal sum and negation polynomials with certified integer
// coefficients, the additive group over an arbitrary exact coefficient
// ring, ghost components where p is invertible, and element orders over
// prime fields.
//
// Sum polynomials are solved recursively from
//   w_m(S) = w_m(X) + w_m(Y),
// dividing by p^m exactly at each stage; any non-exact division signals an
// implementation bug and throws. Computed polynomials are cached per (p, n);
// the cache is written once under a mutex and read concurrently.

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/fp.hpp"
#include "unip/poly.hpp"
#include "unip/rational.hpp"

namespace unip {

using ExactPoly = Polynomial<Integer>;

namespace detail {

inline std::vector<std::string> witt_var_names(int n, bool pairs) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("X" + std::to_string(i));
    if (pairs)
        for (int i = 0; i < n; ++i) names.push_back("Y" + std::to_string(i));
    return names;
}

// w_m in the first block of an nvars-variable ring, shifted by `offset`.
inline ExactPoly witt_polynomial_in(std::uint64_t p, int m, int nvars, int offset,
                                    const std::vector<std::string>& names) {
    ExactPoly w(nvars, Integer(0), names);
    for (int i = 0; i <= m; ++i) {
        std::vector<int> mono(nvars, 0);
        mono.at(offset + i) = static_cast<int>(ipow(p, static_cast<unsigned long>(m - i)).get_ui());
        w.add_term(mono, ipow(p, static_cast<unsigned long>(i)));
    }
    return w;
}

inline ExactPoly divide_exact(const ExactPoly& poly, const Integer& d, const char* what) {
    ExactPoly out(poly.nvars(), Integer(0), poly.names());
    for (const auto& [mono, c] : poly.terms()) {
        if (c % d != 0)
            throw std::logic_error(std::string("witt: non-integral coefficient in ") + what);
        out.add_term(mono, c / d);
    }
    return out;
}

}  // namespace detail

// w_m = X_0^{p^m} + p X_1^{p^{m-1}} + ... + p^m X_m, in variables X_0..X_m.
inline ExactPoly witt_polynomial(std::uint64_t p, int m) {
    require_prime(p, "witt_polynomial");
    if (m < 0) throw std::invalid_argument("witt_polynomial: m >= 0 required");
    return detail::witt_polynomial_in(p, m, m + 1, 0, detail::witt_var_names(m + 1, false));
}

// S_0..S_{n-1} in variables X_0..X_{n-1}, Y_0..Y_{n-1}.
inline const std::vector<ExactPoly>& witt_sum_polynomials(std::uint64_t p, int n) {
    require_prime(p, "witt_sum_polynomials");
    if (n < 1) throw std::invalid_argument("witt_sum_polynomials: n >= 1 required");
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, int>, std::vector<ExactPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const int nvars = 2 * n;
    const auto names = detail::witt_var_names(n, true);
    std::vector<ExactPoly> s;
    for (int m = 0; m < n; ++m) {
        // residual = w_m(X) + w_m(Y) - sum_{i<m} p^i S_i^{p^{m-i}}
        ExactPoly residual = detail::witt_polynomial_in(p, m, nvars, 0, names) +
                             detail::witt_polynomial_in(p, m, nvars, n, names);
        for (int i = 0; i < m; ++i) {
            unsigned long e = ipow(p, static_cast<unsigned long>(m - i)).get_ui();
            residual -= s[i].pow(e).scaled(ipow(p, static_cast<unsigned long>(i)));
        }
        s.push_back(detail::divide_exact(residual, ipow(p, static_cast<unsigned long>(m)),
                                         "sum polynomial"));
    }
    return cache.emplace(key, std::move(s)).first->second;
}

// N_0..N_{n-1} with w_m(N(X)) = -w_m(X); for odd p this is just -X_m.
inline const std::vector<ExactPoly>& witt_neg_polynomials(std::uint64_t p, int n) {
    require_prime(p, "witt_neg_polynomials");
    if (n < 1) throw std::invalid_argument("witt_neg_polynomials: n >= 1 required");
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, int>, std::vector<ExactPoly>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, n);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const auto names = detail::witt_var_names(n, false);
    std::vector<ExactPoly> neg;
    for (int m = 0; m < n; ++m) {
        ExactPoly residual = -detail::witt_polynomial_in(p, m, n, 0, names);
        for (int i = 0; i < m; ++i) {
            unsigned long e = ipow(p, static_cast<unsigned long>(m - i)).get_ui();
            residual -= neg[i].pow(e).scaled(ipow(p, static_cast<unsigned long>(i)));
        }
        neg.push_back(detail::divide_exact(residual, ipow(p, static_cast<unsigned long>(m)),
                                           "negation polynomial"));
    }
    return cache.emplace(key, std::move(neg)).first->second;
}

template <typename T>
struct WittVector {
    std::uint64_t p = 0;
    std::vector<T> coords;  // coordinate 0 first

    int length() const { return static_cast<int>(coords.size()); }

    bool operator==(const WittVector& o) const { return p == o.p && coords == o.coords; }
    bool operator!=(const WittVector& o) const { return !(*this == o); }
};

template <typename T>
WittVector<T> witt_zero(std::uint64_t p, int n, const T& exemplar) {
    require_prime(p, "witt_zero");
    WittVector<T> w;
    w.p = p;
    w.coords.assign(n, ring_ops<T>::zero(exemplar));
    return w;
}

namespace detail {

template <typename T>
std::vector<T> eval_polys(const std::vector<ExactPoly>& polys, const std::vector<T>& point,
                          const T& exemplar) {
    std::vector<T> out;
    out.reserve(polys.size());
    for (const auto& poly : polys) {
        // evaluate with Integer coefficients mapped into T
        T acc = ring_ops<T>::zero(exemplar);
        std::vector<std::vector<T>> powers(point.size());
        for (std::size_t i = 0; i < point.size(); ++i)
            powers[i].push_back(ring_ops<T>::one(exemplar));
        for (const auto& [mono, c] : poly.terms()) {
            T t = ring_ops<T>::from_integer(c, exemplar);
            for (std::size_t i = 0; i < point.size(); ++i) {
                auto& pw = powers[i];
                while (static_cast<int>(pw.size()) <= mono[i]) pw.push_back(pw.back() * point[i]);
                if (mono[i] > 0) t = t * pw[mono[i]];
            }
            acc += t;
        }
        out.push_back(acc);
    }
    return out;
}

template <typename T>
void check_match(const WittVector<T>& a, const WittVector<T>& b) {
    if (a.p != b.p || a.length() != b.length())
        throw std::invalid_argument("witt: mismatched length or prime");
    if (a.length() > 0 && !(ring_ops<T>::zero(a.coords[0]) == ring_ops<T>::zero(b.coords[0])))
        throw std::invalid_argument("witt: mismatched coefficient rings");
}

}  // namespace detail

template <typename T>
WittVector<T> witt_add(const WittVector<T>& a, const WittVector<T>& b) {
    detail::check_match(a, b);
    const int n = a.length();
    std::vector<T> point = a.coords;
    point.insert(point.end(), b.coords.begin(), b.coords.end());
    WittVector<T> out;
    out.p = a.p;
    out.coords = detail::eval_polys(witt_sum_polynomials(a.p, n), point, a.coords[0]);
    return out;
}

template <typename T>
WittVector<T> witt_neg(const WittVector<T>& a) {
    WittVector<T> out;
    out.p = a.p;
    out.coords = detail::eval_polys(witt_neg_polynomials(a.p, a.length()), a.coords, a.coords[0]);
    return out;
}

template <typename T>
WittVector<T> witt_scalar_multiple(const WittVector<T>& a, unsigned long k) {
    WittVector<T> acc = witt_zero(a.p, a.length(), a.coords[0]);
    WittVector<T> base = a;
    while (k > 0) {
        if (k & 1) acc = witt_add(acc, base);
        k >>= 1;
        if (k) base = witt_add(base, base);
    }
    return acc;
}

// Ghost components (w_0(t), ..., w_{n-1}(t)); requires p invertible in the
// coefficient ring, so prime-field coordinates are rejected.
template <typename T>
std::vector<T> ghost(const WittVector<T>& a) {
    if (a.length() == 0) return {};
    if (ring_ops<T>::characteristic(a.coords[0]) != 0)
        throw std::invalid_argument("ghost: p must be invertible in the coefficient ring");
    std::vector<ExactPoly> ws;
    const auto names = detail::witt_var_names(a.length(), false);
    for (int m = 0; m < a.length(); ++m)
        ws.push_back(detail::witt_polynomial_in(a.p, m, a.length(), 0, names));
    return detail::eval_polys(ws, a.coords, a.coords[0]);
}

inline bool witt_is_zero(const WittVector<Fp>& a) {
    for (const auto& c : a.coords)
        if (!c.is_zero()) return false;
    return true;
}

// Multiplicative order under witt_add; always a power of p, equal to
// p^{n-j} where j counts leading zero coordinates.
inline Integer witt_order(const WittVector<Fp>& a) {
    if (a.length() == 0) return 1;
    if (a.coords[0].modulus() != a.p)
        throw std::invalid_argument("witt_order: coordinates must lie in F_p");
    WittVector<Fp> cur = a;
    Integer order(1);
    int guard = 0;
    while (!witt_is_zero(cur)) {
        cur = witt_scalar_multiple(cur, static_cast<unsigned long>(a.p));
        order *= static_cast<unsigned long>(a.p);
        if (++guard > a.length() + 1) throw std::logic_error("witt_order: did not terminate");
    }
    return order;
}

// The comparison law of the isogenous group V_2:
// (t0,s0,t1,s1) -> (t0 + s0, F(t0,s0)^p + t1 + s1).
inline WittVector<Fp> v2_add(const WittVector<Fp>& a, const WittVector<Fp>& b) {
    detail::check_match(a, b);
    if (a.length() != 2) throw std::invalid_argument("v2_add: length 2 required");
    const auto& sum = witt_sum_polynomials(a.p, 2);
    // F(X0, Y0) = S_1 - X_1 - Y_1
    std::vector<Fp> point = {a.coords[0], Fp(0, a.p), b.coords[0], Fp(0, a.p)};
    Fp f = detail::eval_polys(sum, point, a.coords[0])[1];
    WittVector<Fp> out = a;
    out.coords[0] = a.coords[0] + b.coords[0];
    out.coords[1] = f.pow(a.p) + a.coords[1] + b.coords[1];
    return out;
}

}  // namespace unip
