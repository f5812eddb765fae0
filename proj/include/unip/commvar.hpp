#pragma once

// The variety of commuting d-tuples of p-nilpotent matrices, as a point set
// over prime fields: membership, exhaustive census at tiny sizes, the
// one-parameter-subgroup map eps(t) = exp(t X_0) exp(t^p X_1) ... built from
// a member tuple, and its injectivity via coefficient-by-coefficient
// recovery of the tuple from the map.

#include <stdexcept>
#include <string>
#include <vector>

#include "unip/artinhasse.hpp"
#include "unip/matlie.hpp"
#include "unip/matrix.hpp"
#include "unip/poly.hpp"

namespace unip {

// An ambient span of matrices over F_p in which tuples take their entries.
struct AmbientBasis {
    std::uint64_t p = 0;
    int n = 0;
    std::vector<Matrix<Fp>> basis;
    std::string label;
};

inline AmbientBasis strict_upper_ambient(int n, std::uint64_t p) {
    require_prime(p, "strict_upper_ambient");
    AmbientBasis a;
    a.p = p;
    a.n = n;
    a.label = "strict-upper:" + std::to_string(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix<Fp> e = Matrix<Fp>::zeros(n, n, Fp(0, p));
            e(i, j) = Fp(1, p);
            a.basis.push_back(std::move(e));
        }
    return a;
}

inline AmbientBasis gl_ambient(int n, std::uint64_t p) {
    require_prime(p, "gl_ambient");
    AmbientBasis a;
    a.p = p;
    a.n = n;
    a.label = "gl:" + std::to_string(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix<Fp> e = Matrix<Fp>::zeros(n, n, Fp(0, p));
            e(i, j) = Fp(1, p);
            a.basis.push_back(std::move(e));
        }
    return a;
}

// Ambient span from a nilradical model: tuples with entries in the span of
// its root-vector basis.
template <typename BasisHolder>
AmbientBasis ambient_from_basis(const BasisHolder& nm, std::uint64_t p, std::string label) {
    AmbientBasis a;
    a.p = p;
    a.n = nm.ambient_dim;
    a.label = std::move(label);
    a.basis = nm.basis;
    return a;
}

// Pairwise commuting and every X^p = 0.
inline bool is_member(const std::vector<Matrix<Fp>>& tuple, std::uint64_t p) {
    require_prime(p, "is_member");
    for (const auto& x : tuple) {
        if (x.rows() != tuple[0].rows()) throw std::invalid_argument("is_member: size mismatch");
        if (x.zero().modulus() != p) throw std::invalid_argument("is_member: wrong prime");
        if (!x.pow(static_cast<unsigned long>(p)).is_zero()) return false;
    }
    for (std::size_t i = 0; i < tuple.size(); ++i)
        for (std::size_t j = i + 1; j < tuple.size(); ++j)
            if (tuple[i] * tuple[j] != tuple[j] * tuple[i]) return false;
    return true;
}

// Exact count of member d-tuples with entries in the ambient span, by
// exhaustive scan; the point count q^(d * dim) is capped at 10^7.
inline Integer census(const AmbientBasis& ambient, int d) {
    if (d < 1) throw std::invalid_argument("census: d >= 1 required");
    const std::size_t dim = ambient.basis.size();
    Integer points = ipow(ambient.p, static_cast<unsigned long>(dim) * d);
    if (points > 10000000) throw std::invalid_argument("census: point count exceeds 10^7");

    const unsigned long total = points.get_ui();
    Integer count(0);
    std::vector<Matrix<Fp>> tuple(d, Matrix<Fp>::zeros(ambient.n, ambient.n, Fp(0, ambient.p)));
    for (unsigned long code = 0; code < total; ++code) {
        unsigned long c = code;
        for (int t = 0; t < d; ++t) {
            Matrix<Fp> x = Matrix<Fp>::zeros(ambient.n, ambient.n, Fp(0, ambient.p));
            for (std::size_t k = 0; k < dim; ++k) {
                std::uint64_t digit = c % ambient.p;
                c /= ambient.p;
                if (digit) x = x + ambient.basis[k].scaled(Fp(digit, ambient.p));
            }
            tuple[t] = std::move(x);
        }
        if (is_member(tuple, ambient.p)) ++count;
    }
    return count;
}

// eps(t) = prod_i exp(t^{p^i} X_i), entries univariate polynomials in t of
// degree < p^d; evaluation at t = 0 is the identity.
inline Matrix<Polynomial<Fp>> one_psg(const std::vector<Matrix<Fp>>& tuple, std::uint64_t p) {
    if (!is_member(tuple, p)) throw std::invalid_argument("one_psg: not a member tuple");
    const int n = tuple[0].rows();
    const Polynomial<Fp> pzero(1, Fp(0, p), {"t"});
    Matrix<Polynomial<Fp>> acc = Matrix<Polynomial<Fp>>::identity(n, pzero);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        Polynomial<Fp> tpow(1, Fp(0, p), {"t"});
        tpow.add_term({static_cast<int>(ipow(p, static_cast<unsigned long>(i)).get_ui())},
                      Fp(1, p));
        Matrix<Polynomial<Fp>> arg = Matrix<Polynomial<Fp>>::zeros(n, n, pzero);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                if (!tuple[i](r, s).is_zero()) {
                    Polynomial<Fp> entry = tpow.scaled(tuple[i](r, s));
                    arg(r, s) = entry;
                }
        acc = acc * trunc_exp(arg);
    }
    return acc;
}

// Recovers the member tuple from its one-parameter-subgroup map: the degree-1
// coefficient gives X_0; multiplying by exp(-t X_0) strips the first factor,
// and the remainder is a map in t^p, recursively.
inline std::vector<Matrix<Fp>> recover_tuple(Matrix<Polynomial<Fp>> map, int d, std::uint64_t p) {
    const int n = map.rows();
    const Polynomial<Fp> pzero = ring_ops<Polynomial<Fp>>::zero(map.zero());
    std::vector<Matrix<Fp>> tuple;
    unsigned long stride = 1;  // current factor varies in t^{stride}
    for (int i = 0; i < d; ++i) {
        Matrix<Fp> x = Matrix<Fp>::zeros(n, n, Fp(0, p));
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                x(r, s) = map(r, s).coefficient({static_cast<int>(stride)});
        tuple.push_back(x);
        // strip the factor exp(t^{stride} X_i)
        Polynomial<Fp> tpow(1, Fp(0, p), {"t"});
        tpow.add_term({static_cast<int>(stride)}, Fp(1, p));
        Matrix<Polynomial<Fp>> arg = Matrix<Polynomial<Fp>>::zeros(n, n, pzero);
        for (int r = 0; r < n; ++r)
            for (int s = 0; s < n; ++s)
                if (!x(r, s).is_zero()) arg(r, s) = tpow.scaled(x(r, s));
        map = trunc_exp(-arg) * map;
        stride *= p;
    }
    if (!map.is_identity()) throw std::invalid_argument("recover_tuple: not a product of exponentials");
    return tuple;
}

// True iff (tuple_a == tuple_b) <=> (their maps coincide); mirrors the
// injectivity argument by recovering both tuples from their maps when the
// maps agree.
inline bool injectivity_check(const std::vector<Matrix<Fp>>& a, const std::vector<Matrix<Fp>>& b,
                              std::uint64_t p) {
    Matrix<Polynomial<Fp>> ma = one_psg(a, p);
    Matrix<Polynomial<Fp>> mb = one_psg(b, p);
    const bool maps_equal = (ma == mb);
    const bool tuples_equal = (a == b);
    if (maps_equal) {
        // proof-mirroring: recovery must reproduce both tuples
        auto ra = recover_tuple(ma, static_cast<int>(a.size()), p);
        auto rb = recover_tuple(mb, static_cast<int>(b.size()), p);
        if (ra != a || rb != b) return false;
    }
    return maps_equal == tuples_equal;
}

// M(t + s) = M(t) M(s) as an identity of bivariate polynomial matrices.
inline bool one_psg_is_homomorphism(const std::vector<Matrix<Fp>>& tuple, std::uint64_t p) {
    Matrix<Polynomial<Fp>> m = one_psg(tuple, p);
    const int n = m.rows();
    const Fp z(0, p);
    const std::vector<std::string> names = {"t", "s"};
    const Polynomial<Fp> bzero(2, z, names);
    auto tvar = Polynomial<Fp>::variable(0, 2, z, names);
    auto svar = Polynomial<Fp>::variable(1, 2, z, names);

    Matrix<Polynomial<Fp>> m_t = Matrix<Polynomial<Fp>>::zeros(n, n, bzero);
    Matrix<Polynomial<Fp>> m_s = m_t, m_ts = m_t;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            m_t(r, c) = m(r, c).substitute({tvar});
            m_s(r, c) = m(r, c).substitute({svar});
            m_ts(r, c) = m(r, c).substitute({tvar + svar});
        }
    return m_ts == m_t * m_s;
}

}  // namespace unip
