#pragma once

// Shared helpers for the unit suites.

#include "unip/matrix.hpp"
#include "unip/rng.hpp"

namespace unip::testing {

template <typename T>
Matrix<T> jordan_block(int size, const T& exemplar) {
    Matrix<T> j = Matrix<T>::zeros(size, size, exemplar);
    const T one = ring_ops<T>::one(exemplar);
    for (int i = 0; i + 1 < size; ++i) j(i, i + 1) = one;
    return j;
}

template <typename T>
Matrix<T> direct_sum(const std::vector<Matrix<T>>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows();
    Matrix<T> out = Matrix<T>::zeros(n, n, blocks.at(0).zero());
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows(); ++i)
            for (int j = 0; j < b.cols(); ++j) out(off + i, off + j) = b(i, j);
        off += b.rows();
    }
    return out;
}

inline Matrix<Fp> random_strict_upper(int n, std::uint64_t p, Rng& rng) {
    Matrix<Fp> m = Matrix<Fp>::zeros(n, n, Fp(0, p));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m(i, j) = Fp(rng.below(p), p);
    return m;
}

inline Matrix<Fp> random_invertible(int n, std::uint64_t p, Rng& rng) {
    while (true) {
        Matrix<Fp> g = Matrix<Fp>::zeros(n, n, Fp(0, p));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) g(i, j) = Fp(rng.below(p), p);
        if (rank(g) == n) return g;
    }
}

}  // namespace unip::testing
