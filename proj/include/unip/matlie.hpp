#pragma once

// Matrix Lie-theoretic measurements: nilpotence and p-nilpotence degrees,
// Jordan types from rank sequences, the Jacobson congruence defect inside
// strict upper triangular matrices, BCH via exact matrix logarithms, and
// simultaneous strict triangularization of commuting nilpotent families.
//
// The [p]-operation on any restricted subalgebra of gl_n presented by
// matrices is the ordinary p-th matrix power, so p-nilpotence degrees here
// are plain matrix computations.

#include <stdexcept>
#include <vector>

#include "unip/artinhasse.hpp"
#include "unip/matrix.hpp"

namespace unip {

// Minimal m >= 0 with X^{p^m} = 0 (m = 0 for the zero matrix).
template <typename T>
int p_nilpotence_degree(const Matrix<T>& x, std::uint64_t p) {
    require_prime(p, "p_nilpotence_degree");
    const int deg = nilpotence_degree(x);  // throws if not nilpotent
    int m = 0;
    Integer pm(1);
    while (pm < deg) {
        pm *= static_cast<unsigned long>(p);
        ++m;
    }
    return m;
}

// Partition of the dimension from the rank sequence of powers: the number
// of Jordan blocks of size >= i is rank(X^{i-1}) - rank(X^i).
template <typename T>
std::vector<int> jordan_type(const Matrix<T>& x) {
    const int n = x.rows();
    const int deg = nilpotence_degree(x);
    std::vector<int> ranks = {n};
    Matrix<T> power = x;
    for (int i = 1; i <= deg; ++i) {
        ranks.push_back(rank(power));
        power = power * x;
    }
    std::vector<int> partition;
    for (int i = 1; i <= deg; ++i) {
        int at_least_i = ranks[i - 1] - ranks[i];
        int at_least_next = i < deg ? ranks[i] - ranks[i + 1] : 0;
        for (int k = 0; k < at_least_i - at_least_next; ++k) partition.push_back(i);
    }
    std::sort(partition.rbegin(), partition.rend());
    return partition;
}

// Jacobson congruence defect D = (sum X_i)^p - sum X_i^p for strictly upper
// triangular matrices, together with membership of D in C^p L. The central
// series is indexed with C^1 L = L, so C^p L for the strict-upper model is
// the span of length-p products: matrices supported on superdiagonals >= p.
// (The worked 3x3, p=2 case [e12, e23] = e13 in C^2 L pins this indexing.)
template <typename T>
std::pair<Matrix<T>, bool> jacobson_defect(const std::vector<Matrix<T>>& xs, std::uint64_t p) {
    require_prime(p, "jacobson_defect");
    if (xs.empty()) throw std::invalid_argument("jacobson_defect: empty list");
    const int n = xs[0].rows();
    Matrix<T> sum = Matrix<T>::zeros(n, n, xs[0].zero());
    Matrix<T> sum_of_powers = sum;
    for (const auto& x : xs) {
        if (!x.is_strictly_upper())
            throw std::invalid_argument("jacobson_defect: strictly upper triangular input required");
        sum = sum + x;
        sum_of_powers = sum_of_powers + x.pow(static_cast<unsigned long>(p));
    }
    Matrix<T> defect = sum.pow(static_cast<unsigned long>(p)) - sum_of_powers;
    bool in_cp = true;
    for (int i = 0; i < n && in_cp; ++i)
        for (int j = 0; j < n && in_cp; ++j)
            if (j - i < static_cast<int>(p) && !(defect(i, j) == defect.zero())) in_cp = false;
    return {defect, in_cp};
}

// log(exp(X) exp(Y)) over the exact rationals; X and Y must generate a
// nilpotent associative algebra (the product of their exponentials must be
// unipotent), e.g. both strictly upper triangular.
inline Matrix<Rational> bch(const Matrix<Rational>& x, const Matrix<Rational>& y) {
    Matrix<Rational> prod = trunc_exp(x) * trunc_exp(y);
    Matrix<Rational> n = prod - Matrix<Rational>::identity(prod.rows(), prod.zero());
    nilpotence_degree(n);  // rejects non-unipotent products
    return trunc_log(prod);
}

// Common flag from iterated joint kernels: U_1 = ker of all X_i, and
// U_{j+1} the preimage of U_j under every X_i. Returns g with g X_i g^{-1}
// strictly upper triangular for every i.
template <typename T>
Matrix<T> simultaneous_strict_triangularize(const std::vector<Matrix<T>>& xs) {
    if (xs.empty()) throw std::invalid_argument("simultaneous_strict_triangularize: empty list");
    const int n = xs[0].rows();
    for (const auto& x : xs) {
        x.require_square();
        if (x.rows() != n) throw std::invalid_argument("simultaneous_strict_triangularize: sizes differ");
        nilpotence_degree(x);  // rejects non-nilpotent input
    }
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (xs[i] * xs[j] != xs[j] * xs[i])
                throw std::invalid_argument("simultaneous_strict_triangularize: matrices do not commute");

    // A_j has kernel U_j; start with U_0 = 0 (A_0 = identity) and refine.
    Matrix<T> a = Matrix<T>::identity(n, xs[0].zero());
    std::vector<Matrix<T>> flag_basis;  // columns appended level by level
    int dim_so_far = 0;
    while (dim_so_far < n) {
        // preimage of ker(a) under every x: kernel of the stack of a*x_i
        std::vector<Matrix<T>> stacked;
        for (const auto& x : xs) stacked.push_back(a * x);
        Matrix<T> next = kernel_basis(vstack(stacked));
        if (next.cols() <= dim_so_far)
            throw std::invalid_argument("simultaneous_strict_triangularize: flag stalled");
        // extend the basis collected so far by new columns of `next`
        std::vector<Matrix<T>> parts = flag_basis;
        parts.push_back(next);
        Matrix<T> candidate = hstack(parts);
        // select a maximal independent subset, preferring earlier columns
        Matrix<T> echelon = candidate;
        std::vector<int> pivots = row_reduce(echelon);
        Matrix<T> basis = Matrix<T>::zeros(n, static_cast<int>(pivots.size()), xs[0].zero());
        for (std::size_t k = 0; k < pivots.size(); ++k)
            for (int r = 0; r < n; ++r) basis(r, static_cast<int>(k)) = candidate(r, pivots[k]);
        flag_basis = {basis};
        dim_so_far = basis.cols();
        // rows of a matrix whose kernel is the span collected so far:
        // the non-pivot rows of the reduced transpose give such a matrix;
        // simpler: a = matrix whose kernel is span(basis) via row reduction
        // of basis^T and taking the annihilator.
        Matrix<T> bt = basis.transpose();
        Matrix<T> ann = kernel_basis(bt);  // columns v with basis^T v = 0 ... (n x (n-dim))
        a = ann.transpose();
        if (a.rows() == 0) a = Matrix<T>::zeros(1, n, xs[0].zero());
    }
    Matrix<T> columns = hstack(flag_basis);
    return inverse(columns);
}

}  // namespace unip
