#pragma once

// Derivations of F_p[T_0..T_{n-1}] represented by their values on the
// generators, with a stated degree bound serving as the verification
// horizon: applications are exact polynomial computations, and the bound
// says up to which total degree operator identities are to be checked.
//
// Used for the length-2 Witt group and its isogenous comparison group: the
// invariant derivations span the Lie algebra, and p-th powers of invariant
// derivations are again derivations, recovered from their generator values.

#include <stdexcept>
#include <vector>

#include "unip/fp.hpp"
#include "unip/poly.hpp"
#include "unip/witt.hpp"

namespace unip {

class TruncatedDerivation {
  public:
    TruncatedDerivation(std::uint64_t p, std::vector<Polynomial<Fp>> generator_values,
                        int degree_bound)
        : p_(p), gen_(std::move(generator_values)), bound_(degree_bound) {
        require_prime(p, "TruncatedDerivation");
        if (gen_.empty()) throw std::invalid_argument("TruncatedDerivation: no generators");
        for (const auto& g : gen_)
            if (g.nvars() != static_cast<int>(gen_.size()))
                throw std::invalid_argument("TruncatedDerivation: arity mismatch");
    }

    std::uint64_t p() const { return p_; }
    int nvars() const { return static_cast<int>(gen_.size()); }
    int degree_bound() const { return bound_; }
    const std::vector<Polynomial<Fp>>& generator_values() const { return gen_; }

    int max_generator_degree() const {
        int d = 0;
        for (const auto& g : gen_) d = std::max(d, g.total_degree());
        return d;
    }

    Polynomial<Fp> apply(const Polynomial<Fp>& f) const {
        Polynomial<Fp> out(f.nvars(), f.coeff_zero(), f.names());
        for (int i = 0; i < nvars(); ++i) out += gen_[i] * f.derivative(i);
        return out;
    }

    Polynomial<Fp> apply_iterated(Polynomial<Fp> f, unsigned long times) const {
        for (unsigned long k = 0; k < times; ++k) f = apply(f);
        return f;
    }

    bool operator==(const TruncatedDerivation& o) const {
        return p_ == o.p_ && gen_ == o.gen_;
    }
    bool operator!=(const TruncatedDerivation& o) const { return !(*this == o); }

  private:
    std::uint64_t p_;
    std::vector<Polynomial<Fp>> gen_;
    int bound_;
};

// The p-th operator power of D, re-expressed as a derivation by its values
// on the generators (valid in characteristic p). The degree bound must cover
// the iterated images, i.e. bound >= p * (max degree of generator images).
inline TruncatedDerivation derivation_p_power(const TruncatedDerivation& d) {
    const int needed = static_cast<int>(d.p()) * std::max(1, d.max_generator_degree());
    if (d.degree_bound() < needed)
        throw std::invalid_argument("derivation_p_power: degree bound too small");
    std::vector<Polynomial<Fp>> values;
    for (int i = 0; i < d.nvars(); ++i) {
        Polynomial<Fp> ti = Polynomial<Fp>::variable(i, d.nvars(), Fp(0, d.p()),
                                                     d.generator_values()[0].names());
        values.push_back(d.apply_iterated(ti, d.p()));
    }
    return TruncatedDerivation(d.p(), std::move(values), d.degree_bound());
}

// Checks that the operator D^p agrees with the derivation `dp` on every
// monomial of total degree <= the verification bound.
inline bool p_power_agrees_as_operator(const TruncatedDerivation& d, const TruncatedDerivation& dp) {
    const int n = d.nvars();
    const int bound = d.degree_bound();
    std::vector<int> expo(n, 0);
    // iterate all monomials with total degree <= bound
    while (true) {
        int total = 0;
        for (int e : expo) total += e;
        if (total <= bound) {
            Polynomial<Fp> mono(n, Fp(0, d.p()), d.generator_values()[0].names());
            mono.add_term(expo, Fp(1, d.p()));
            if (d.apply_iterated(mono, d.p()) != dp.apply(mono)) return false;
        }
        // advance odometer, capping each digit at bound
        int i = 0;
        while (i < n) {
            if (++expo[i] <= bound) break;
            expo[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return true;
}

// The invariant derivations spanning Lie(W_2): X_0 = d/dT_0 - T_0^{p-1} d/dT_1
// and X_1 = d/dT_1. (Invariance forces the minus sign; it is verified against
// the comultiplication in the test suite.)
inline std::pair<TruncatedDerivation, TruncatedDerivation> witt2_invariant_derivations(
    std::uint64_t p, int degree_bound) {
    require_prime(p, "witt2_invariant_derivations");
    const Fp zero(0, p);
    const std::vector<std::string> names = {"T0", "T1"};
    Polynomial<Fp> one = Polynomial<Fp>::constant(Fp(1, p), 2, zero, names);
    Polynomial<Fp> t0 = Polynomial<Fp>::variable(0, 2, zero, names);
    Polynomial<Fp> z(2, zero, names);

    std::vector<Polynomial<Fp>> x0_values = {one, -(t0.pow(p - 1))};
    std::vector<Polynomial<Fp>> x1_values = {z, one};
    return {TruncatedDerivation(p, x0_values, degree_bound),
            TruncatedDerivation(p, x1_values, degree_bound)};
}

// The coordinate derivations d/dT_0, d/dT_1, which span Lie of the
// comparison group V_2.
inline std::pair<TruncatedDerivation, TruncatedDerivation> v2_invariant_derivations(
    std::uint64_t p, int degree_bound) {
    require_prime(p, "v2_invariant_derivations");
    const Fp zero(0, p);
    const std::vector<std::string> names = {"T0", "T1"};
    Polynomial<Fp> one = Polynomial<Fp>::constant(Fp(1, p), 2, zero, names);
    Polynomial<Fp> z(2, zero, names);
    return {TruncatedDerivation(p, {one, z}, degree_bound),
            TruncatedDerivation(p, {z, one}, degree_bound)};
}

// Left-invariance of D against an explicit coproduct: delta gives the images
// of T_0..T_{n-1} in F_p[T_0..T_{n-1}, S_0..S_{n-1}] (T-block first). Checks
// Delta(D(T_i)) = (1 (x) D)(Delta(T_i)) on every generator.
inline bool is_invariant_derivation(const TruncatedDerivation& d,
                                    const std::vector<Polynomial<Fp>>& delta) {
    const int n = d.nvars();
    if (static_cast<int>(delta.size()) != n)
        throw std::invalid_argument("is_invariant_derivation: coproduct arity mismatch");
    const Fp zero(0, d.p());
    const int big = 2 * n;
    const auto& names2 = delta[0].names();

    // (1 (x) D): acts on the S-block with D's generator values moved there.
    std::vector<Polynomial<Fp>> one_tensor_d_values;
    std::vector<Polynomial<Fp>> t_to_s(n, Polynomial<Fp>(big, zero, names2));
    for (int i = 0; i < n; ++i)
        t_to_s[i] = Polynomial<Fp>::variable(n + i, big, zero, names2);
    for (int i = 0; i < n; ++i) one_tensor_d_values.push_back(Polynomial<Fp>(big, zero, names2));
    for (int i = 0; i < n; ++i)
        one_tensor_d_values.push_back(d.generator_values()[i].substitute(t_to_s));
    TruncatedDerivation one_tensor_d(d.p(), one_tensor_d_values, d.degree_bound());

    for (int i = 0; i < n; ++i) {
        Polynomial<Fp> lhs = d.generator_values()[i].substitute(delta);  // Delta(D(T_i))
        Polynomial<Fp> rhs = one_tensor_d.apply(delta[i]);
        if (lhs != rhs) return false;
    }
    return true;
}

// Coproduct of W_2 in doubled variables (T0,T1,S0,S1):
//   Delta(T0) = T0 + S0,  Delta(T1) = T1 + S1 + F(T0, S0).
inline std::vector<Polynomial<Fp>> witt2_coproduct(std::uint64_t p) {
    const Fp zero(0, p);
    const std::vector<std::string> names = {"T0", "T1", "S0", "S1"};
    auto var = [&](int i) { return Polynomial<Fp>::variable(i, 4, zero, names); };
    // F(X0, Y0) = S_1 - X_1 - Y_1 from the universal sum polynomials.
    const auto& sum = witt_sum_polynomials(p, 2);
    std::vector<Polynomial<Fp>> images = {var(0), Polynomial<Fp>(4, zero, names),
                                          var(2), Polynomial<Fp>(4, zero, names)};
    Polynomial<Fp> f(4, zero, names);
    for (const auto& [mono, c] : sum[1].terms()) {
        // variables of sum[1]: X0,X1,Y0,Y1 -> T0,T1,S0,S1; drop X1/Y1 terms
        if (mono[1] != 0 || mono[3] != 0) continue;
        std::vector<int> m4 = {mono[0], 0, mono[2], 0};
        f.add_term(m4, Fp::from_integer(c, p));
    }
    return {var(0) + var(2), var(1) + var(3) + f};
}

// Coproduct of the comparison group V_2: the correction term is F^p.
inline std::vector<Polynomial<Fp>> v2_coproduct(std::uint64_t p) {
    auto delta = witt2_coproduct(p);
    const Fp zero(0, p);
    auto var = [&](int i) {
        return Polynomial<Fp>::variable(i, 4, zero, delta[0].names());
    };
    Polynomial<Fp> f = delta[1] - var(1) - var(3);
    return {delta[0], var(1) + var(3) + f.pow(p)};
}

}  // namespace unip
