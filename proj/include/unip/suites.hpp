#pragma once

// Named verification suites shared by the CLI `verify` command and the
// acceptance runner. Each suite executes a battery of checks with pinned
// expected values and returns one result row per check; all randomness
// derives from the single seed through named streams.
//
// Suites: orders (tables, order arithmetic, the order-formula matrix
// harness, discrepancy regressions), witt (group laws, sum-polynomial
// integrality, element orders, invariant derivations), artinhasse
// (integrality, product identity, E_X homomorphism and orders, ghost
// factorization), bch (matrix BCH and the sp4 exponential coordinates),
// commvar (injectivity, triangularization, Jacobson defects).

#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "unip/artinhasse.hpp"
#include "unip/chevalley.hpp"
#include "unip/commvar.hpp"
#include "unip/derivation.hpp"
#include "unip/matlie.hpp"
#include "unip/parabolic.hpp"
#include "unip/rng.hpp"
#include "unip/rootsys.hpp"
#include "unip/witt.hpp"

namespace unip {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct SuiteConfig {
    std::uint64_t seed = 42;
    int trials = 64;
    int max_rank = 8;
    std::vector<std::uint64_t> primes = {2, 3, 5, 7};
};

namespace suites {

inline void push(std::vector<CheckResult>& out, const std::string& id, bool pass,
                 const std::string& detail = "") {
    out.push_back({id, pass, detail});
}

// --- orders ---------------------------------------------------------------

inline void check_tables(std::vector<CheckResult>& out) {
    struct Row {
        const char* family;
        int two_h_minus_2;
        long n_vmin;
        std::uint64_t p0;
    };
    const Row expected[] = {{"G2", 10, 6, 7},
                            {"F4", 22, 16, 17},
                            {"E6", 22, 16, 17},
                            {"E7", 34, 27, 29},
                            {"E8", 58, 58, 59}};
    for (const Row& row : expected) {
        RootSystem rs = parse_root_system(row.family);
        bool ok_h = (2 * rs.coxeter_number() - 2 == row.two_h_minus_2);
        bool ok_n = (n_of_minimal_module(rs) == row.n_vmin);
        bool ok_p0 = (exponential_type_threshold(rs).p0 == row.p0);
        std::ostringstream d;
        d << "2h-2=" << 2 * rs.coxeter_number() - 2 << " n(Vmin)=" << n_of_minimal_module(rs)
          << " p0=" << exponential_type_threshold(rs).p0;
        push(out, std::string("orders/tables/") + row.family, ok_h && ok_n && ok_p0, d.str());
    }
}

inline void check_g2_arithmetic(std::vector<CheckResult>& out) {
    RootSystem g2 = parse_root_system("G2");
    GradedParabolic borel = grade(g2, {});
    push(out, "orders/g2/nB", n_of_P(borel) == 6 && g2.coxeter_number() == 6, "n(B) = h = 6");
    push(out, "orders/g2/m5", order_exponent(5, 6) == 2, "order_exponent(5,6) = 2, order 25");
    bool big_primes = true;
    for (std::uint64_t p : {7ull, 11ull, 13ull, 17ull, 19ull, 23ull})
        big_primes = big_primes && order_exponent(p, 6) == 1;
    push(out, "orders/g2/m-large", big_primes, "order_exponent(p,6) = 1 for p >= 7");
}

inline void check_discrepancy_regressions(std::vector<CheckResult>& out) {
    RootSystem g2 = parse_root_system("G2");
    // The grading formula gives 3 for the distinguished minimal parabolic of
    // G2, though 4 is sometimes quoted for it; the formula value is pinned.
    GradedParabolic p_short = grade(g2, {0});
    push(out, "orders/discrepancy/g2-nP", n_of_P(p_short) == 3 && is_distinguished(p_short),
         "grading formula gives n(P) = 3 for I = {short simple}, not 4; the formula value is pinned");
    // lcs_class = n(P) - 1 across a survey (the class-vs-n(P) off-by-one).
    bool all = true;
    for (const char* name : {"A3", "B3", "C3", "D4", "G2", "F4"}) {
        RootSystem rs = parse_root_system(name);
        for (unsigned long mask = 0; mask + 1 < (1ul << rs.rank()); ++mask) {
            std::vector<int> levi;
            for (int i = 0; i < rs.rank(); ++i)
                if (mask & (1ul << i)) levi.push_back(i);
            GradedParabolic gp = grade(rs, levi);
            all = all && (lcs_class(gp) == n_of_P(gp) - 1);
        }
    }
    push(out, "orders/discrepancy/lcs-offset", all,
         "lcs_class = n(P) - 1 for every proper parabolic surveyed");
}

inline void run_order_harness(std::vector<CheckResult>& out, const SuiteConfig& cfg) {
    auto cases = order_case_grid(cfg.max_rank, cfg.primes);
    int passed = 0, failed = 0, inconclusive = 0;
    for (const OrderCase& c : cases) {
        OrderReport r = verify_order_formula(c, cfg.seed, cfg.trials);
        std::ostringstream d;
        d << "nP=" << r.nP << " m=" << r.m << " degree=" << r.measured_degree
          << " order=" << r.measured_order.get_str() << " trials=" << r.trials_used;
        if (!r.note.empty()) d << " (" << r.note << ")";
        push(out, "orders/formula/" + c.id(), r.pass, d.str());
        if (r.pass)
            ++passed;
        else if (r.inconclusive)
            ++inconclusive;
        else
            ++failed;
    }
    std::ostringstream d;
    d << passed << " passed, " << failed << " failed, " << inconclusive << " inconclusive of "
      << cases.size();
    push(out, "orders/formula-summary", failed == 0 && inconclusive == 0, d.str());
}

inline void suite_orders(std::vector<CheckResult>& out, const SuiteConfig& cfg) {
    check_tables(out);
    check_g2_arithmetic(out);
    check_discrepancy_regressions(out);
    run_order_harness(out, cfg);
}

// --- witt -------------------------------------------------------------------

inline std::vector<WittVector<Fp>> all_witt_vectors(std::uint64_t p, int n) {
    std::vector<WittVector<Fp>> all;
    unsigned long count = ipow(p, n).get_ui();
    for (unsigned long code = 0; code < count; ++code) {
        WittVector<Fp> w = witt_zero(p, n, Fp(0, p));
        unsigned long c = code;
        for (int i = 0; i < n; ++i) {
            w.coords[i] = Fp(c % p, p);
            c /= p;
        }
        all.push_back(w);
    }
    return all;
}

inline void suite_witt(std::vector<CheckResult>& out, const SuiteConfig& cfg) {
    // exhaustive abelian group laws
    struct PN {
        std::uint64_t p;
        int n;
    };
    for (PN pn : {PN{2, 2}, PN{3, 2}, PN{2, 3}}) {
        auto all = all_witt_vectors(pn.p, pn.n);
        WittVector<Fp> zero = witt_zero(pn.p, pn.n, Fp(0, pn.p));
        bool ok = true;
        for (const auto& a : all) {
            ok = ok && witt_add(a, zero) == a;
            ok = ok && witt_is_zero(witt_add(a, witt_neg(a)));
            for (const auto& b : all) {
                ok = ok && witt_add(a, b) == witt_add(b, a);
                for (const auto& c : all)
                    ok = ok && witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c));
            }
        }
        push(out,
             "witt/group/p" + std::to_string(pn.p) + "n" + std::to_string(pn.n), ok,
             "identity, inverses, commutativity, associativity, exhaustive");
    }

    // sum-polynomial integrality for p <= 5, n <= 4 (construction certifies
    // every exact division; failure would throw)
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        bool ok = true;
        std::string note = "all coefficients integral";
        try {
            for (int n = 1; n <= 4; ++n) witt_sum_polynomials(p, n);
        } catch (const std::exception& e) {
            ok = false;
            note = e.what();
        }
        push(out, "witt/integrality/p" + std::to_string(p), ok, note);
    }

    // randomized ghost additivity over the integers (independent of the
    // recursive solve) for (5,2) and (3,3)
    {
        Rng rng = Rng(cfg.seed).derive("witt-ghost");
        bool ok = true;
        for (PN pn : {PN{5, 2}, PN{3, 3}}) {
            for (int rep = 0; rep < 1000; ++rep) {
                WittVector<Rational> a = witt_zero(pn.p, pn.n, Rational(0));
                WittVector<Rational> b = witt_zero(pn.p, pn.n, Rational(0));
                for (int i = 0; i < pn.n; ++i) {
                    a.coords[i] = Rational(static_cast<long>(rng.below(41)) - 20);
                    b.coords[i] = Rational(static_cast<long>(rng.below(41)) - 20);
                }
                auto ga = ghost(a), gb = ghost(b), gc = ghost(witt_add(a, b));
                for (int i = 0; i < pn.n; ++i) ok = ok && gc[i] == ga[i] + gb[i];
            }
        }
        push(out, "witt/ghost-additivity", ok, "1000 random integer vectors per (p,n)");
    }

    // randomized group laws over F_p for (5,2) and (3,3)
    {
        Rng rng = Rng(cfg.seed).derive("witt-random-laws");
        bool ok = true;
        for (PN pn : {PN{5, 2}, PN{3, 3}}) {
            WittVector<Fp> zero = witt_zero(pn.p, pn.n, Fp(0, pn.p));
            for (int rep = 0; rep < 1000; ++rep) {
                WittVector<Fp> a = zero, b = zero, c = zero;
                for (int i = 0; i < pn.n; ++i) {
                    a.coords[i] = Fp(rng.below(pn.p), pn.p);
                    b.coords[i] = Fp(rng.below(pn.p), pn.p);
                    c.coords[i] = Fp(rng.below(pn.p), pn.p);
                }
                ok = ok && witt_add(a, zero) == a;
                ok = ok && witt_is_zero(witt_add(a, witt_neg(a)));
                ok = ok && witt_add(a, b) == witt_add(b, a);
                ok = ok && witt_add(witt_add(a, b), c) == witt_add(a, witt_add(b, c));
            }
        }
        push(out, "witt/group-random", ok, "1000 random triples per (p,n) in {(5,2),(3,3)}");
    }

    // element orders: p^n iff t0 != 0, exhaustive for p <= 5, n <= 2
    {
        bool ok = true;
        for (std::uint64_t p : {2ull, 3ull, 5ull})
            for (int n = 1; n <= 2; ++n) {
                Integer pn_order = ipow(p, n);
                for (const auto& w : all_witt_vectors(p, n)) {
                    Integer order = witt_order(w);
                    ok = ok && ((order == pn_order) == !w.coords[0].is_zero());
                    int j = 0;
                    while (j < n && w.coords[j].is_zero()) ++j;
                    ok = ok && order == ipow(p, n - j);
                }
            }
        push(out, "witt/order", ok, "order p^{n-j}; full order iff t0 != 0");
    }

    // the comparison group V2: exponent p^2 with p-nilpotent Lie algebra
    {
        bool ok = true;
        for (std::uint64_t p : {2ull, 3ull}) {
            Integer max_order(1);
            for (const auto& w : all_witt_vectors(p, 2)) {
                WittVector<Fp> cur = w;
                Integer order(1);
                while (!witt_is_zero(cur)) {
                    WittVector<Fp> step = cur;
                    for (std::uint64_t k = 1; k < p; ++k) step = v2_add(step, cur);
                    cur = step;
                    order *= static_cast<unsigned long>(p);
                }
                if (order > max_order) max_order = order;
            }
            ok = ok && max_order == ipow(p, 2);
            auto [d0, d1] = v2_invariant_derivations(p, 4 * static_cast<int>(p));
            ok = ok && is_invariant_derivation(d0, v2_coproduct(p));
            ok = ok && is_invariant_derivation(d1, v2_coproduct(p));
            for (const auto& d : {d0, d1}) {
                TruncatedDerivation dp = derivation_p_power(d);
                for (const auto& g : dp.generator_values()) ok = ok && g.is_zero();
            }
        }
        push(out, "witt/derivations/v2", ok,
             "group exponent p^2, basis derivations with vanishing p-th power");
    }

    // invariant derivations of W_2: X0^{[p]} = X1 exactly, operator-checked
    {
        bool ok = true;
        for (std::uint64_t p : {2ull, 3ull, 5ull}) {
            auto [x0, x1] = witt2_invariant_derivations(p, 4 * static_cast<int>(p));
            ok = ok && is_invariant_derivation(x0, witt2_coproduct(p));
            ok = ok && is_invariant_derivation(x1, witt2_coproduct(p));
            TruncatedDerivation x0p = derivation_p_power(x0);
            ok = ok && x0p == x1;
            ok = ok && p_power_agrees_as_operator(x0, x0p);
        }
        push(out, "witt/derivations/w2", ok,
             "X0^{[p]} = X1 at truncation degree 4p, operator equality");
    }
}

// --- artinhasse --------------------------------------------------------------

inline void suite_artinhasse(std::vector<CheckResult>& out, const SuiteConfig&) {
    // integrality of the first 60 coefficients and product-form identity
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
        AHSeries f = ah_series(p, 60);
        bool integral = true;
        for (unsigned i = 0; i <= 60; ++i)
            if (f.series[i] != 0 && vp(f.series[i], p) < 0) integral = false;
        push(out, "artinhasse/integrality/p" + std::to_string(p), integral,
             "vp >= 0 for the first 60 coefficients");
        AHSeries g = ah_product_form(p, 60);
        push(out, "artinhasse/product/p" + std::to_string(p), f.series == g.series,
             "exp form equals Moebius product form coefficientwise");
    }

    // E_X homomorphism and Witt-subgroup orders for Jordan blocks p^{n-1}+1
    for (std::uint64_t p : {2ull, 3ull}) {
        const int n = 2;
        Matrix<Fp> x = Matrix<Fp>::zeros(static_cast<int>(p) + 1, static_cast<int>(p) + 1, Fp(0, p));
        for (int i = 0; i + 1 <= static_cast<int>(p); ++i) x(i, i + 1) = Fp(1, p);
        auto all = all_witt_vectors(p, n);
        bool hom = true, orders = true;
        for (const auto& a : all) {
            for (const auto& b : all)
                hom = hom && ex_eval(x, witt_add(a, b)) == ex_eval(x, a) * ex_eval(x, b);
            Matrix<Fp> u = ex_eval(x, a);
            Matrix<Fp> power = u;
            int k = 0;
            while (!power.is_identity() && k < 5) {
                power = power.pow(p);
                ++k;
            }
            orders = orders && (ipow(p, k) == ipow(p, n)) == !a.coords[0].is_zero();
        }
        push(out, "artinhasse/ex-hom/p" + std::to_string(p), hom,
             "E_X(a + b) = E_X(a) E_X(b), exhaustive on W_2");
        push(out, "artinhasse/ex-order/p" + std::to_string(p), orders,
             "order of E_X(t) is p^2 iff t0 != 0");

        // span{X, X^p} is [p]-closed with p-exponent exactly n
        bool span = true;
        int max_pexp = 0;
        for (std::uint64_t c0 = 0; c0 < p; ++c0)
            for (std::uint64_t c1 = 0; c1 < p; ++c1) {
                Matrix<Fp> y = x.scaled(Fp(c0, p)) + x.pow(p).scaled(Fp(c1, p));
                span = span && y.pow(p) == x.pow(p).scaled(Fp(c0, p).pow(p));
                max_pexp = std::max(max_pexp, p_nilpotence_degree(y, p));
            }
        push(out, "artinhasse/span-exponent/p" + std::to_string(p), span && max_pexp == n,
             "span of p-power iterates closed under [p], p-exponent exactly 2");
    }

    // ghost factorization as an exact polynomial-matrix identity
    for (std::uint64_t p : {2ull, 3ull}) {
        for (int n : {2, 3}) {
            const int size = static_cast<int>(ipow(p, n - 1).get_ui()) + 1;
            std::vector<std::string> names;
            for (int i = 0; i < n; ++i) names.push_back("t" + std::to_string(i));
            Polynomial<Rational> exemplar(n, Rational(0), names);
            Matrix<Polynomial<Rational>> x = Matrix<Polynomial<Rational>>::zeros(size, size, exemplar);
            for (int i = 0; i + 1 < size; ++i)
                x(i, i + 1) = ring_ops<Polynomial<Rational>>::one(exemplar);
            std::vector<Polynomial<Rational>> t;
            for (int i = 0; i < n; ++i)
                t.push_back(Polynomial<Rational>::variable(i, n, Rational(0), names));
            push(out,
                 "artinhasse/ghost-factor/p" + std::to_string(p) + "n" + std::to_string(n),
                 ghost_factorization_check(x, t, p), "symbolic Jordan-block identity");
        }
    }
}

// --- bch ---------------------------------------------------------------------

inline void suite_bch(std::vector<CheckResult>& out, const SuiteConfig& cfg) {
    // exact small case and the defining identities
    {
        Matrix<Rational> e12 = Matrix<Rational>::zeros(3, 3, Rational(0));
        e12(0, 1) = 1;
        Matrix<Rational> e23 = Matrix<Rational>::zeros(3, 3, Rational(0));
        e23(1, 2) = 1;
        Matrix<Rational> e13 = Matrix<Rational>::zeros(3, 3, Rational(0));
        e13(0, 2) = 1;
        bool ok = bch(e12, e23) == e12 + e23 + e13.scaled(make_rational(1, 2));
        ok = ok && bch(e12, e13) == e12 + e13;  // commuting
        ok = ok && bch(e12, -e12).is_zero();
        push(out, "bch/identities", ok, "e12 * e23 case and commuting/inverse identities");
    }

    // denominators of bch outputs for strict upper n x n involve only primes < n
    {
        Rng rng = Rng(cfg.seed).derive("bch-denominators");
        bool ok = true;
        for (int n = 3; n <= 6; ++n) {
            for (int rep = 0; rep < 25; ++rep) {
                Matrix<Rational> a = Matrix<Rational>::zeros(n, n, Rational(0));
                Matrix<Rational> b = a;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        a(i, j) = Rational(static_cast<long>(rng.below(9)) - 4);
                        b(i, j) = Rational(static_cast<long>(rng.below(9)) - 4);
                    }
                Matrix<Rational> z = bch(a, b);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (std::uint64_t q = n; q < 60; ++q)
                            if (is_prime(q) && z(i, j).get_den() % static_cast<unsigned long>(q) == 0)
                                ok = false;
            }
        }
        push(out, "bch/denominators", ok, "denominator primes below the matrix size only");
    }

    // sp4 exponential coordinates
    {
        auto coords = sp4_exp_coordinates();
        const std::vector<std::string> names = {"a", "b", "c", "d"};
        auto var = [&](int v) { return Polynomial<Rational>::variable(v, 4, Rational(0), names); };
        Polynomial<Rational> a = var(0), b = var(1), c = var(2), d = var(3);
        Polynomial<Rational> ab_half = (a * b).scaled(make_rational(1, 2));
        Polynomial<Rational> bc = b * c;
        Polynomial<Rational> abb = (a * b * b).scaled(make_rational(2, 3));

        bool first_two = coords[0] == a && coords[1] == b;
        bool shape3 = coords[2] == c + ab_half || coords[2] == c - ab_half;
        bool shape4 = false;
        for (int s1 : {-1, 1})
            for (int s2 : {-1, 1})
                if (coords[3] == d + bc.scaled(Rational(s1)) + abb.scaled(Rational(s2)))
                    shape4 = true;
        push(out, "bch/sp4/shape", first_two && shape3 && shape4,
             "u = (a, b, c +- ab/2, d -+ bc -+ (2/3)ab^2) up to realization signs");

        bool denominators = true;
        for (const auto& u : coords)
            for (const auto& [mono, coeff] : u.terms())
                if (Integer(6) % coeff.get_den() != 0) denominators = false;
        push(out, "bch/sp4/denominators", denominators, "all denominators divide 6");
    }
}

// --- commvar -----------------------------------------------------------------

inline void suite_commvar(std::vector<CheckResult>& out, const SuiteConfig& cfg) {
    // injectivity, exhaustive over strict-upper 3x3 members for d = 2, F_5
    {
        const std::uint64_t p = 5;
        auto amb = strict_upper_ambient(3, p);
        const int dim = static_cast<int>(amb.basis.size());
        std::vector<Matrix<Fp>> elems;
        unsigned long total = ipow(p, dim).get_ui();
        for (unsigned long code = 0; code < total; ++code) {
            Matrix<Fp> x = Matrix<Fp>::zeros(3, 3, Fp(0, p));
            unsigned long c = code;
            for (int k = 0; k < dim; ++k) {
                std::uint64_t digit = c % p;
                c /= p;
                if (digit) x = x + amb.basis[k].scaled(Fp(digit, p));
            }
            elems.push_back(x);
        }
        std::map<std::string, std::pair<Matrix<Fp>, Matrix<Fp>>> seen;
        long members = 0;
        bool injective = true;
        for (const auto& a : elems)
            for (const auto& b : elems) {
                if (!is_member({a, b}, p)) continue;
                ++members;
                Matrix<Polynomial<Fp>> m = one_psg({a, b}, p);
                std::string key;
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) key += m(i, j).str() + ";";
                auto [it, inserted] = seen.emplace(key, std::make_pair(a, b));
                if (!inserted && (it->second.first != a || it->second.second != b))
                    injective = false;
            }
        std::ostringstream d;
        d << members << " member pairs, " << seen.size() << " distinct maps";
        push(out, "commvar/injectivity", injective && members == static_cast<long>(seen.size()),
             d.str());
    }

    // simultaneous strict triangularization, 500 randomized gl_4(F_5) members
    {
        const std::uint64_t p = 5;
        Rng rng = Rng(cfg.seed).derive("commvar-triangularize");
        bool ok = true;
        int done = 0;
        while (done < 500) {
            Matrix<Fp> x = Matrix<Fp>::zeros(4, 4, Fp(0, p));
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j) x(i, j) = Fp(rng.below(p), p);
            Matrix<Fp> y = x.pow(2).scaled(Fp(rng.below(p), p)) + x.scaled(Fp(rng.below(p), p)) +
                           x.pow(3).scaled(Fp(rng.below(p), p));
            Matrix<Fp> g = Matrix<Fp>::zeros(4, 4, Fp(0, p));
            for (int i = 0; i < 4; ++i)
                for (int j = 0; j < 4; ++j) g(i, j) = Fp(rng.below(p), p);
            if (rank(g) < 4) continue;
            Matrix<Fp> gi = inverse(g);
            std::vector<Matrix<Fp>> tuple = {g * x * gi, g * y * gi};
            if (!is_member(tuple, p)) continue;
            Matrix<Fp> h = simultaneous_strict_triangularize(tuple);
            Matrix<Fp> hi = inverse(h);
            ok = ok && (h * tuple[0] * hi).is_strictly_upper() &&
                 (h * tuple[1] * hi).is_strictly_upper();
            ++done;
        }
        push(out, "commvar/triangularize", ok, "500 randomized gl_4(F_5) member tuples");
    }

    // Jacobson defect lies in C^p L, 500 randomized strict-upper cases
    {
        Rng rng = Rng(cfg.seed).derive("commvar-jacobson");
        bool ok = true;
        for (std::uint64_t p : {2ull, 3ull}) {
            for (int rep = 0; rep < 250; ++rep) {
                std::vector<Matrix<Fp>> xs;
                for (int k = 0; k < 3; ++k) {
                    Matrix<Fp> x = Matrix<Fp>::zeros(5, 5, Fp(0, p));
                    for (int i = 0; i < 5; ++i)
                        for (int j = i + 1; j < 5; ++j) x(i, j) = Fp(rng.below(p), p);
                    xs.push_back(std::move(x));
                }
                ok = ok && jacobson_defect(xs, p).second;
            }
        }
        push(out, "commvar/jacobson", ok, "500 randomized triples in strict upper 5x5");
    }
}

}  // namespace suites

inline std::vector<std::string> suite_names() {
    return {"orders", "witt", "artinhasse", "bch", "commvar", "all"};
}

inline std::vector<CheckResult> run_suite(const std::string& name, const SuiteConfig& cfg) {
    std::vector<CheckResult> out;
    bool known = false;
    if (name == "orders" || name == "all") {
        suites::suite_orders(out, cfg);
        known = true;
    }
    if (name == "witt" || name == "all") {
        suites::suite_witt(out, cfg);
        known = true;
    }
    if (name == "artinhasse" || name == "all") {
        suites::suite_artinhasse(out, cfg);
        known = true;
    }
    if (name == "bch" || name == "all") {
        suites::suite_bch(out, cfg);
        known = true;
    }
    if (name == "commvar" || name == "all") {
        suites::suite_commvar(out, cfg);
        known = true;
    }
    if (!known) throw std::invalid_argument("run_suite: unknown suite " + name);
    return out;
}

}  // namespace unip
