#pragma once

// Explicit matrix realizations of the classical groups' Lie algebras with
// root-vector bases: sl_n (kind CG1), sp_n for a nondegenerate alternating
// form (CG2), and split so_n (CG3). The bilinear form is antidiagonal so
// that the Borel subalgebra is upper triangular; root vectors are matrix
// units or mirror-pair combinations, with whatever structure-constant signs
// the realization induces.
//
// On top of the realizations: nilradicals of parabolics (including the
// block-parabolic nilradicals of gl_n), Richardson-element sampling by
// maximal rank profile, exponential coordinates on the unipotent radical of
// the rank-2 symplectic Borel, and the order-formula verification harness.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/artinhasse.hpp"
#include "unip/matlie.hpp"
#include "unip/matrix.hpp"
#include "unip/parabolic.hpp"
#include "unip/rng.hpp"
#include "unip/rootsys.hpp"

namespace unip {

enum class ClassicalKind { CG1, CG2, CG3 };

inline std::string kind_name(ClassicalKind k) {
    switch (k) {
        case ClassicalKind::CG1: return "sl";
        case ClassicalKind::CG2: return "sp";
        case ClassicalKind::CG3: return "so";
    }
    throw std::logic_error("kind_name");
}

template <typename T>
struct ClassicalRealization {
    ClassicalKind kind = ClassicalKind::CG1;
    int dim = 0;
    RootSystem rs;
    Matrix<T> form;                       // J; zero matrix in case CG1
    std::vector<Matrix<T>> root_vectors;  // one per positive root, same order as rs

    ClassicalRealization(RootSystem r, Matrix<T> j)
        : rs(std::move(r)), form(std::move(j)) {}
};

namespace detail {

// Diagonal torus pattern: the epsilon-coordinate vector of each matrix row.
// sl_n: row u has weight eps_{u+1}. Form cases: rows 0..r-1 carry
// +eps_1..+eps_r, rows n-r..n-1 carry -eps_r..-eps_1, a middle row (odd
// orthogonal) carries 0.
inline std::vector<std::vector<int>> epsilon_rows(ClassicalKind kind, int n, int eps_dim) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(eps_dim, 0));
    for (int u = 0; u < n; ++u) {
        if (kind == ClassicalKind::CG1 || u < eps_dim)
            rows[u][u] = 1;
        else if (u >= n - eps_dim)
            rows[u][n - 1 - u] = -1;
    }
    return rows;
}

// Simple roots of the classical families in epsilon coordinates.
inline std::vector<std::vector<int>> simple_roots_in_epsilon(Family f, int rank, int eps_dim) {
    std::vector<std::vector<int>> simples(rank, std::vector<int>(eps_dim, 0));
    for (int i = 0; i + 1 < rank; ++i) {
        simples[i][i] = 1;
        simples[i][i + 1] = -1;
    }
    switch (f) {
        case Family::A:  // eps_dim = rank + 1
            simples[rank - 1][rank - 1] = 1;
            simples[rank - 1][rank] = -1;
            break;
        case Family::C:
            simples[rank - 1][rank - 1] = 2;
            break;
        case Family::B:
            simples[rank - 1][rank - 1] = 1;
            break;
        case Family::D:
            simples[rank - 1][rank - 2] = 1;
            simples[rank - 1][rank - 1] = 1;
            break;
        default:
            throw std::invalid_argument("simple_roots_in_epsilon: classical families only");
    }
    return simples;
}

}  // namespace detail

// Antidiagonal-form realization; entries live in the ring of `exemplar`.
// CG3 over characteristic 2 is rejected.
template <typename T>
ClassicalRealization<T> build_realization(ClassicalKind kind, int n, const T& exemplar) {
    if (n < 2) throw std::invalid_argument("build_realization: n >= 2 required");
    const std::uint64_t ch = ring_ops<T>::characteristic(exemplar);
    if (kind == ClassicalKind::CG3 && ch == 2)
        throw std::invalid_argument("build_realization: CG3 requires p != 2");

    Family fam;
    int rank, eps_dim;
    switch (kind) {
        case ClassicalKind::CG1:
            fam = Family::A;
            rank = n - 1;
            eps_dim = n;
            break;
        case ClassicalKind::CG2:
            if (n % 2 != 0 || n < 4)
                throw std::invalid_argument("build_realization: sp needs even n >= 4");
            fam = Family::C;
            rank = eps_dim = n / 2;
            break;
        case ClassicalKind::CG3:
            if (n % 2 == 1) {
                fam = Family::B;
                rank = eps_dim = (n - 1) / 2;
                if (rank < 2) throw std::invalid_argument("build_realization: so needs n >= 5");
            } else {
                fam = Family::D;
                rank = eps_dim = n / 2;
                if (rank < 4)
                    throw std::invalid_argument("build_realization: even so needs n >= 8 here");
            }
            break;
        default:
            throw std::invalid_argument("build_realization: unknown kind");
    }

    const T zero = ring_ops<T>::zero(exemplar);
    const T one = ring_ops<T>::one(exemplar);

    // Antidiagonal form: J[i][n-1-j-...]; eta[j] = sign attached to column j.
    std::vector<int> eta(n, 1);
    if (kind == ClassicalKind::CG2)
        for (int j = n / 2; j < n; ++j) eta[j] = -1;
    Matrix<T> form = Matrix<T>::zeros(n, n, exemplar);
    if (kind != ClassicalKind::CG1)
        for (int j = 0; j < n; ++j)
            form(n - 1 - j, j) = eta[j] > 0 ? one : (zero - one);

    ClassicalRealization<T> real(RootSystem::build(fam, rank), form);
    real.kind = kind;
    real.dim = n;

    const auto rows = detail::epsilon_rows(kind, n, eps_dim);
    const auto simples = detail::simple_roots_in_epsilon(fam, rank, eps_dim);

    for (const Root& root : real.rs.positive_roots()) {
        std::vector<int> w(eps_dim, 0);
        for (int i = 0; i < rank; ++i)
            for (int k = 0; k < eps_dim; ++k) w[k] += root.coeffs[i] * simples[i][k];

        Matrix<T> vec = Matrix<T>::zeros(n, n, exemplar);
        bool found = false;
        for (int u = 0; u < n && !found; ++u) {
            for (int j = 0; j < n; ++j) {
                if (u == j) continue;
                bool match = true;
                for (int k = 0; k < eps_dim; ++k)
                    if (rows[u][k] - rows[j][k] != w[k]) match = false;
                if (!match) continue;
                if (u >= j)
                    throw std::logic_error("build_realization: positive root not upper triangular");
                if (kind == ClassicalKind::CG1) {
                    vec(u, j) = one;
                    found = true;
                    break;
                }
                const int mu = n - 1 - j, mj = n - 1 - u;  // mirror entry
                if (mu == u && mj == j) {
                    // self-mirrored (antidiagonal) entry; allowed iff eta_j = -eta_u
                    if (eta[j] != -eta[u])
                        throw std::logic_error("build_realization: blocked antidiagonal entry");
                    vec(u, j) = one;
                } else {
                    vec(u, j) = one;
                    vec(mu, mj) = (eta[j] * eta[u] > 0) ? (zero - one) : one;
                }
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("build_realization: missing root vector");
        real.root_vectors.push_back(std::move(vec));
    }

    // Form constraint: every root vector satisfies e^T J + J e = 0.
    if (kind != ClassicalKind::CG1)
        for (const auto& e : real.root_vectors)
            if (!(e.transpose() * real.form + real.form * e).is_zero())
                throw std::logic_error("build_realization: form constraint violated");
    return real;
}

template <typename T>
struct NilradicalModel {
    int ambient_dim = 0;
    std::vector<Matrix<T>> basis;
    RootSystem rs;          // combinatorial shadow: root system
    std::vector<int> levi;  // and Levi subset
    std::string label;

    explicit NilradicalModel(RootSystem r) : rs(std::move(r)) {}
};

// Root vectors outside the Levi's root system.
template <typename T>
NilradicalModel<T> nilradical(const ClassicalRealization<T>& real, const std::vector<int>& levi) {
    std::vector<bool> in_levi(real.rs.rank(), false);
    for (int i : levi) {
        if (i < 0 || i >= real.rs.rank()) throw std::invalid_argument("nilradical: bad Levi index");
        in_levi[i] = true;
    }
    NilradicalModel<T> nm(real.rs);
    nm.ambient_dim = real.dim;
    nm.levi = levi;
    std::sort(nm.levi.begin(), nm.levi.end());
    nm.label = kind_name(real.kind) + std::to_string(real.dim);
    const auto& roots = real.rs.positive_roots();
    for (std::size_t k = 0; k < roots.size(); ++k) {
        bool inside_levi = true;
        for (int i = 0; i < real.rs.rank(); ++i)
            if (!in_levi[i] && roots[k].coeffs[i] != 0) inside_levi = false;
        if (!inside_levi) nm.basis.push_back(real.root_vectors[k]);
    }
    return nm;
}

// Block-strictly-upper nilradical of the gl_n parabolic with the given
// block composition; the combinatorial shadow is A_{n-1} with the Levi
// obtained by deleting the cut points.
template <typename T>
NilradicalModel<T> gl_nilradical(const std::vector<int>& blocks, const T& exemplar) {
    int n = 0;
    for (int b : blocks) {
        if (b < 1) throw std::invalid_argument("gl_nilradical: block sizes >= 1");
        n += b;
    }
    if (n < 2) throw std::invalid_argument("gl_nilradical: total size >= 2 required");
    NilradicalModel<T> nm(RootSystem::build(Family::A, n - 1));
    nm.ambient_dim = n;
    nm.label = "gl" + std::to_string(n);
    std::vector<bool> cut(n, false);  // cut[i]: simple root i removed from Levi
    int pos = 0;
    for (std::size_t k = 0; k + 1 < blocks.size(); ++k) {
        pos += blocks[k];
        cut[pos - 1] = true;
    }
    for (int i = 0; i < n - 1; ++i)
        if (!cut[i]) nm.levi.push_back(i);
    // block index of each row/column
    std::vector<int> block_of(n, 0);
    {
        int idx = 0, consumed = 0;
        for (int i = 0; i < n; ++i) {
            if (consumed == blocks[idx]) {
                ++idx;
                consumed = 0;
            }
            block_of[i] = idx;
            ++consumed;
        }
    }
    const T one = ring_ops<T>::one(exemplar);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block_of[i] < block_of[j]) {
                Matrix<T> e = Matrix<T>::zeros(n, n, exemplar);
                e(i, j) = one;
                nm.basis.push_back(std::move(e));
            }
    return nm;
}

template <typename T>
struct RichardsonSample {
    Matrix<T> element;
    std::vector<int> partition;  // Jordan type of the best sample
    int attained = 0;            // trials attaining the best partition
    bool dominant = false;       // best dominates every sampled partition
};

namespace detail {

// lexicographic comparison of partitions (sorted decreasing)
inline bool partition_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// dominance order: partial sums of a are >= partial sums of b
inline bool partition_dominates(const std::vector<int>& a, const std::vector<int>& b) {
    long sa = 0, sb = 0;
    std::size_t k = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < k; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa < sb) return false;
    }
    return true;
}

}  // namespace detail

// Among `trials` uniformly random coefficient vectors, the element whose
// rank profile (equivalently, Jordan partition in dominance order) is
// maximal; deterministic given the caller's stream. Ties resolve to the
// first occurrence.
template <typename T>
RichardsonSample<T> richardson_sample(const NilradicalModel<T>& nm, int trials, Rng& rng) {
    if (trials < 1) throw std::invalid_argument("richardson_sample: trials >= 1");
    if (nm.basis.empty())
        throw std::invalid_argument("richardson_sample: empty nilradical");
    const std::uint64_t q = ring_ops<T>::characteristic(nm.basis[0].zero());
    if (q == 0)
        throw std::invalid_argument("richardson_sample: prime-field coefficients required");

    RichardsonSample<T> best{nm.basis[0], {}, 0, true};
    bool have = false;
    for (int t = 0; t < trials; ++t) {
        Matrix<T> x = Matrix<T>::zeros(nm.ambient_dim, nm.ambient_dim, nm.basis[0].zero());
        for (const auto& b : nm.basis) {
            T c = ring_ops<T>::from_integer(Integer(rng.below(q)), b.zero());
            x = x + b.scaled(c);
        }
        std::vector<int> part = jordan_type(x);
        if (!have || detail::partition_less(best.partition, part)) {
            if (have && !detail::partition_dominates(part, best.partition)) best.dominant = false;
            best.element = x;
            best.partition = part;
            best.attained = 1;
            have = true;
        } else if (part == best.partition) {
            ++best.attained;
        } else if (!detail::partition_dominates(best.partition, part)) {
            best.dominant = false;
        }
    }
    return best;
}

// Dual of a partition: dual[j] = #{i : lambda_i > j}.
inline std::vector<int> dual_partition(std::vector<int> lambda) {
    std::sort(lambda.rbegin(), lambda.rend());
    std::vector<int> dual;
    for (int j = 0; !lambda.empty() && lambda[0] > j; ++j) {
        int cnt = 0;
        for (int part : lambda) cnt += (part > j);
        dual.push_back(cnt);
    }
    return dual;
}

// ---------------------------------------------------------------------------
// Exponential coordinates on the unipotent radical of the sp_4 Borel.
// ---------------------------------------------------------------------------

// Solves exp(X) = phi_{gamma_1}(u_1) ... phi_{gamma_k}(u_k) for the root
// coordinates u_i, peeling factors in the given root order (heights must be
// non-decreasing); the system is unitriangular and always solvable.
// coeffs[k] is the coefficient of X on the root `order[k]`, and the
// returned coordinates follow the same order.
inline std::vector<Polynomial<Rational>> exp_root_coordinates(
    const ClassicalRealization<Polynomial<Rational>>& real,
    const std::vector<Polynomial<Rational>>& coeffs, const std::vector<int>& order) {
    const auto& roots = real.rs.positive_roots();
    if (coeffs.size() != roots.size() || order.size() != roots.size())
        throw std::invalid_argument("exp_root_coordinates: coefficient count mismatch");
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
        if (roots[order[k]].height > roots[order[k + 1]].height)
            throw std::invalid_argument("exp_root_coordinates: order must be height-sorted");
    const Polynomial<Rational> zero = ring_ops<Polynomial<Rational>>::zero(coeffs[0]);
    const Polynomial<Rational> one = ring_ops<Polynomial<Rational>>::one(coeffs[0]);

    Matrix<Polynomial<Rational>> x = Matrix<Polynomial<Rational>>::zeros(real.dim, real.dim, zero);
    for (std::size_t k = 0; k < roots.size(); ++k)
        x = x + real.root_vectors[order[k]].scaled(coeffs[k]);
    Matrix<Polynomial<Rational>> u = trunc_exp(x);

    std::vector<Polynomial<Rational>> out;
    for (std::size_t k = 0; k < roots.size(); ++k) {
        const Matrix<Polynomial<Rational>>& e = real.root_vectors[order[k]];
        // readout entry: first nonzero unit of the root vector
        int ru = -1, rj = -1;
        bool negate = false;
        for (int i = 0; i < real.dim && ru < 0; ++i)
            for (int j = 0; j < real.dim; ++j) {
                const auto& c = e(i, j);
                if (c == zero) continue;
                ru = i;
                rj = j;
                negate = (c == -one);
                if (!negate && c != one)
                    throw std::logic_error("exp_root_coordinates: non-unit root vector entry");
                break;
            }
        Polynomial<Rational> coord = negate ? -u(ru, rj) : u(ru, rj);
        out.push_back(coord);
        u = trunc_exp(e.scaled(-coord)) * u;
    }
    if (!u.is_identity()) throw std::logic_error("exp_root_coordinates: peel did not terminate");
    return out;
}

inline std::vector<Polynomial<Rational>> exp_root_coordinates(
    const ClassicalRealization<Polynomial<Rational>>& real,
    const std::vector<Polynomial<Rational>>& coeffs) {
    std::vector<int> order(real.rs.positive_roots().size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    return exp_root_coordinates(real, coeffs, order);
}

// The four coordinates (u_alpha, u_beta, u_{alpha+beta}, u_{alpha+2beta})
// of exp(a e_alpha + b e_beta + c e_{alpha+beta} + d e_{highest}) in the
// rank-2 symplectic realization, as polynomials in a, b, c, d. Factors are
// ordered long simple root first: that is the order under which the last
// coordinate takes the shape d -+ bc -+ (2/3) a b^2 (with the short simple
// first it would involve ac and a^2 b instead).
inline std::vector<Polynomial<Rational>> sp4_exp_coordinates() {
    const std::vector<std::string> names = {"a", "b", "c", "d"};
    Polynomial<Rational> exemplar(4, Rational(0), names);
    auto real = build_realization<Polynomial<Rational>>(ClassicalKind::CG2, 4, exemplar);
    std::vector<Polynomial<Rational>> coeffs;
    for (int v = 0; v < 4; ++v)
        coeffs.push_back(Polynomial<Rational>::variable(v, 4, Rational(0), names));
    // roots enumerate as [alpha_1 (short), alpha_2 (long), sum, highest]
    return exp_root_coordinates(real, coeffs, {1, 0, 2, 3});
}

// ---------------------------------------------------------------------------
// Order-formula verification harness.
// ---------------------------------------------------------------------------

struct OrderCase {
    enum class Kind { GL, SP, SO } kind = Kind::GL;
    int n = 0;                // ambient matrix size
    std::vector<int> blocks;  // GL: block composition
    std::vector<int> levi;    // SP/SO: Levi subset
    std::uint64_t p = 0;

    std::string id() const {
        std::string s = kind == Kind::GL ? "gl" : (kind == Kind::SP ? "sp" : "so");
        s += std::to_string(n) + "|";
        if (kind == Kind::GL) {
            for (std::size_t i = 0; i < blocks.size(); ++i)
                s += (i ? "," : "") + std::to_string(blocks[i]);
        } else {
            s += "I=";
            for (std::size_t i = 0; i < levi.size(); ++i)
                s += (i ? "," : "") + std::to_string(levi[i] + 1);
        }
        s += "|p=" + std::to_string(p);
        return s;
    }
};

struct OrderReport {
    OrderCase c;
    int nP = 1;
    int m = 0;  // predicted exponent (0 for a trivial radical)
    bool trivial = false;
    std::vector<int> partition;  // measured Jordan type of the sample
    int measured_degree = 0;
    Integer predicted_order{1};
    Integer measured_order{1};
    bool used_artin_hasse = false;
    int trials_used = 0;
    bool inconclusive = false;
    bool pass = false;
    std::string note;
};

namespace detail {

inline std::uint64_t reference_prime(std::uint64_t p) {
    std::uint64_t q = next_prime_at_least(101);
    while (q == p) q = next_prime_at_least(q + 1);
    return q;
}

template <typename T>
NilradicalModel<T> order_case_model(const OrderCase& c, const T& exemplar) {
    switch (c.kind) {
        case OrderCase::Kind::GL:
            return gl_nilradical(c.blocks, exemplar);
        case OrderCase::Kind::SP: {
            auto real = build_realization(ClassicalKind::CG2, c.n, exemplar);
            return nilradical(real, c.levi);
        }
        case OrderCase::Kind::SO: {
            auto real = build_realization(ClassicalKind::CG3, c.n, exemplar);
            return nilradical(real, c.levi);
        }
    }
    throw std::logic_error("order_case_model");
}

}  // namespace detail

// One order-formula case: predict n(P), m and p^m combinatorially; sample a
// Richardson element over F_p (validated against a characteristic-free
// reference: the dual-partition rule for gl, a large-prime sample for
// sp/so); measure its p-nilpotence degree and the multiplicative order of
// the associated unipotent. Sampling that cannot reproduce the reference
// profile escalates the trial count and finally reports "inconclusive"
// rather than a failure of the order formula.
inline OrderReport verify_order_formula(const OrderCase& c, std::uint64_t seed, int base_trials) {
    require_prime(c.p, "verify_order_formula");
    OrderReport rep;
    rep.c = c;

    // Combinatorial side.
    const bool gl = c.kind == OrderCase::Kind::GL;
    if (gl && c.blocks.size() == 1) {
        // Full Levi: trivial unipotent radical. n(P) = 1 by convention; the
        // identity has order 1 and degree 0.
        rep.trivial = true;
        rep.nP = 1;
        rep.m = 0;
        rep.partition.assign(c.n, 1);
        rep.pass = true;
        rep.note = "trivial radical";
        return rep;
    }
    NilradicalModel<Fp> model = detail::order_case_model(c, Fp(0, c.p));
    GradedParabolic gp = grade(model.rs, model.levi);
    rep.nP = n_of_P(gp);
    rep.m = order_exponent(c.p, rep.nP);
    rep.predicted_order = ipow(c.p, static_cast<unsigned long>(rep.m));

    // Reference partition.
    Rng rng = Rng(seed).derive(c.id());
    std::vector<int> reference;
    if (gl) {
        reference = dual_partition(c.blocks);
    } else {
        const std::uint64_t q = detail::reference_prime(c.p);
        NilradicalModel<Fp> ref_model = detail::order_case_model(c, Fp(0, q));
        Rng ref_rng = rng.derive("reference");
        RichardsonSample<Fp> ref = richardson_sample(ref_model, base_trials, ref_rng);
        if (!ref.dominant) {
            rep.inconclusive = true;
            rep.note = "reference sampling unstable";
            return rep;
        }
        reference = ref.partition;
    }

    // Characteristic-p sampling with escalation.
    RichardsonSample<Fp> sample{Matrix<Fp>::zeros(c.n, c.n, Fp(0, c.p)), {}, 0, false};
    bool accepted = false;
    int trials = base_trials;
    for (int round = 0; round < 5 && !accepted; ++round) {
        Rng round_rng = rng.derive("round" + std::to_string(round));
        sample = richardson_sample(model, trials, round_rng);
        rep.trials_used += trials;
        if (sample.partition == reference)
            accepted = true;
        else
            trials *= 4;
    }
    if (!accepted) {
        rep.inconclusive = true;
        rep.note = "rank profile did not reach the reference";
        return rep;
    }
    rep.partition = sample.partition;

    // Measured side.
    const Matrix<Fp>& x = sample.element;
    rep.measured_degree = p_nilpotence_degree(x, c.p);
    const int deg = nilpotence_degree(x);
    Matrix<Fp> u = Matrix<Fp>::identity(c.n, Fp(0, c.p));
    if (deg <= static_cast<int>(c.p)) {
        u = trunc_exp(x);
    } else {
        rep.used_artin_hasse = true;
        std::vector<Fp> coords(static_cast<std::size_t>(rep.measured_degree), Fp(0, c.p));
        coords[0] = Fp(1, c.p);
        u = ex_eval(x, coords, c.p);
    }
    Matrix<Fp> power = u;
    int k = 0;
    while (!power.is_identity()) {
        power = power.pow(static_cast<unsigned long>(c.p));
        if (++k > 12) throw std::logic_error("verify_order_formula: order did not terminate");
    }
    rep.measured_order = ipow(c.p, static_cast<unsigned long>(k));

    rep.pass = (rep.measured_degree == rep.m) && (rep.measured_order == rep.predicted_order);
    if (!rep.pass) rep.note = "measured values disagree with the formula";
    return rep;
}

// The case grid for the acceptance run: every gl_n block composition for
// n <= max_rank with the given primes, plus every distinguished parabolic
// of sp_4, sp_6 and so_7 with good p in {5, 7, 11}.
inline std::vector<OrderCase> order_case_grid(int max_rank,
                                              const std::vector<std::uint64_t>& gl_primes) {
    std::vector<OrderCase> cases;
    for (int n = 1; n <= max_rank; ++n) {
        // compositions of n
        std::vector<std::vector<int>> comps;
        std::vector<int> cur;
        struct Gen {
            static void fill(int rest, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
                if (rest == 0) {
                    out.push_back(cur);
                    return;
                }
                for (int first = 1; first <= rest; ++first) {
                    cur.push_back(first);
                    fill(rest - first, cur, out);
                    cur.pop_back();
                }
            }
        };
        Gen::fill(n, cur, comps);
        for (const auto& blocks : comps)
            for (std::uint64_t p : gl_primes) {
                OrderCase c;
                c.kind = OrderCase::Kind::GL;
                c.n = n;
                c.blocks = blocks;
                c.p = p;
                cases.push_back(std::move(c));
            }
    }
    struct SpSo {
        OrderCase::Kind kind;
        int n;
        RootSystem rs;
    };
    std::vector<SpSo> groups;
    groups.push_back({OrderCase::Kind::SP, 4, RootSystem::build(Family::C, 2)});
    groups.push_back({OrderCase::Kind::SP, 6, RootSystem::build(Family::C, 3)});
    groups.push_back({OrderCase::Kind::SO, 7, RootSystem::build(Family::B, 3)});
    for (const auto& g : groups) {
        for (const auto& levi : enumerate_distinguished(g.rs)) {
            for (std::uint64_t p : {5ull, 7ull, 11ull}) {
                if (!g.rs.is_good_prime(p)) continue;
                OrderCase c;
                c.kind = g.kind;
                c.n = g.n;
                c.levi = levi;
                c.p = p;
                cases.push_back(std::move(c));
            }
        }
    }
    return cases;
}

}  // namespace unip
