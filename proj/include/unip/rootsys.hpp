#pragma once

// Indecomposable root systems A_r..G_2 (and explicit products of these),
// built from the Cartan matrix alone. Roots are stored as integer
// coefficient vectors over the simple roots, with Bourbaki numbering of the
// Dynkin diagram; no Euclidean embedding is used. Positive roots are
// enumerated by the usual closure algorithm: a root of height h+1 is
// beta + alpha_i where the alpha_i-string through beta, read off from roots
// of smaller height, does not yet end.
//
// Convention: cartan[i][j] = <alpha_j, alpha_i^vee>.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/rational.hpp"

namespace unip {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
        case Family::E: return 'E';
        case Family::F: return 'F';
        case Family::G: return 'G';
    }
    throw std::logic_error("family_letter");
}

struct Root {
    std::vector<int> coeffs;   // over simple roots (full rank of the system)
    int height = 0;
    int component = 0;
    Integer norm2;             // scaled squared length
    std::vector<int> coroot;   // coefficients over simple coroots
    bool is_long = false;      // maximal length within its component
    bool is_short = false;     // minimal length within its component
};

class RootSystem {
  public:
    struct Component {
        Family family;
        int rank;
        int offset;  // first simple-root index of this component
    };

    static RootSystem build(Family family, int rank) {
        RootSystem rs;
        rs.cartan_ = cartan_matrix(family, rank);
        rs.rank_ = rank;
        rs.components_.push_back({family, rank, 0});
        rs.finish();
        return rs;
    }

    static RootSystem product(const RootSystem& a, const RootSystem& b) {
        RootSystem rs;
        rs.rank_ = a.rank_ + b.rank_;
        rs.cartan_.assign(rs.rank_, std::vector<long>(rs.rank_, 0));
        for (int i = 0; i < a.rank_; ++i)
            for (int j = 0; j < a.rank_; ++j) rs.cartan_[i][j] = a.cartan_[i][j];
        for (int i = 0; i < b.rank_; ++i)
            for (int j = 0; j < b.rank_; ++j) rs.cartan_[a.rank_ + i][a.rank_ + j] = b.cartan_[i][j];
        for (const auto& c : a.components_) rs.components_.push_back(c);
        for (const auto& c : b.components_)
            rs.components_.push_back({c.family, c.rank, c.offset + a.rank_});
        rs.finish();
        return rs;
    }

    int rank() const { return rank_; }
    const std::vector<Component>& components() const { return components_; }
    bool is_indecomposable() const { return components_.size() == 1; }
    const std::vector<std::vector<long>>& cartan() const { return cartan_; }
    const std::vector<Root>& positive_roots() const { return positive_; }

    std::string name() const {
        std::string s;
        for (std::size_t k = 0; k < components_.size(); ++k) {
            if (k) s += "x";
            s += family_letter(components_[k].family) + std::to_string(components_[k].rank);
        }
        return s;
    }

    bool is_root(const std::vector<int>& coeffs) const {
        return index_.count(coeffs) > 0 ||
               index_.count(negated(coeffs)) > 0;
    }

    bool is_positive_root(const std::vector<int>& coeffs) const { return index_.count(coeffs) > 0; }

    const Root& root(const std::vector<int>& coeffs) const {
        auto it = index_.find(coeffs);
        if (it == index_.end()) throw std::invalid_argument("RootSystem: not a positive root");
        return positive_[it->second];
    }

    // <beta, alpha_i^vee> for beta given by simple-root coefficients.
    long simple_coroot_pairing(const std::vector<int>& beta, int i) const {
        long s = 0;
        for (int j = 0; j < rank_; ++j) s += cartan_[i][j] * beta[j];
        return s;
    }

    // <beta, alpha_i^vee> for each i; the weight of beta in fundamental-weight
    // coordinates.
    std::vector<long> root_to_weight(const Root& r) const {
        std::vector<long> w(rank_);
        for (int i = 0; i < rank_; ++i) w[i] = simple_coroot_pairing(r.coeffs, i);
        return w;
    }

    const Root& highest_long_root(int component) const {
        return select_extreme(component, /*want_long=*/true);
    }
    const Root& highest_short_root(int component) const {
        return select_extreme(component, /*want_long=*/false);
    }
    const Root& highest_long_root() const {
        require_indecomposable("highest_long_root");
        return highest_long_root(0);
    }
    const Root& highest_short_root() const {
        require_indecomposable("highest_short_root");
        return highest_short_root(0);
    }

    int coxeter_number() const {
        require_indecomposable("coxeter_number");
        return highest_long_root(0).height + 1;
    }

    // Good primes computed two independent ways, which must agree:
    // the type-dependent bad-prime list, and coprimality of p to every
    // coefficient of the highest short root's coroot.
    bool is_good_prime(std::uint64_t p) const {
        require_prime(p, "is_good_prime");
        bool good = true;
        for (std::size_t c = 0; c < components_.size(); ++c) {
            bool by_list = good_by_list(components_[c].family, components_[c].rank, p);
            bool by_coroot = true;
            const Root& beta = highest_short_root(static_cast<int>(c));
            for (int j = components_[c].offset; j < components_[c].offset + components_[c].rank; ++j)
                if (beta.coroot[j] % static_cast<long>(p) == 0) by_coroot = false;
            if (by_list != by_coroot)
                throw std::logic_error("is_good_prime: list and coroot computations disagree");
            good = good && by_list;
        }
        return good;
    }

    Integer fundamental_group_order() const {
        require_indecomposable("fundamental_group_order");
        return integer_determinant(cartan_);
    }

    // <lambda, sum of all positive coroots> for a dominant weight lambda
    // given by non-negative coefficients over the fundamental weights.
    long weight_phi_pairing(const std::vector<long>& lambda) const {
        if (static_cast<int>(lambda.size()) != rank_)
            throw std::invalid_argument("weight_phi_pairing: wrong arity");
        for (long v : lambda)
            if (v < 0) throw std::invalid_argument("weight_phi_pairing: weight not dominant");
        std::vector<long> phi(rank_, 0);
        for (const Root& r : positive_)
            for (int i = 0; i < rank_; ++i) phi[i] += r.coroot[i];
        long acc = 0;
        for (int i = 0; i < rank_; ++i) acc += lambda[i] * phi[i];
        return acc;
    }

  private:
    static std::vector<int> negated(std::vector<int> v) {
        for (int& x : v) x = -x;
        return v;
    }

    void require_indecomposable(const char* where) const {
        if (!is_indecomposable())
            throw std::invalid_argument(std::string(where) + ": indecomposable system required");
    }

    const Root& select_extreme(int component, bool want_long) const {
        const Root* best = nullptr;
        for (const Root& r : positive_) {
            if (r.component != component) continue;
            if (want_long ? !r.is_long : !r.is_short) continue;
            if (!best || r.height > best->height) best = &r;
        }
        if (!best) throw std::logic_error("RootSystem: no root of requested length class");
        return *best;
    }

    static bool good_by_list(Family f, int rank, std::uint64_t p) {
        switch (f) {
            case Family::A: return true;
            case Family::B:
            case Family::C:
            case Family::D: return p != 2;
            case Family::G:
            case Family::F: return p != 2 && p != 3;
            case Family::E: return p != 2 && p != 3 && (rank != 8 || p != 5);
        }
        return true;
    }

    static std::vector<std::vector<long>> cartan_matrix(Family family, int rank) {
        auto chain = [](int r) {
            std::vector<std::vector<long>> c(r, std::vector<long>(r, 0));
            for (int i = 0; i < r; ++i) c[i][i] = 2;
            for (int i = 0; i + 1 < r; ++i) c[i][i + 1] = c[i + 1][i] = -1;
            return c;
        };
        auto bad = [&] {
            return std::invalid_argument("build_root_system: invalid (family, rank) pair");
        };
        const int max_rank = 16;
        if (rank < 1 || rank > max_rank) throw bad();
        switch (family) {
            case Family::A:
                return chain(rank);
            case Family::B: {
                if (rank < 2) throw bad();
                auto c = chain(rank);
                c[rank - 2][rank - 1] = -1;  // <alpha_r(short), alpha_{r-1}(long)^vee>
                c[rank - 1][rank - 2] = -2;
                return c;
            }
            case Family::C: {
                if (rank < 2) throw bad();
                auto c = chain(rank);
                c[rank - 2][rank - 1] = -2;  // <alpha_r(long), alpha_{r-1}(short)^vee>
                c[rank - 1][rank - 2] = -1;
                return c;
            }
            case Family::D: {
                if (rank < 4) throw bad();  // D_3 = A_3, D_2 = A_1 x A_1: use those labels
                auto c = chain(rank);
                // Fork: both alpha_{r-1} and alpha_r attach to alpha_{r-2}.
                c[rank - 2][rank - 1] = c[rank - 1][rank - 2] = 0;
                c[rank - 3][rank - 1] = c[rank - 1][rank - 3] = -1;
                return c;
            }
            case Family::E: {
                if (rank < 6 || rank > 8) throw bad();
                // Bourbaki: chain 1-3-4-5-6(-7-8), node 2 attached to node 4.
                std::vector<std::vector<long>> c(rank, std::vector<long>(rank, 0));
                for (int i = 0; i < rank; ++i) c[i][i] = 2;
                auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
                link(0, 2);
                link(2, 3);
                link(3, 4);
                link(4, 5);
                if (rank >= 7) link(5, 6);
                if (rank == 8) link(6, 7);
                link(1, 3);
                return c;
            }
            case Family::F: {
                if (rank != 4) throw bad();
                auto c = chain(4);
                c[1][2] = -1;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
                c[2][1] = -2;
                return c;
            }
            case Family::G: {
                if (rank != 2) throw bad();
                // alpha_1 short, alpha_2 long.
                return {{2, -3}, {-1, 2}};
            }
        }
        throw bad();
    }

    static Integer integer_determinant(const std::vector<std::vector<long>>& m) {
        // Fraction-free Bareiss elimination.
        const int n = static_cast<int>(m.size());
        std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        Integer prev(1);
        int sign = 1;
        for (int k = 0; k < n - 1; ++k) {
            if (a[k][k] == 0) {
                int swap_row = -1;
                for (int i = k + 1; i < n; ++i)
                    if (a[i][k] != 0) {
                        swap_row = i;
                        break;
                    }
                if (swap_row < 0) return 0;
                std::swap(a[k], a[swap_row]);
                sign = -sign;
            }
            for (int i = k + 1; i < n; ++i)
                for (int j = k + 1; j < n; ++j)
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            prev = a[k][k];
        }
        return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
    }

    // Symmetrizers d_i with d_i * cartan[i][j] = d_j * cartan[j][i], scaled to
    // smallest positive integers; d_i is proportional to (alpha_i, alpha_i)/2.
    std::vector<Integer> symmetrizers() const {
        std::vector<Rational> d(rank_, Rational(0));
        for (const auto& comp : components_) {
            // BFS over the component's Dynkin graph.
            std::vector<int> todo = {comp.offset};
            d[comp.offset] = 1;
            while (!todo.empty()) {
                int i = todo.back();
                todo.pop_back();
                for (int j = comp.offset; j < comp.offset + comp.rank; ++j) {
                    if (j == i || cartan_[i][j] == 0 || d[j] != 0) continue;
                    // d_j = d_i * a_ij / a_ji
                    d[j] = d[i] * make_rational(cartan_[i][j], cartan_[j][i]);
                    todo.push_back(j);
                }
            }
        }
        Integer lcm_den(1);
        for (const auto& q : d)
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<Integer> di(rank_);
        for (int i = 0; i < rank_; ++i) {
            Rational scaled = d[i] * Rational(lcm_den);
            if (!is_integral(scaled)) throw std::logic_error("symmetrizers: scaling failed");
            di[i] = scaled.get_num();
        }
        Integer g(0);
        for (const auto& x : di) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        for (auto& x : di) x /= g;
        return di;
    }

    void finish() {
        enumerate_positive_roots();
        decorate_roots();
    }

    void enumerate_positive_roots() {
        positive_.clear();
        index_.clear();
        std::vector<std::vector<int>> current;  // roots at current height
        for (int i = 0; i < rank_; ++i) {
            std::vector<int> v(rank_, 0);
            v[i] = 1;
            push_root(v, 1);
            current.push_back(v);
        }
        int height = 1;
        while (!current.empty()) {
            std::vector<std::vector<int>> next;
            for (const auto& beta : current) {
                for (int i = 0; i < rank_; ++i) {
                    std::vector<int> candidate = beta;
                    candidate[i] += 1;
                    if (index_.count(candidate)) continue;
                    if (height == 1 && beta[i] == 1) continue;  // beta == alpha_i
                    // p = how far the alpha_i-string goes down from beta
                    long down = 0;
                    std::vector<int> probe = beta;
                    while (true) {
                        probe[i] -= 1;
                        if (!index_.count(probe)) break;
                        ++down;
                    }
                    if (down - simple_coroot_pairing(beta, i) >= 1) {
                        push_root(candidate, height + 1);
                        next.push_back(candidate);
                    }
                }
            }
            current = std::move(next);
            ++height;
        }
    }

    void push_root(const std::vector<int>& coeffs, int height) {
        Root r;
        r.coeffs = coeffs;
        r.height = height;
        index_[coeffs] = positive_.size();
        positive_.push_back(std::move(r));
    }

    void decorate_roots() {
        const std::vector<Integer> d = symmetrizers();
        for (Root& r : positive_) {
            for (std::size_t c = 0; c < components_.size(); ++c) {
                const auto& comp = components_[c];
                for (int j = comp.offset; j < comp.offset + comp.rank; ++j)
                    if (r.coeffs[j] != 0) r.component = static_cast<int>(c);
            }
            // (beta, beta) = sum_{i,j} c_i c_j d_i a_ij  (scaled)
            Integer norm2(0);
            for (int i = 0; i < rank_; ++i) {
                if (r.coeffs[i] == 0) continue;
                for (int j = 0; j < rank_; ++j) {
                    if (r.coeffs[j] == 0) continue;
                    norm2 += Integer(r.coeffs[i]) * Integer(r.coeffs[j]) * d[i] * Integer(cartan_[i][j]);
                }
            }
            r.norm2 = norm2;
            // coroot coefficients: e_i = c_i d_i / d_beta with d_beta = (beta,beta)/2
            Integer d_beta = norm2 / 2;
            if (norm2 % 2 != 0) throw std::logic_error("RootSystem: odd scaled norm");
            r.coroot.resize(rank_);
            for (int i = 0; i < rank_; ++i) {
                Integer num = Integer(r.coeffs[i]) * d[i];
                if (num % d_beta != 0) throw std::logic_error("RootSystem: non-integral coroot");
                r.coroot[i] = static_cast<int>(Integer(num / d_beta).get_si());
            }
        }
        // Length classes per component.
        for (std::size_t c = 0; c < components_.size(); ++c) {
            Integer maxn(0), minn(0);
            bool first = true;
            for (const Root& r : positive_) {
                if (r.component != static_cast<int>(c)) continue;
                if (first || r.norm2 > maxn) maxn = r.norm2;
                if (first || r.norm2 < minn) minn = r.norm2;
                first = false;
            }
            for (Root& r : positive_) {
                if (r.component != static_cast<int>(c)) continue;
                r.is_long = (r.norm2 == maxn);
                r.is_short = (r.norm2 == minn);
            }
        }
    }

    int rank_ = 0;
    std::vector<Component> components_;
    std::vector<std::vector<long>> cartan_;
    std::vector<Root> positive_;
    std::map<std::vector<int>, std::size_t> index_;
};

inline RootSystem build_root_system(Family family, int rank) { return RootSystem::build(family, rank); }

// Parse names like "G2", "A5", "E8".
inline RootSystem parse_root_system(const std::string& name) {
    if (name.size() < 2) throw std::invalid_argument("parse_root_system: bad name " + name);
    Family f;
    switch (name[0]) {
        case 'A': f = Family::A; break;
        case 'B': f = Family::B; break;
        case 'C': f = Family::C; break;
        case 'D': f = Family::D; break;
        case 'E': f = Family::E; break;
        case 'F': f = Family::F; break;
        case 'G': f = Family::G; break;
        default: throw std::invalid_argument("parse_root_system: bad family in " + name);
    }
    int rank = 0;
    for (std::size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9')
            throw std::invalid_argument("parse_root_system: bad rank in " + name);
        rank = rank * 10 + (name[i] - '0');
    }
    return build_root_system(f, rank);
}

}  // namespace unip
