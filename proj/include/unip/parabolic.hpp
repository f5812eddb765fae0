#pragma once

// Parabolic gradings and the order-formula combinatorics: the even grading f
// attached to a Levi subset I (f = 0 on I, 2 off I, extended linearly),
// graded dimensions, n(P) = f(highest long root)/2 + 1 per indecomposable
// component, the distinguished-parabolic dimension test, lower-central-series
// class, order exponents, and the exponential-type prime thresholds.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "unip/rational.hpp"
#include "unip/rootsys.hpp"

namespace unip {

class GradedParabolic {
  public:
    GradedParabolic(const RootSystem& rs, std::vector<int> levi)
        : rs_(&rs), levi_(std::move(levi)) {
        std::sort(levi_.begin(), levi_.end());
        levi_.erase(std::unique(levi_.begin(), levi_.end()), levi_.end());
        for (int i : levi_)
            if (i < 0 || i >= rs.rank()) throw std::invalid_argument("GradedParabolic: bad Levi index");
        in_levi_.assign(rs.rank(), false);
        for (int i : levi_) in_levi_[i] = true;

        graded_dims_[0] = rs.rank();
        for (const Root& r : rs.positive_roots()) {
            int f = f_of(r);
            graded_dims_[f] += 1;
            graded_dims_[-f] += 1;
        }
    }

    const RootSystem& root_system() const { return *rs_; }
    const std::vector<int>& levi() const { return levi_; }
    bool levi_contains(int i) const { return in_levi_[i]; }

    // f(beta) = 2 * (sum of the coefficients of beta on simple roots off I).
    int f_of(const Root& r) const {
        int s = 0;
        for (int i = 0; i < rs_->rank(); ++i)
            if (!in_levi_[i]) s += r.coeffs[i];
        return 2 * s;
    }

    // degree -> dim g(degree); includes the rank in degree 0 and both signs.
    const std::map<int, int>& graded_dims() const { return graded_dims_; }

    int dim(int degree) const {
        auto it = graded_dims_.find(degree);
        return it == graded_dims_.end() ? 0 : it->second;
    }

    std::string levi_string() const {
        std::string s;
        for (std::size_t k = 0; k < levi_.size(); ++k) {
            if (k) s += ",";
            s += std::to_string(levi_[k] + 1);  // 1-based Bourbaki labels
        }
        return s.empty() ? "-" : s;
    }

  private:
    const RootSystem* rs_;
    std::vector<int> levi_;
    std::vector<bool> in_levi_;
    std::map<int, int> graded_dims_;
};

inline GradedParabolic grade(const RootSystem& rs, const std::vector<int>& levi) {
    return GradedParabolic(rs, levi);
}

// n(P) = f(highest long root)/2 + 1 per indecomposable component, supremum
// over components; 1 by convention when I = S (trivial unipotent radical).
inline int n_of_P(const GradedParabolic& gp) {
    const RootSystem& rs = gp.root_system();
    int best = 1;
    for (std::size_t c = 0; c < rs.components().size(); ++c) {
        int v = gp.f_of(rs.highest_long_root(static_cast<int>(c))) / 2 + 1;
        best = std::max(best, v);
    }
    return best;
}

// Least e with {alpha : f(alpha) >= 2(e+1)} empty, i.e. f(highest long
// root)/2 per component. Equals n_of_P - 1 throughout.
inline int lcs_class(const GradedParabolic& gp) {
    const RootSystem& rs = gp.root_system();
    int best = 0;
    for (std::size_t c = 0; c < rs.components().size(); ++c)
        best = std::max(best, gp.f_of(rs.highest_long_root(static_cast<int>(c))) / 2);
    return best;
}

// dim g(0) - dim Z(G) = dim g(2), with dim Z(G) = 0 per semisimple component.
inline bool is_distinguished(const GradedParabolic& gp) {
    return gp.dim(0) == gp.dim(2);
}

// All I with the distinguished property, by subset scan; canonical order.
inline std::vector<std::vector<int>> enumerate_distinguished(const RootSystem& rs) {
    const int r = rs.rank();
    if (r > 16) throw std::invalid_argument("enumerate_distinguished: rank too large for subset scan");
    std::vector<std::vector<int>> out;
    for (unsigned long mask = 0; mask < (1ul << r); ++mask) {
        std::vector<int> levi;
        for (int i = 0; i < r; ++i)
            if (mask & (1ul << i)) levi.push_back(i);
        if (is_distinguished(grade(rs, levi))) out.push_back(std::move(levi));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
}

// Minimal m >= 1 with p^m >= nP.
inline int order_exponent(std::uint64_t p, int nP) {
    require_prime(p, "order_exponent");
    if (nP < 1) throw std::invalid_argument("order_exponent: nP >= 1 required");
    int m = 1;
    Integer pm(static_cast<unsigned long>(p));
    while (pm < nP) {
        pm *= static_cast<unsigned long>(p);
        ++m;
    }
    return m;
}

// Fundamental-weight label (1-based, Bourbaki) of the minimal-dimensional
// nontrivial module of each exceptional type.
inline int minimal_module_weight_index(Family f, int rank) {
    switch (f) {
        case Family::G: return 1;
        case Family::F: return 4;
        case Family::E:
            if (rank == 6) return 1;
            if (rank == 7) return 7;
            return 8;
        default:
            throw std::invalid_argument("minimal_module_weight_index: exceptional types only");
    }
}

inline long n_of_minimal_module(const RootSystem& rs) {
    if (!rs.is_indecomposable())
        throw std::invalid_argument("n_of_minimal_module: indecomposable system required");
    const auto& comp = rs.components()[0];
    std::vector<long> lambda(rs.rank(), 0);
    lambda[minimal_module_weight_index(comp.family, comp.rank) - 1] = 1;
    return rs.weight_phi_pairing(lambda);
}

struct ExponentialTypeThreshold {
    bool exceptional = false;
    std::uint64_t p0 = 0;              // exceptional types: p >= p0 suffices
    std::string classical_condition;   // classical types: condition on p
    int generic_bound = 0;             // p > 2h-2 always suffices
};

// For exceptional types, the sharpest prime threshold derived from the
// minimal module: the first good prime exceeding n(V_min) that also misses
// the fundamental group order. For classical types, the defining-condition
// object plus the generic bound.
inline ExponentialTypeThreshold exponential_type_threshold(const RootSystem& rs) {
    if (!rs.is_indecomposable())
        throw std::invalid_argument("exponential_type_threshold: quasisimple required");
    const auto& comp = rs.components()[0];
    ExponentialTypeThreshold t;
    t.generic_bound = 2 * rs.coxeter_number() - 2;
    switch (comp.family) {
        case Family::A:
            t.classical_condition = "r != -1 (mod p)";
            return t;
        case Family::B:
        case Family::C:
        case Family::D:
            t.classical_condition = "p != 2";
            return t;
        default:
            break;
    }
    t.exceptional = true;
    const Integer fund = rs.fundamental_group_order();
    std::uint64_t p = next_prime_at_least(static_cast<std::uint64_t>(n_of_minimal_module(rs)) + 1);
    while (!rs.is_good_prime(p) || fund % static_cast<unsigned long>(p) == 0)
        p = next_prime_at_least(p + 1);
    t.p0 = p;
    return t;
}

}  // namespace unip
