#include <catch2/catch.hpp>

#include <set>

#include "unip/parabolic.hpp"

using namespace unip;

namespace {

std::vector<RootSystem> survey_systems() {
    std::vector<RootSystem> out;
    for (int r = 1; r <= 6; ++r) out.push_back(RootSystem::build(Family::A, r));
    for (int r = 2; r <= 5; ++r) out.push_back(RootSystem::build(Family::B, r));
    for (int r = 2; r <= 5; ++r) out.push_back(RootSystem::build(Family::C, r));
    for (int r = 4; r <= 6; ++r) out.push_back(RootSystem::build(Family::D, r));
    out.push_back(RootSystem::build(Family::E, 6));
    out.push_back(RootSystem::build(Family::F, 4));
    out.push_back(RootSystem::build(Family::G, 2));
    return out;
}

std::set<std::vector<int>> as_set(const std::vector<std::vector<int>>& v) {
    return std::set<std::vector<int>>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("gradings of small parabolics") {
    RootSystem a2 = parse_root_system("A2");
    GradedParabolic borel = grade(a2, {});
    CHECK(borel.dim(0) == 2);
    CHECK(borel.dim(2) == 2);
    CHECK(borel.dim(4) == 1);
    CHECK(borel.dim(-2) == 2);
    CHECK(borel.dim(-4) == 1);
    CHECK(borel.dim(6) == 0);

    RootSystem g2 = parse_root_system("G2");
    GradedParabolic p_short = grade(g2, {0});  // alpha_1 is the short simple root
    CHECK(p_short.dim(0) == 4);
    CHECK(p_short.dim(2) == 4);
    CHECK(p_short.dim(4) == 1);

    GradedParabolic full = grade(g2, {0, 1});
    CHECK(full.dim(0) == 14);  // all of g in degree 0
    CHECK(full.dim(2) == 0);

    // sum over degrees = |R| + rank
    for (const auto& rs : survey_systems()) {
        GradedParabolic gp = grade(rs, {0});
        int total = 0;
        for (const auto& [deg, dim] : gp.graded_dims()) {
            total += dim;
            CHECK(deg % 2 == 0);
            CHECK(gp.dim(deg) == gp.dim(-deg));
        }
        CHECK(total == static_cast<int>(2 * rs.positive_roots().size()) + rs.rank());
    }
}

TEST_CASE("n(P) values") {
    RootSystem g2 = parse_root_system("G2");
    CHECK(n_of_P(grade(g2, {})) == 6);
    CHECK(n_of_P(grade(g2, {0})) == 3);  // the formula value; see discrepancy regression
    CHECK(n_of_P(grade(g2, {1})) == 4);
    CHECK(n_of_P(grade(g2, {0, 1})) == 1);  // trivial radical convention

    RootSystem a3 = parse_root_system("A3");
    CHECK(n_of_P(grade(a3, {})) == 4);

    // Borel case: n(B) = h for every family
    for (const auto& rs : survey_systems())
        CHECK(n_of_P(grade(rs, {})) == rs.coxeter_number());
}

TEST_CASE("distinguished parabolics") {
    RootSystem g2 = parse_root_system("G2");
    CHECK(is_distinguished(grade(g2, {0})));
    CHECK(!is_distinguished(grade(g2, {1})));
    CHECK(is_distinguished(grade(g2, {})));

    CHECK(as_set(enumerate_distinguished(g2)) ==
          std::set<std::vector<int>>{{}, {0}});
    CHECK(as_set(enumerate_distinguished(parse_root_system("A2"))) ==
          std::set<std::vector<int>>{{}});
    CHECK(as_set(enumerate_distinguished(parse_root_system("A1"))) ==
          std::set<std::vector<int>>{{}});
    CHECK(as_set(enumerate_distinguished(parse_root_system("C3"))) ==
          std::set<std::vector<int>>{{}, {1}});
    CHECK(as_set(enumerate_distinguished(parse_root_system("B3"))) ==
          std::set<std::vector<int>>{{}});

    // the Borel is distinguished for every family
    for (const auto& rs : survey_systems()) CHECK(is_distinguished(grade(rs, {})));
}

namespace {

// Oracle: number of partitions of n into distinct parts of the given parity
// (1 = odd, 0 = even). Distinguished nilpotent classes of the classical
// groups are classified by such partitions, and by the parameterization via
// distinguished parabolics the two counts must agree.
int distinct_parity_partitions(int n, int parity) {
    std::vector<std::vector<int>> memo;  // not needed at this size; plain recursion
    struct R {
        static int count(int remaining, int next, int parity) {
            if (remaining == 0) return 1;
            int total = 0;
            for (int part = next; part <= remaining; ++part)
                if (part % 2 == parity) total += count(remaining - part, part + 1, parity);
            return total;
        }
    };
    return R::count(n, 1, parity);
}

}  // namespace

TEST_CASE("distinguished parabolic counts match the classical classification") {
    // type A: only the regular class
    for (int r = 1; r <= 7; ++r)
        CHECK(enumerate_distinguished(RootSystem::build(Family::A, r)).size() == 1);
    // so_{2r+1}: partitions of 2r+1 into distinct odd parts
    for (int r = 2; r <= 6; ++r)
        CHECK(static_cast<int>(enumerate_distinguished(RootSystem::build(Family::B, r)).size()) ==
              distinct_parity_partitions(2 * r + 1, 1));
    // sp_{2r}: partitions of 2r into distinct even parts
    for (int r = 2; r <= 6; ++r)
        CHECK(static_cast<int>(enumerate_distinguished(RootSystem::build(Family::C, r)).size()) ==
              distinct_parity_partitions(2 * r, 0));
    // so_{2r}: partitions of 2r into distinct odd parts
    for (int r = 4; r <= 7; ++r)
        CHECK(static_cast<int>(enumerate_distinguished(RootSystem::build(Family::D, r)).size()) ==
              distinct_parity_partitions(2 * r, 1));
    // exceptional counts from the classification tables
    CHECK(enumerate_distinguished(parse_root_system("E6")).size() == 3);
    CHECK(enumerate_distinguished(parse_root_system("E7")).size() == 6);
    CHECK(enumerate_distinguished(parse_root_system("E8")).size() == 11);
    CHECK(enumerate_distinguished(parse_root_system("F4")).size() == 4);
    CHECK(enumerate_distinguished(parse_root_system("G2")).size() == 2);
}

TEST_CASE("distinguished sets respect diagram automorphisms") {
    auto permuted = [](const std::vector<std::vector<int>>& sets, const std::vector<int>& sigma) {
        std::set<std::vector<int>> out;
        for (const auto& s : sets) {
            std::vector<int> t;
            for (int i : s) t.push_back(sigma[i]);
            std::sort(t.begin(), t.end());
            out.insert(t);
        }
        return out;
    };

    for (int r = 2; r <= 6; ++r) {
        RootSystem a = RootSystem::build(Family::A, r);
        std::vector<int> rev(r);
        for (int i = 0; i < r; ++i) rev[i] = r - 1 - i;
        auto d = enumerate_distinguished(a);
        CHECK(permuted(d, rev) == as_set(d));
    }
    for (int r = 4; r <= 6; ++r) {
        RootSystem dsys = RootSystem::build(Family::D, r);
        std::vector<int> swp(r);
        for (int i = 0; i < r; ++i) swp[i] = i;
        std::swap(swp[r - 2], swp[r - 1]);
        auto d = enumerate_distinguished(dsys);
        CHECK(permuted(d, swp) == as_set(d));
    }
    {
        RootSystem e6 = parse_root_system("E6");
        std::vector<int> sigma = {5, 1, 4, 3, 2, 0};  // 1<->6, 3<->5 in Bourbaki labels
        auto d = enumerate_distinguished(e6);
        CHECK(permuted(d, sigma) == as_set(d));
    }
}

TEST_CASE("order exponents") {
    CHECK(order_exponent(5, 6) == 2);
    CHECK(order_exponent(7, 6) == 1);
    CHECK(order_exponent(2, 1) == 1);
    CHECK(order_exponent(2, 9) == 4);
    CHECK(order_exponent(3, 27) == 3);
    CHECK_THROWS_AS(order_exponent(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(order_exponent(5, 0), std::invalid_argument);

    // p >= nP forces m = 1; in particular p >= h gives m = 1 for every parabolic
    for (const auto& rs : survey_systems()) {
        std::uint64_t p = next_prime_at_least(rs.coxeter_number());
        for (unsigned long mask = 0; mask < (1ul << rs.rank()); ++mask) {
            std::vector<int> levi;
            for (int i = 0; i < rs.rank(); ++i)
                if (mask & (1ul << i)) levi.push_back(i);
            CHECK(order_exponent(p, n_of_P(grade(rs, levi))) == 1);
        }
    }
}

TEST_CASE("lower central series class") {
    RootSystem g2 = parse_root_system("G2");
    CHECK(lcs_class(grade(g2, {})) == 5);
    CHECK(lcs_class(grade(g2, {0})) == 2);
    CHECK(lcs_class(grade(parse_root_system("A3"), {})) == 3);

    // lcs_class = n(P) - 1 for every parabolic of every surveyed family
    for (const auto& rs : survey_systems()) {
        for (unsigned long mask = 0; mask + 1 < (1ul << rs.rank()); ++mask) {
            std::vector<int> levi;
            for (int i = 0; i < rs.rank(); ++i)
                if (mask & (1ul << i)) levi.push_back(i);
            GradedParabolic gp = grade(rs, levi);
            CHECK(lcs_class(gp) == n_of_P(gp) - 1);
        }
    }
}

TEST_CASE("exponential type thresholds") {
    CHECK(exponential_type_threshold(parse_root_system("G2")).p0 == 7);
    CHECK(exponential_type_threshold(parse_root_system("F4")).p0 == 17);
    CHECK(exponential_type_threshold(parse_root_system("E6")).p0 == 17);
    CHECK(exponential_type_threshold(parse_root_system("E7")).p0 == 29);
    CHECK(exponential_type_threshold(parse_root_system("E8")).p0 == 59);

    auto a5 = exponential_type_threshold(parse_root_system("A5"));
    CHECK(!a5.exceptional);
    CHECK(a5.classical_condition == "r != -1 (mod p)");
    CHECK(a5.generic_bound == 10);

    auto c4 = exponential_type_threshold(parse_root_system("C4"));
    CHECK(c4.classical_condition == "p != 2");
    CHECK(c4.generic_bound == 14);

    auto e8 = exponential_type_threshold(parse_root_system("E8"));
    CHECK(e8.generic_bound == 58);
}

TEST_CASE("minimal module pairings reproduce the exceptional table") {
    CHECK(n_of_minimal_module(parse_root_system("G2")) == 6);
    CHECK(n_of_minimal_module(parse_root_system("F4")) == 16);
    CHECK(n_of_minimal_module(parse_root_system("E6")) == 16);
    CHECK(n_of_minimal_module(parse_root_system("E7")) == 27);
    CHECK(n_of_minimal_module(parse_root_system("E8")) == 58);
}

TEST_CASE("parabolics of product systems") {
    RootSystem prod = RootSystem::product(parse_root_system("A1"), parse_root_system("G2"));
    CHECK(n_of_P(grade(prod, {0})) == 6);       // A1 part trivialized, G2 Borel remains
    CHECK(n_of_P(grade(prod, {1, 2})) == 2);    // G2 part trivialized
    CHECK(n_of_P(grade(prod, {0, 1, 2})) == 1); // everything trivial
    CHECK(lcs_class(grade(prod, {0})) == 5);
}
