#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <vector>

#include "mvh/hurwitz.hpp"

using namespace mvh;

namespace {

using Perm = std::vector<int>;

Partition cycle_type(const Perm& s) {
    int d = static_cast<int>(s.size());
    std::vector<bool> seen(d, false);
    std::vector<int> lens;
    for (int x = 0; x < d; ++x) {
        if (seen[x]) continue;
        int len = 0, y = x;
        while (!seen[y]) {
            seen[y] = true;
            y = s[y];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return Partition(std::move(lens));
}

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

// counts tuples (s, t_1, ..., t_r) with s of cycle type eta, the t_i
// transpositions, and t_r ... t_1 s = id; the connected flavor also demands
// that the group they generate moves every point into one orbit
long long tuple_count(const Partition& eta, int r, bool connected) {
    int d = eta.size();
    std::vector<std::pair<int, int>> trans;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) trans.emplace_back(a, b);

    Perm base(d);
    std::iota(base.begin(), base.end(), 0);
    long long count = 0;
    if (r > 0 && trans.empty()) return 0;

    Perm s = base;
    do {
        if (!(cycle_type(s) == eta)) continue;
        std::vector<int> pick(r, 0);
        while (true) {
            Perm prod = s;
            for (int i = 0; i < r; ++i) {
                auto [a, b] = trans[pick[i]];
                std::swap(prod[a], prod[b]);  // left-compose the transposition
            }
            if (prod == base) {
                bool good = true;
                if (connected && d > 1) {
                    DSU dsu(d);
                    for (int x = 0; x < d; ++x) dsu.unite(x, s[x]);
                    for (int i = 0; i < r; ++i)
                        dsu.unite(trans[pick[i]].first, trans[pick[i]].second);
                    int root = dsu.find(0);
                    for (int x = 1; x < d && good; ++x) good = dsu.find(x) == root;
                }
                if (good) ++count;
            }
            int i = 0;
            while (i < r && ++pick[i] == static_cast<int>(trans.size())) pick[i++] = 0;
            if (i == r) break;
        }
    } while (std::next_permutation(s.begin(), s.end()));
    return count;
}

Rat lambda_coeff(const XLaurent& f, int r) { return x_to_lambda(f, r).c[r]; }

}  // namespace

TEST_CASE("unbranched covers by Burnside") {
    // genus 0, no marked points: only the trivial cover, weight 1/d!
    // genus 1: one cover class per partition of d
    long long pd[] = {1, 1, 2, 3, 5, 7, 11};
    for (int d = 1; d <= 6; ++d) {
        CHECK(burnside_bullet({0, d, {}}) == rat(1) / Rat(factorial_z(d)));
        CHECK(burnside_bullet({1, d, {}}) == rat(pd[d]));
    }
}

TEST_CASE("u_poly at lambda = 0 is the one-point Burnside count") {
    for (int h = 0; h <= 2; ++h)
        for (int d = 1; d <= 5; ++d)
            for (const auto& eta : enumerate_partitions(d))
                CHECK(u_poly(h, eta).at_one() == burnside_bullet({h, d, {eta}}));
}

TEST_CASE("base genus 2 double covers") {
    CHECK(u_poly(2, Partition{1, 1}) == cosh_x(1).scale(rat(8)));
    CHECK(u_poly(2, Partition{1, 1}).at_one() == rat(8));
}

TEST_CASE("series coefficients against direct permutation counts") {
    // r! [lambda^r] of the p_eta coefficient counts factorizations over d!
    for (int d = 1; d <= 4; ++d) {
        auto bullet = phi_bullet(0, d).f;
        auto conn = phi_circ(0, d).f;
        Rat dfac{factorial_z(d)};
        for (const auto& eta : enumerate_partitions(d)) {
            for (int r = 0; r <= 3; ++r) {
                Rat rfac{factorial_z(r)};
                CHECK(lambda_coeff(bullet.coeff(eta), r) * rfac * dfac ==
                      rat(tuple_count(eta, r, false)));
                CHECK(lambda_coeff(conn.coeff(eta), r) * rfac * dfac ==
                      rat(tuple_count(eta, r, true)));
            }
        }
    }
}

TEST_CASE("branch point counts") {
    CHECK(branch_count(0, 0, Partition{2}) == 1);
    CHECK(branch_count(0, 0, Partition{2, 1}) == 3);
    CHECK(branch_count(1, 0, Partition{1, 1}) == 4);
    CHECK(branch_count(3, 1, Partition{1}) == 4);
    CHECK(branch_count(0, 1, Partition{1}) == -2);
    CHECK(branch_count(1, 1, Partition{3, 1}) == 2 - 2 + 4 + 2 - 8);
}

TEST_CASE("named Hurwitz numbers") {
    CHECK(hurwitz_number(0, 0, Partition{2}, true) == rat(1, 2));
    CHECK(hurwitz_number(0, 0, Partition{2}, false) == rat(1, 2));
    CHECK(hurwitz_number(0, 0, Partition{3}, true) == rat(1));
    CHECK(hurwitz_number(0, 0, Partition{2, 1}, true) == rat(4));
    CHECK(hurwitz_number(0, 0, Partition{2, 1}, false) == rat(9, 2));
    CHECK(hurwitz_number(1, 0, Partition{1, 1}, true) == rat(1, 2));

    // degree 1: a cover of the base by itself exists only at equal genus
    for (int g = 0; g <= 3; ++g)
        for (int h = 0; h <= g; ++h)
            CHECK(hurwitz_number(g, h, Partition{1}, true) == rat(g == h ? 1 : 0));
    CHECK_THROWS_AS(hurwitz_number(0, 1, Partition{1}, true), std::domain_error);
    CHECK_THROWS_AS(hurwitz_number(0, 2, Partition{2, 2}, false), std::domain_error);
}

TEST_CASE("eigenbasis evolution matches the character sum") {
    for (int h = 0; h <= 1; ++h) {
        for (int d = 1; d <= 4; ++d) {
            auto evolved = evolve_cutjoin(h, d);
            for (const auto& eta : enumerate_partitions(d)) {
                REQUIRE(evolved.count(eta) == 1);
                CHECK(evolved.at(eta) == u_poly(h, eta));
            }
        }
    }
}

TEST_CASE("flow, log, parity, and golden-table reports") {
    CHECK(verify_cutjoin_phi(0, 4, 3).ok());
    CHECK(verify_cutjoin_phi(1, 3).ok());
    CHECK(verify_exp_log(0, 5).ok());
    CHECK(verify_exp_log(1, 5).ok());
    CHECK(verify_parity(0, 5).ok());
    CHECK(verify_parity(1, 4).ok());
    CHECK(verify_routes(0, 4).ok());
    CHECK(verify_routes(1, 4).ok());
    CHECK(verify_routes(2, 3).ok());
    CHECK(verify_phi_golden().ok());
}

TEST_CASE("simple covers keep only trivial profiles") {
    auto simple = simple_specialize(0, 3);
    REQUIRE(simple.size() == 4);
    CHECK(simple[0] == XLaurent::one());
    CHECK(simple[1] == XLaurent::one());
    CHECK(simple[2] == cosh_x(1).scale(rat(1, 2)));
    for (const auto& f : simple) CHECK(f.even_in_lambda());
}

TEST_CASE("Hodge-side series") {
    CHECK(hodge_series(Partition{1}, 6) == LambdaSeries::one(6));
    CHECK(hodge_series(Partition{2}, 8) == s_series(2, 8));
    CHECK(hodge_series(Partition{1, 1}, 8) ==
          (s_series(1, 8) * s_series(1, 8)).scale(rat(1, 2)));

    CHECK(s_lambda_identities(12).ok());
    CHECK_THROWS_AS(s_lambda_identities(8), std::domain_error);

    auto survey = s_poly_survey(3);
    CHECK(survey.ok());
    bool found = false;
    for (const auto& c : survey.cases) {
        CHECK(!c.witness.empty());
        if (c.id == "spoly/p(2)") {
            found = true;
            CHECK(c.witness.find("S(2λ)") != std::string::npos);
        }
    }
    CHECK(found);
}
