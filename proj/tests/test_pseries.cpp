#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvh/pseries.hpp"

using namespace mvh;

namespace {
PSeries<Rat> pmono(int D, std::initializer_list<int> parts, Rat a = rat(1)) {
    return PSeries<Rat>::monomial(D, Partition(std::vector<int>(parts)), std::move(a));
}
}  // namespace

TEST_CASE("sparse basics") {
    auto s = PSeries<Rat>::zero(4);
    s.set(Partition{2, 1}, rat(5));
    CHECK(s.coeff(Partition{2, 1}) == rat(5));
    CHECK(s.coeff(Partition{3}) == rat(0));
    s.set(Partition{2, 1}, rat(0));
    CHECK(s.c.empty());

    s.accumulate(Partition{1}, rat(2));
    s.accumulate(Partition{1}, rat(-2));
    CHECK(s.c.empty());

    CHECK(PSeries<Rat>::monomial(3, Partition{4}, rat(1)) == PSeries<Rat>::zero(3));
    CHECK_THROWS_AS(PSeries<Rat>::zero(3) + PSeries<Rat>::zero(4), std::invalid_argument);
}

TEST_CASE("products merge partitions and respect the cutoff") {
    CHECK(pmono(6, {2}) * pmono(6, {3, 1}) == pmono(6, {3, 2, 1}));
    CHECK(pmono(6, {1}, rat(2)) * pmono(6, {1}, rat(3)) == pmono(6, {1, 1}, rat(6)));
    // degree 4 + degree 2 overflows D = 5 and is dropped
    CHECK(pmono(5, {4}) * pmono(5, {2}) == PSeries<Rat>::zero(5));
    auto mixed = (pmono(5, {2}) + pmono(5, {4})) * pmono(5, {2});
    CHECK(mixed == pmono(5, {2, 2}));

    CHECK(pmono(6, {2, 1}).mul_monomial(Partition{2}) == pmono(6, {2, 2, 1}));
}

TEST_CASE("partial derivatives") {
    CHECK(pmono(4, {1, 1}).derivative(1) == pmono(4, {1}, rat(2)));
    CHECK(pmono(6, {2, 2, 1}).derivative(2) == pmono(6, {2, 1}, rat(2)));
    CHECK(pmono(4, {2}).derivative(3) == PSeries<Rat>::zero(4));
    // product rule spot check: d/dp_1 (p_1 p_2) = p_2
    CHECK((pmono(4, {1}) * pmono(4, {2})).derivative(1) == pmono(4, {2}));
}

TEST_CASE("cut, join, quad on single monomials") {
    CHECK(cut_operator(pmono(4, {2})) == pmono(4, {1, 1}));
    CHECK(cut_operator(pmono(4, {3})) == pmono(4, {2, 1}, rat(3)));
    CHECK(cut_operator(pmono(4, {4})) ==
          pmono(4, {3, 1}, rat(4)) + pmono(4, {2, 2}, rat(2)));
    CHECK(cut_operator(pmono(4, {1, 1})) == PSeries<Rat>::zero(4));

    CHECK(join_operator(pmono(4, {1, 1})) == pmono(4, {2}));
    CHECK(join_operator(pmono(4, {2})) == PSeries<Rat>::zero(4));
    CHECK(join_operator(pmono(4, {2, 1})) == pmono(4, {3}, rat(2)));

    CHECK(quad_operator(pmono(4, {1})) == pmono(4, {2}, rat(1, 2)));
}

TEST_CASE("operators against neighbor weights") {
    CHECK(verify_operator_neighbors(8).ok());
}

TEST_CASE("iterated cut against its closed form") {
    CHECK(cut_power(2, 2) == pmono(2, {1, 1}));
    CHECK(cut_power(3, 2) == pmono(3, {2, 1}, rat(3)));
    CHECK(cut_power(4, 3) == pmono(4, {2, 1, 1}, rat(16)));
    CHECK(cut_power(5, 1) == pmono(5, {5}));
    // the function cross-checks itself and throws on disagreement
    for (int d = 1; d <= 8; ++d)
        for (int l = 1; l <= d; ++l) CHECK_NOTHROW(cut_power(d, l));
}

TEST_CASE("exp and log") {
    auto F = pmono(4, {1}) + pmono(4, {2}, rat(1, 2));
    auto G = exp_p(F);
    CHECK(G.coeff(Partition()) == rat(1));
    CHECK(log_p(G) == F);

    auto e1 = exp_p(pmono(3, {1}));
    CHECK(e1 == PSeries<Rat>::one(3) + pmono(3, {1}) + pmono(3, {1, 1}, rat(1, 2)) +
                    pmono(3, {1, 1, 1}, rat(1, 6)));

    // exp turns sums into products
    CHECK(exp_p(pmono(5, {1}) + pmono(5, {2})) ==
          exp_p(pmono(5, {1})) * exp_p(pmono(5, {2})));

    auto H = PSeries<Rat>::one(4) + pmono(4, {1}, rat(3)) + pmono(4, {2, 2}, rat(-1));
    CHECK(exp_p(log_p(H)) == H);

    CHECK_THROWS_AS(exp_p(PSeries<Rat>::one(3)), std::domain_error);
    CHECK_THROWS_AS(log_p(pmono(3, {1})), std::domain_error);
}

TEST_CASE("transposition action coefficients") {
    for (int d = 1; d <= 6; ++d)
        for (const auto& nu : enumerate_partitions(d))
            CHECK(central_character_action_check(nu).ok());
}

TEST_CASE("coefficients from a nontrivial ring") {
    // equality goes through the ring, so non-reduced fractions still match
    auto a = PSeries<URat>::monomial(3, Partition{1},
                                     URat::of(ULaurent::one(), SinProd::factor(1)));
    auto b = PSeries<URat>::monomial(3, Partition{1},
                                     URat::of(two_sin_half(1), SinProd::factor(1, 2)));
    CHECK(a == b);

    auto s = PSeries<XLaurent>::monomial(4, Partition{2}, sinh_x(1));
    CHECK(cut_operator(s) == PSeries<XLaurent>::monomial(4, Partition{1, 1}, sinh_x(1)));
    CHECK(s.scale_ring(cosh_x(1)).coeff(Partition{2}) ==
          (sinh_x(2)).scale(rat(1, 2)));
}
