#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mvh/coeffring.hpp"

using namespace mvh;

TEST_CASE("rational helpers") {
    CHECK(rat(6, 4) == rat(3, 2));
    CHECK(rat(-2, -4) == rat(1, 2));
    CHECK(rat_pow(rat(2, 3), 3) == rat(8, 27));
    CHECK(rat_pow(rat(2, 3), -2) == rat(9, 4));
    CHECK(rat_pow(rat(7), 0) == rat(1));
    CHECK(factorial_z(0) == 1);
    CHECK(factorial_z(6) == 720);
    CHECK(pow_z(3, 4) == 81);
    CHECK(pow_z(5, 0) == 1);
    CHECK(rat_str(rat(-3, 6)) == "-1/2");
    CHECK(rat_str(rat(4, 2)) == "2");
}

TEST_CASE("Gaussian rationals") {
    auto i = GaussRat::i();
    CHECK(i * i == GaussRat(rat(-1)));
    CHECK(i.conj() == -i);
    CHECK(GaussRat(rat(1), rat(2)) / GaussRat(rat(3), rat(-1)) ==
          GaussRat(rat(1, 10), rat(7, 10)));
    CHECK(GaussRat(rat(2), rat(3)) * GaussRat(rat(2), rat(-3)) == GaussRat(rat(13)));

    CHECK(i_pow(0) == GaussRat(rat(1)));
    CHECK(i_pow(1) == i);
    CHECK(i_pow(2) == GaussRat(rat(-1)));
    CHECK(i_pow(3) == -i);
    CHECK(i_pow(-1) == -i);
    for (long k = -9; k <= 9; ++k) CHECK(i_pow(k) == i_pow(k + 4));
}

TEST_CASE("half-angle Laurent polynomials in u") {
    CHECK(u_pow(3) * u_pow(-3) == ULaurent::one());
    CHECK(sin_half(0).is_zero());
    for (int k = 1; k <= 6; ++k) {
        CHECK(sin_half(k) * sin_half(k) + cos_half(k) * cos_half(k) == ULaurent::one());
        CHECK(sin_half(-k) == -sin_half(k));
        CHECK(cos_half(-k) == cos_half(k));
        CHECK(two_sin_half(k) == sin_half(k).scale(GaussRat(rat(2))));
        // u -> u^{-1} flips the sign of lambda
        CHECK(sin_half(k).invert_u() == -sin_half(k));
        CHECK(cos_half(k).invert_u() == cos_half(k));
        // coefficients of sin are purely imaginary, of cos purely real
        CHECK(sin_half(k).conj_coeffs() == -sin_half(k));
        CHECK(cos_half(k).conj_coeffs() == cos_half(k));
    }
    // product to sum
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            CHECK(two_sin_half(a) * sin_half(b) == cos_half(a - b) - cos_half(a + b));
}

TEST_CASE("two-variable Laurent polynomials") {
    auto one = GaussRat(rat(1));
    // argument order is (u exponent, v exponent)
    CHECK(UVLaurent::monomial(2, 5, one).at_v_one() == u_pow(2));
    CHECK(UVLaurent::monomial(2, 5, one).d_v() ==
          UVLaurent::monomial(2, 5, one).scale(GaussRat(rat(5))));
    CHECK(UVLaurent::monomial(2, 0, one).d_v().is_zero());

    auto p = UVLaurent::monomial(-1, 3, one) + UVLaurent::monomial(4, -2, GaussRat::i());
    auto slices = p.v_slices();
    REQUIRE(slices.size() == 2);
    CHECK(slices.at(3) == u_pow(-1));
    CHECK(slices.at(-2) == u_pow(4).scale(GaussRat::i()));
    auto rebuilt = UVLaurent{};
    for (const auto& [ve, up] : slices)
        rebuilt = rebuilt + UVLaurent::from_u(up) * UVLaurent::monomial(0, ve, one);
    CHECK(rebuilt == p);

    CHECK(UVLaurent::from_u(sin_half(2)).at_v_one() == sin_half(2));
    CHECK(UVLaurent::from_u(sin_half(2)).v_slices().count(0) == 1);
}

TEST_CASE("Laurent polynomials in x = e^lambda") {
    CHECK(cosh_x(2) * cosh_x(2) - sinh_x(2) * sinh_x(2) == XLaurent::one());
    CHECK(sinh_x(3).odd_in_lambda());
    CHECK(cosh_x(3).even_in_lambda());
    CHECK_FALSE(sinh_x(3).even_in_lambda());
    CHECK(sinh_x(4).mirror() == -sinh_x(4));
    CHECK(sinh_x(3).at_one() == rat(0));
    CHECK(cosh_x(3).at_one() == rat(1));
    CHECK((x_pow(2) + x_pow(-5)).at_one() == rat(2));
    CHECK(sinh_x(2).lambda_derivative() == cosh_x(2).scale(rat(2)));
    CHECK(cosh_x(3).lambda_derivative() == sinh_x(3).scale(rat(3)));
    // product to sum
    CHECK(sinh_x(2) * sinh_x(1) == (cosh_x(3) - cosh_x(1)).scale(rat(1, 2)));
    CHECK(sinh_x(1).hyperbolic_str() == "sinh(λ)");
    CHECK(sinh_x(1).scale(rat(1, 2)).hyperbolic_str() == "(1/2)*sinh(λ)");
    CHECK(cosh_x(2).hyperbolic_str() == "cosh(2λ)");
    CHECK(x_pow(-2).hyperbolic_str() == "cosh(2λ) - sinh(2λ)");
    CHECK((XLaurent::one() + sinh_x(2).scale(rat(-3))).hyperbolic_str() ==
          "1 - 3*sinh(2λ)");
}

TEST_CASE("sine products") {
    CHECK(SinProd::one().expand() == ULaurent::one());
    for (int k = 1; k <= 5; ++k) CHECK(SinProd::factor(k).expand() == two_sin_half(k));

    auto a = SinProd::factor(2).mul(SinProd::factor(3, 2));
    auto b = SinProd::factor(2, 2);
    CHECK(SinProd::lcm(a, b) == SinProd::factor(2, 2).mul(SinProd::factor(3, 2)));
    CHECK(SinProd::lcm(a, b).quotient(a) == SinProd::factor(2));
    CHECK(a.mul(b).expand() == a.expand() * b.expand());
    CHECK(a.quotient(SinProd::factor(3)) == SinProd::factor(2).mul(SinProd::factor(3)));
    CHECK(SinProd::factor(1, 2).str().find("sin") != std::string::npos);
}

TEST_CASE("rational functions over sine products") {
    CHECK(URat::of(two_sin_half(2), SinProd::factor(2)) == URat::one());

    // equality is cross-multiplication, so non-reduced forms compare equal
    auto half = URat::of(sin_half(1), SinProd::factor(1));
    auto also_half = URat::of(two_sin_half(1) * sin_half(1),
                              SinProd::factor(1, 2));
    CHECK(half == also_half);
    CHECK(half == URat::of(ULaurent::one().scale(GaussRat(rat(1, 2)))));

    auto a = URat::of(ULaurent::one(), SinProd::factor(1));
    CHECK(a + a == URat::of(ULaurent::one().scale(GaussRat(rat(2))), SinProd::factor(1)));
    CHECK((a - a).is_zero());
    CHECK((a - a).den.is_one());
    CHECK(a * URat::of(two_sin_half(1)) == URat::one());
    CHECK(a.scale(GaussRat(rat(0))).is_zero());

    // different denominators add through the lcm
    auto b = URat::of(ULaurent::one(), SinProd::factor(2));
    auto sum = a + b;
    CHECK(sum.den == SinProd::factor(1).mul(SinProd::factor(2)));
    CHECK(sum == URat::of(two_sin_half(2) + two_sin_half(1),
                          SinProd::factor(1).mul(SinProd::factor(2))));
}

TEST_CASE("v-slices of rational functions share the denominator") {
    auto one = GaussRat(rat(1));
    auto num = UVLaurent::monomial(0, 1, one) + UVLaurent::monomial(2, 0, one);
    auto r = UVRat::of(num, SinProd::factor(2));

    CHECK(at_v_one(r) == URat::of(ULaurent::one() + u_pow(2), SinProd::factor(2)));
    auto slices = v_slices(r);
    REQUIRE(slices.size() == 2);
    CHECK(slices.at(0) == URat::of(u_pow(2), SinProd::factor(2)));
    CHECK(slices.at(1) == URat::of(ULaurent::one(), SinProd::factor(2)));

    auto back = uv_of(at_v_one(r));
    CHECK(at_v_one(back) == at_v_one(r));
}

TEST_CASE("truncated lambda series") {
    auto one = LambdaSeries::one(4);
    CHECK(one + LambdaSeries::zero(4) == one);
    CHECK(one.scale(rat(3)).c[0] == rat(3));

    LambdaSeries p{2, {rat(1), rat(1), rat(0)}};
    LambdaSeries sq{2, {rat(1), rat(2), rat(1)}};
    CHECK(p * p == sq);

    LambdaSeries t{3, {rat(0), rat(0), rat(3), rat(4)}};
    auto down = t.shift_down(2);
    CHECK(down.N == 1);
    CHECK(down.c == std::vector<Rat>{rat(3), rat(4)});
    CHECK_THROWS(p.shift_down(1));
}

TEST_CASE("exponential substitution") {
    CHECK(x_to_lambda(XLaurent::one(), 5) == LambdaSeries::one(5));

    auto s = x_to_lambda(sinh_x(1), 5);
    CHECK(s.c == std::vector<Rat>{rat(0), rat(1), rat(0), rat(1, 6), rat(0), rat(1, 120)});

    auto e = x_to_lambda(x_pow(-1), 3);
    CHECK(e.c == std::vector<Rat>{rat(1), rat(-1), rat(1, 2), rat(-1, 6)});

    // S(k lambda) = sinh(k lambda / 2) / (k lambda / 2)
    CHECK(s_series(2, 8) == x_to_lambda(sinh_x(1), 9).shift_down(1));
    auto s1 = s_series(1, 4);
    CHECK(s1.c == std::vector<Rat>{rat(1), rat(0), rat(1, 24), rat(0), rat(1, 1920)});
    for (int k = 1; k <= 4; ++k) {
        auto sk = s_series(k, 7);
        CHECK(sk.c[0] == rat(1));
        for (int n = 1; n <= 7; n += 2) CHECK(sk.c[n] == rat(0));
    }
}
