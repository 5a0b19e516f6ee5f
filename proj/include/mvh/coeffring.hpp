#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace mvh {

// Exact arithmetic lives on GMP rationals; canonical form (reduced fraction,
// positive denominator) is maintained by the library.
using Rat = mpq_class;

Rat rat(long long n, long long d = 1);
Rat rat_pow(const Rat& b, long e);  // e may be negative (b nonzero then)
mpz_class factorial_z(int n);
mpz_class pow_z(long b, int e);  // b^e, e >= 0
std::string rat_str(const Rat& q);

// ---------------------------------------------------------------------------
// Gaussian rationals a + b*sqrt(-1)

struct GaussRat {
    Rat re, im;

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return {Rat(0), Rat(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    GaussRat conj() const { return {re, -im}; }

    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat operator*(const Rat& q) const { return {re * q, im * q}; }
    GaussRat operator/(const GaussRat& o) const;

    bool operator==(const GaussRat&) const = default;
    std::string str() const;
};

GaussRat i_pow(long k);  // sqrt(-1)^k for any integer k

// ---------------------------------------------------------------------------
// Laurent polynomials in u = e^{-sqrt(-1) lambda/4}.  The quarter angle is
// the coarsest grid on which every e^{sqrt(-1) kappa lambda/4} (kappa even)
// and every sin(k lambda/2) is a Laurent monomial combination.

struct ULaurent {
    std::map<int, GaussRat> c;  // exponent -> coefficient, no zeros stored

    static ULaurent monomial(int exp, GaussRat a);
    static ULaurent one() { return monomial(0, GaussRat(Rat(1))); }
    static ULaurent from_u(const ULaurent& x) { return x; }

    bool is_zero() const { return c.empty(); }

    ULaurent operator+(const ULaurent& o) const;
    ULaurent operator-(const ULaurent& o) const;
    ULaurent operator-() const;
    ULaurent operator*(const ULaurent& o) const;
    ULaurent scale(const GaussRat& g) const;

    ULaurent invert_u() const;     // u -> u^{-1}
    ULaurent conj_coeffs() const;  // coefficientwise complex conjugation

    bool operator==(const ULaurent&) const = default;
    std::string str() const;  // exponents descending
};

ULaurent u_pow(int k);
ULaurent sin_half(int k);      // sin(k lambda/2) = (u^{-2k} - u^{2k}) / (2 sqrt(-1))
ULaurent two_sin_half(int k);  // 2 sin(k lambda/2)
ULaurent cos_half(int k);      // cos(k lambda/2) = (u^{-2k} + u^{2k}) / 2

// ---------------------------------------------------------------------------
// Laurent polynomials in u and v = e^{sqrt(-1) tau lambda}.  kappa_nu is even,
// so e^{sqrt(-1) tau kappa_nu lambda/2} = v^{kappa_nu/2} needs only integer
// v-exponents.  Keys are (v-exponent, u-exponent).

struct UVLaurent {
    std::map<std::pair<int, int>, GaussRat> c;

    static UVLaurent monomial(int uexp, int vexp, GaussRat a);
    static UVLaurent one() { return monomial(0, 0, GaussRat(Rat(1))); }
    static UVLaurent from_u(const ULaurent& x);

    bool is_zero() const { return c.empty(); }

    UVLaurent operator+(const UVLaurent& o) const;
    UVLaurent operator-(const UVLaurent& o) const;
    UVLaurent operator-() const;
    UVLaurent operator*(const UVLaurent& o) const;
    UVLaurent scale(const GaussRat& g) const;

    UVLaurent d_v() const;          // v^m -> m v^m (the scaled tau-derivative)
    ULaurent at_v_one() const;      // v -> 1
    std::map<int, ULaurent> v_slices() const;  // v-exponent -> u-part

    bool operator==(const UVLaurent&) const = default;
    std::string str() const;
};

// ---------------------------------------------------------------------------
// Laurent polynomials in x = e^{lambda} over Rat; the home of the Hurwitz
// generating functions ("linear combinations of cosh and sinh").

struct XLaurent {
    std::map<int, Rat> c;

    static XLaurent monomial(int exp, Rat a);
    static XLaurent one() { return monomial(0, Rat(1)); }

    bool is_zero() const { return c.empty(); }

    XLaurent operator+(const XLaurent& o) const;
    XLaurent operator-(const XLaurent& o) const;
    XLaurent operator-() const;
    XLaurent operator*(const XLaurent& o) const;
    XLaurent scale(const Rat& q) const;

    XLaurent mirror() const;             // x -> x^{-1}, i.e. lambda -> -lambda
    XLaurent lambda_derivative() const;  // x^k -> k x^k
    bool even_in_lambda() const { return mirror() == *this; }
    bool odd_in_lambda() const { return mirror() == -*this; }
    Rat at_one() const;                  // evaluation at lambda = 0

    bool operator==(const XLaurent&) const = default;
    std::string str() const;          // raw: "(1/2)*x^6 - (3/2)*x^2"
    std::string hyperbolic_str() const;  // "(1/2)*sinh(λ)" style
};

XLaurent x_pow(int k);
XLaurent sinh_x(int k);  // (x^k - x^{-k})/2
XLaurent cosh_x(int k);  // (x^k + x^{-k})/2

// ---------------------------------------------------------------------------
// Monomial denominators: products prod_k (2 sin(k lambda/2))^{m_k}

struct SinProd {
    std::map<int, int> f;  // k -> multiplicity, k >= 1

    static SinProd one() { return {}; }
    static SinProd factor(int k, int mult = 1);
    static SinProd lcm(const SinProd& a, const SinProd& b);

    bool is_one() const { return f.empty(); }
    SinProd mul(const SinProd& o) const;
    SinProd quotient(const SinProd& o) const;  // requires o divides *this
    ULaurent expand() const;                   // memoized

    bool operator==(const SinProd&) const = default;
    std::string str() const;
};

// ---------------------------------------------------------------------------
// Quotients num / sinprod.  No gcd is computed: addition goes through the
// factor-multiset lcm and equality cross-multiplies, which is decidable and
// cheap because denominators stay factored.

template <class Num>
struct RatFn {
    Num num;
    SinProd den;

    static RatFn zero() { return {}; }
    static RatFn one() { return {Num::one(), SinProd::one()}; }
    static RatFn of(Num n, SinProd d = SinProd::one()) {
        return RatFn{std::move(n), std::move(d)}.normalized();
    }

    RatFn normalized() const {
        if (num.is_zero()) return {Num{}, SinProd::one()};
        return *this;
    }
    bool is_zero() const { return num.is_zero(); }

    RatFn operator+(const RatFn& o) const {
        SinProd l = SinProd::lcm(den, o.den);
        Num a = num * Num::from_u(l.quotient(den).expand());
        Num b = o.num * Num::from_u(l.quotient(o.den).expand());
        return RatFn{a + b, l}.normalized();
    }
    RatFn operator-(const RatFn& o) const { return *this + (-o); }
    RatFn operator-() const { return {-num, den}; }
    RatFn operator*(const RatFn& o) const {
        return RatFn{num * o.num, den.mul(o.den)}.normalized();
    }
    RatFn scale(const GaussRat& g) const {
        return RatFn{num.scale(g), den}.normalized();
    }

    bool operator==(const RatFn& o) const {
        return num * Num::from_u(o.den.expand()) == o.num * Num::from_u(den.expand());
    }

    std::string str() const {
        if (den.is_one()) return num.str();
        return "(" + num.str() + ") / (" + den.str() + ")";
    }
};

using URat = RatFn<ULaurent>;
using UVRat = RatFn<UVLaurent>;

URat at_v_one(const UVRat& r);
UVRat uv_of(const URat& r);
std::map<int, URat> v_slices(const UVRat& r);  // shares the denominator

// ---------------------------------------------------------------------------
// Truncated Taylor series in lambda (order N kept, exact Rat coefficients)

struct LambdaSeries {
    int N = 0;
    std::vector<Rat> c;  // c[0..N]

    static LambdaSeries zero(int N);
    static LambdaSeries one(int N);

    LambdaSeries operator+(const LambdaSeries& o) const;
    LambdaSeries operator-(const LambdaSeries& o) const;
    LambdaSeries operator*(const LambdaSeries& o) const;
    LambdaSeries scale(const Rat& q) const;

    // divide by lambda^m; the m lowest coefficients must vanish.  The top m
    // coefficients of the result are unknown, so the order shrinks.
    LambdaSeries shift_down(int m) const;

    bool operator==(const LambdaSeries&) const = default;
    std::string str() const;
};

// substitute x = e^{lambda}, truncating at order N
LambdaSeries x_to_lambda(const XLaurent& p, int N);

// S(k lambda) where S(t) = sinh(t/2)/(t/2); even series, constant term 1
LambdaSeries s_series(int k, int N);

}  // namespace mvh
