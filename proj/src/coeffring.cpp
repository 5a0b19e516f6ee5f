#include "mvh/coeffring.hpp"

#include <mutex>
#include <stdexcept>

namespace mvh {

Rat rat(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("zero denominator");
    Rat q(static_cast<long>(n), static_cast<long>(d));
    q.canonicalize();
    return q;
}

Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    bool neg = e < 0;
    unsigned long k = neg ? -static_cast<unsigned long>(e) : e;
    if (neg && b == 0) throw std::domain_error("0^negative");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), b.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), b.get_den().get_mpz_t(), k);
    Rat r = neg ? Rat(den, num) : Rat(num, den);
    r.canonicalize();
    return r;
}

mpz_class factorial_z(int n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

mpz_class pow_z(long b, int e) {
    mpz_class r;
    mpz_class base(b);
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

// ---------------------------------------------------------------------------

GaussRat GaussRat::operator/(const GaussRat& o) const {
    Rat n2 = o.re * o.re + o.im * o.im;
    if (n2 == 0) throw std::domain_error("division by zero");
    GaussRat t = *this * o.conj();
    return {t.re / n2, t.im / n2};
}

std::string GaussRat::str() const {
    if (im == 0) return rat_str(re);
    std::string ims = (im == 1) ? "i" : (im == -1) ? "-i" : rat_str(im) + "*i";
    if (re == 0) return ims;
    std::string s = rat_str(re);
    if (im > 0)
        s += "+" + ((im == 1) ? std::string("i") : rat_str(im) + "*i");
    else
        s += "-" + ((im == -1) ? std::string("i") : rat_str(-im) + "*i");
    return "(" + s + ")";
}

GaussRat i_pow(long k) {
    switch (((k % 4) + 4) % 4) {
        case 0: return GaussRat(Rat(1));
        case 1: return GaussRat::i();
        case 2: return GaussRat(Rat(-1));
        default: return {Rat(0), Rat(-1)};
    }
}

// ---------------------------------------------------------------------------

ULaurent ULaurent::monomial(int exp, GaussRat a) {
    ULaurent r;
    if (!a.is_zero()) r.c.emplace(exp, std::move(a));
    return r;
}

ULaurent ULaurent::operator+(const ULaurent& o) const {
    ULaurent r = *this;
    for (const auto& [e, a] : o.c) {
        auto it = r.c.find(e);
        if (it == r.c.end()) {
            r.c.emplace(e, a);
        } else {
            it->second = it->second + a;
            if (it->second.is_zero()) r.c.erase(it);
        }
    }
    return r;
}

ULaurent ULaurent::operator-() const {
    ULaurent r;
    for (const auto& [e, a] : c) r.c.emplace(e, -a);
    return r;
}

ULaurent ULaurent::operator-(const ULaurent& o) const { return *this + (-o); }

ULaurent ULaurent::operator*(const ULaurent& o) const {
    ULaurent r;
    for (const auto& [e1, a1] : c)
        for (const auto& [e2, a2] : o.c) {
            auto prod = a1 * a2;
            auto it = r.c.find(e1 + e2);
            if (it == r.c.end()) {
                if (!prod.is_zero()) r.c.emplace(e1 + e2, std::move(prod));
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero()) r.c.erase(it);
            }
        }
    return r;
}

ULaurent ULaurent::scale(const GaussRat& g) const {
    ULaurent r;
    if (g.is_zero()) return r;
    for (const auto& [e, a] : c) r.c.emplace(e, a * g);
    return r;
}

ULaurent ULaurent::invert_u() const {
    ULaurent r;
    for (const auto& [e, a] : c) r.c.emplace(-e, a);
    return r;
}

ULaurent ULaurent::conj_coeffs() const {
    ULaurent r;
    for (const auto& [e, a] : c) r.c.emplace(e, a.conj());
    return r;
}

namespace {

std::string coef_mono(const std::string& coef, const std::string& mono) {
    if (mono.empty()) return coef;
    if (coef == "1") return mono;
    if (coef == "-1") return "-" + mono;
    return coef + "*" + mono;
}

// mixed-sign Gaussian coefficients come parenthesized, so a leading '-' is
// always a genuine sign and can be folded into the separator
void append_term(std::string& s, const std::string& term) {
    if (s.empty())
        s += term;
    else if (term.rfind("-", 0) == 0)
        s += " - " + term.substr(1);
    else
        s += " + " + term;
}

}  // namespace

std::string ULaurent::str() const {
    if (c.empty()) return "0";
    std::string s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        auto [e, a] = *it;
        std::string mono = e == 0 ? "" : (e == 1) ? "u" : "u^" + std::to_string(e);
        append_term(s, coef_mono(a.str(), mono));
    }
    return s;
}

ULaurent u_pow(int k) { return ULaurent::monomial(k, GaussRat(Rat(1))); }

ULaurent two_sin_half(int k) {
    // 2 sin(k lambda/2) = sqrt(-1) (u^{2k} - u^{-2k})
    ULaurent r = ULaurent::monomial(2 * k, GaussRat::i());
    return r + ULaurent::monomial(-2 * k, -GaussRat::i());
}

ULaurent sin_half(int k) { return two_sin_half(k).scale(GaussRat(rat(1, 2))); }

ULaurent cos_half(int k) {
    ULaurent r = ULaurent::monomial(2 * k, GaussRat(rat(1, 2)));
    return r + ULaurent::monomial(-2 * k, GaussRat(rat(1, 2)));
}

// ---------------------------------------------------------------------------

UVLaurent UVLaurent::monomial(int uexp, int vexp, GaussRat a) {
    UVLaurent r;
    if (!a.is_zero()) r.c.emplace(std::make_pair(vexp, uexp), std::move(a));
    return r;
}

UVLaurent UVLaurent::from_u(const ULaurent& x) {
    UVLaurent r;
    for (const auto& [e, a] : x.c) r.c.emplace(std::make_pair(0, e), a);
    return r;
}

UVLaurent UVLaurent::operator+(const UVLaurent& o) const {
    UVLaurent r = *this;
    for (const auto& [e, a] : o.c) {
        auto it = r.c.find(e);
        if (it == r.c.end()) {
            r.c.emplace(e, a);
        } else {
            it->second = it->second + a;
            if (it->second.is_zero()) r.c.erase(it);
        }
    }
    return r;
}

UVLaurent UVLaurent::operator-() const {
    UVLaurent r;
    for (const auto& [e, a] : c) r.c.emplace(e, -a);
    return r;
}

UVLaurent UVLaurent::operator-(const UVLaurent& o) const { return *this + (-o); }

UVLaurent UVLaurent::operator*(const UVLaurent& o) const {
    UVLaurent r;
    for (const auto& [e1, a1] : c)
        for (const auto& [e2, a2] : o.c) {
            auto key = std::make_pair(e1.first + e2.first, e1.second + e2.second);
            auto prod = a1 * a2;
            auto it = r.c.find(key);
            if (it == r.c.end()) {
                if (!prod.is_zero()) r.c.emplace(key, std::move(prod));
            } else {
                it->second = it->second + prod;
                if (it->second.is_zero()) r.c.erase(it);
            }
        }
    return r;
}

UVLaurent UVLaurent::scale(const GaussRat& g) const {
    UVLaurent r;
    if (g.is_zero()) return r;
    for (const auto& [e, a] : c) r.c.emplace(e, a * g);
    return r;
}

UVLaurent UVLaurent::d_v() const {
    UVLaurent r;
    for (const auto& [e, a] : c) {
        if (e.first == 0) continue;
        r.c.emplace(e, a * Rat(e.first));
    }
    return r;
}

ULaurent UVLaurent::at_v_one() const {
    ULaurent r;
    for (const auto& [e, a] : c) {
        auto it = r.c.find(e.second);
        if (it == r.c.end()) {
            r.c.emplace(e.second, a);
        } else {
            it->second = it->second + a;
            if (it->second.is_zero()) r.c.erase(it);
        }
    }
    return r;
}

std::map<int, ULaurent> UVLaurent::v_slices() const {
    std::map<int, ULaurent> r;
    for (const auto& [e, a] : c) r[e.first].c.emplace(e.second, a);
    return r;
}

std::string UVLaurent::str() const {
    if (c.empty()) return "0";
    std::string s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        auto [e, a] = *it;
        auto [ve, ue] = e;
        std::string mono;
        if (ve != 0) mono += (ve == 1) ? "v" : "v^" + std::to_string(ve);
        if (ue != 0) {
            if (!mono.empty()) mono += "*";
            mono += (ue == 1) ? "u" : "u^" + std::to_string(ue);
        }
        append_term(s, coef_mono(a.str(), mono));
    }
    return s;
}

// ---------------------------------------------------------------------------

XLaurent XLaurent::monomial(int exp, Rat a) {
    XLaurent r;
    if (a != 0) r.c.emplace(exp, std::move(a));
    return r;
}

XLaurent XLaurent::operator+(const XLaurent& o) const {
    XLaurent r = *this;
    for (const auto& [e, a] : o.c) {
        auto it = r.c.find(e);
        if (it == r.c.end()) {
            r.c.emplace(e, a);
        } else {
            it->second += a;
            if (it->second == 0) r.c.erase(it);
        }
    }
    return r;
}

XLaurent XLaurent::operator-() const {
    XLaurent r;
    for (const auto& [e, a] : c) r.c.emplace(e, -a);
    return r;
}

XLaurent XLaurent::operator-(const XLaurent& o) const { return *this + (-o); }

XLaurent XLaurent::operator*(const XLaurent& o) const {
    XLaurent r;
    for (const auto& [e1, a1] : c)
        for (const auto& [e2, a2] : o.c) {
            Rat prod = a1 * a2;
            auto it = r.c.find(e1 + e2);
            if (it == r.c.end()) {
                if (prod != 0) r.c.emplace(e1 + e2, std::move(prod));
            } else {
                it->second += prod;
                if (it->second == 0) r.c.erase(it);
            }
        }
    return r;
}

XLaurent XLaurent::scale(const Rat& q) const {
    XLaurent r;
    if (q == 0) return r;
    for (const auto& [e, a] : c) r.c.emplace(e, a * q);
    return r;
}

XLaurent XLaurent::mirror() const {
    XLaurent r;
    for (const auto& [e, a] : c) r.c.emplace(-e, a);
    return r;
}

XLaurent XLaurent::lambda_derivative() const {
    XLaurent r;
    for (const auto& [e, a] : c)
        if (e != 0) r.c.emplace(e, a * Rat(e));
    return r;
}

Rat XLaurent::at_one() const {
    Rat s(0);
    for (const auto& [e, a] : c) s += a;
    return s;
}

namespace {

std::string rat_coeff_str(const Rat& a, const std::string& mono, bool leading) {
    // renders "+ (3/2)*x^2" pieces; sign handled by the caller via `leading`
    Rat mag = a < 0 ? Rat(-a) : a;
    std::string coef = mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")";
    std::string body = mono.empty() ? coef : (mag == 1 ? mono : coef + "*" + mono);
    if (leading) return (a < 0 ? "-" : "") + body;
    return (a < 0 ? " - " : " + ") + body;
}

}  // namespace

std::string XLaurent::str() const {
    if (c.empty()) return "0";
    std::string s;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        auto [e, a] = *it;
        std::string mono = e == 0 ? "" : (e == 1 ? "x" : "x^" + std::to_string(e));
        s += rat_coeff_str(a, mono, s.empty());
    }
    return s;
}

std::string XLaurent::hyperbolic_str() const {
    if (c.empty()) return "0";
    // split into constant + cosh + sinh pieces
    Rat constant(0);
    std::map<int, Rat> ch, sh;  // k >= 1
    for (const auto& [e, a] : c) {
        if (e == 0) constant += a;
    }
    for (const auto& [e, a] : c) {
        if (e <= 0) continue;
        Rat lo(0);
        if (auto it = c.find(-e); it != c.end()) lo = it->second;
        Rat cc = a + lo, sc = a - lo;
        if (cc != 0) ch[e] = cc;
        if (sc != 0) sh[e] = sc;
    }
    // exponents with only a negative side: x^{-k} = cosh(k) - sinh(k)
    for (const auto& [e, a] : c) {
        if (e >= 0) continue;
        if (c.find(-e) != c.end()) continue;
        ch[-e] += a;
        if (ch[-e] == 0) ch.erase(-e);
        sh[-e] -= a;
        if (sh[-e] == 0) sh.erase(-e);
    }
    auto arg = [](int k) {
        return k == 1 ? std::string("λ") : std::to_string(k) + "λ";
    };
    std::string s;
    if (constant != 0) s += rat_coeff_str(constant, "", true);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it)
        s += rat_coeff_str(it->second, "cosh(" + arg(it->first) + ")", s.empty());
    for (auto it = sh.rbegin(); it != sh.rend(); ++it)
        s += rat_coeff_str(it->second, "sinh(" + arg(it->first) + ")", s.empty());
    return s.empty() ? "0" : s;
}

XLaurent x_pow(int k) { return XLaurent::monomial(k, Rat(1)); }

XLaurent sinh_x(int k) {
    return (x_pow(k) - x_pow(-k)).scale(rat(1, 2));
}

XLaurent cosh_x(int k) {
    return (x_pow(k) + x_pow(-k)).scale(rat(1, 2));
}

// ---------------------------------------------------------------------------

SinProd SinProd::factor(int k, int mult) {
    if (k <= 0) throw std::invalid_argument("sin factor index must be positive");
    SinProd r;
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    if (mult > 0) r.f[k] = mult;
    return r;
}

SinProd SinProd::lcm(const SinProd& a, const SinProd& b) {
    SinProd r = a;
    for (auto [k, m] : b.f) {
        auto& slot = r.f[k];
        slot = std::max(slot, m);
    }
    return r;
}

SinProd SinProd::mul(const SinProd& o) const {
    SinProd r = *this;
    for (auto [k, m] : o.f) r.f[k] += m;
    return r;
}

SinProd SinProd::quotient(const SinProd& o) const {
    SinProd r = *this;
    for (auto [k, m] : o.f) {
        auto it = r.f.find(k);
        if (it == r.f.end() || it->second < m)
            throw std::invalid_argument("sin-product does not divide");
        it->second -= m;
        if (it->second == 0) r.f.erase(it);
    }
    return r;
}

ULaurent SinProd::expand() const {
    static std::mutex mu;
    static std::map<std::map<int, int>, ULaurent> memo;
    {
        std::lock_guard lk(mu);
        if (auto it = memo.find(f); it != memo.end()) return it->second;
    }
    ULaurent r = ULaurent::one();
    for (auto [k, m] : f)
        for (int t = 0; t < m; ++t) r = r * two_sin_half(k);
    {
        std::lock_guard lk(mu);
        memo.emplace(f, r);
    }
    return r;
}

std::string SinProd::str() const {
    if (f.empty()) return "1";
    auto arg = [](int k) {
        if (k == 1) return std::string("λ/2");
        if (k % 2 == 0) return k == 2 ? std::string("λ") : std::to_string(k / 2) + "λ";
        return std::to_string(k) + "λ/2";
    };
    std::string s;
    for (auto [k, m] : f) {
        if (!s.empty()) s += "*";
        std::string base = "2sin(" + arg(k) + ")";
        s += (m == 1) ? base : "(" + base + ")^" + std::to_string(m);
    }
    return s;
}

URat at_v_one(const UVRat& r) {
    return URat::of(r.num.at_v_one(), r.den);
}

UVRat uv_of(const URat& r) {
    return UVRat::of(UVLaurent::from_u(r.num), r.den);
}

std::map<int, URat> v_slices(const UVRat& r) {
    std::map<int, URat> out;
    for (auto& [m, num] : r.num.v_slices()) out.emplace(m, URat::of(num, r.den));
    return out;
}

// ---------------------------------------------------------------------------

LambdaSeries LambdaSeries::zero(int N) {
    LambdaSeries s;
    s.N = N;
    s.c.assign(N + 1, Rat(0));
    return s;
}

LambdaSeries LambdaSeries::one(int N) {
    auto s = zero(N);
    s.c[0] = 1;
    return s;
}

LambdaSeries LambdaSeries::operator+(const LambdaSeries& o) const {
    if (N != o.N) throw std::invalid_argument("order mismatch");
    LambdaSeries r = *this;
    for (int i = 0; i <= N; ++i) r.c[i] += o.c[i];
    return r;
}

LambdaSeries LambdaSeries::operator-(const LambdaSeries& o) const {
    if (N != o.N) throw std::invalid_argument("order mismatch");
    LambdaSeries r = *this;
    for (int i = 0; i <= N; ++i) r.c[i] -= o.c[i];
    return r;
}

LambdaSeries LambdaSeries::operator*(const LambdaSeries& o) const {
    if (N != o.N) throw std::invalid_argument("order mismatch");
    LambdaSeries r = zero(N);
    for (int i = 0; i <= N; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; i + j <= N; ++j) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
}

LambdaSeries LambdaSeries::scale(const Rat& q) const {
    LambdaSeries r = *this;
    for (auto& a : r.c) a *= q;
    return r;
}

LambdaSeries LambdaSeries::shift_down(int m) const {
    if (m < 0 || m > N) throw std::invalid_argument("bad shift");
    for (int i = 0; i < m; ++i)
        if (c[i] != 0)
            throw std::domain_error("division by lambda^" + std::to_string(m) +
                                    " needs vanishing low coefficients");
    LambdaSeries r = zero(N - m);
    for (int i = 0; i <= N - m; ++i) r.c[i] = c[i + m];
    return r;
}

std::string LambdaSeries::str() const {
    std::string s;
    for (int i = 0; i <= N; ++i) {
        if (c[i] == 0) continue;
        std::string mono = i == 0 ? "" : (i == 1 ? "λ" : "λ^" + std::to_string(i));
        s += rat_coeff_str(c[i], mono, s.empty());
    }
    return s.empty() ? "0" : s;
}

LambdaSeries x_to_lambda(const XLaurent& p, int N) {
    auto r = LambdaSeries::zero(N);
    for (const auto& [k, a] : p.c) {
        // e^{k lambda}: coefficient of lambda^j is k^j / j!
        Rat kp(1);
        for (int j = 0; j <= N; ++j) {
            r.c[j] += a * kp;
            kp = kp * Rat(k) / Rat(j + 1);
        }
    }
    return r;
}

LambdaSeries s_series(int k, int N) {
    auto r = LambdaSeries::zero(N);
    // sinh(k lambda/2)/(k lambda/2) = sum_j (k/2)^{2j} lambda^{2j} / (2j+1)!
    Rat term(1);
    for (int j = 0; 2 * j <= N; ++j) {
        r.c[2 * j] = term;
        term = term * rat(static_cast<long>(k) * k, 4) /
               Rat((2 * j + 2) * (2 * j + 3));
    }
    return r;
}

}  // namespace mvh
