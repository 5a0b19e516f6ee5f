#include "mvh/hurwitz.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "mvh/characters.hpp"

namespace mvh {

namespace {

std::string num(long long v) { return std::to_string(v); }

PSeries<XLaurent> lambda_derivative(const PSeries<XLaurent>& F) {
    PSeries<XLaurent> out = PSeries<XLaurent>::zero(F.D);
    for (const auto& [mu, a] : F.c) out.set(mu, a.lambda_derivative());
    return out;
}

std::string first_mismatch(const PSeries<XLaurent>& got, const PSeries<XLaurent>& want) {
    for (const auto& [mu, a] : got.c)
        if (!(want.coeff(mu) == a))
            return "p" + mu.str() + ": got " + a.str() + ", want " + want.coeff(mu).str();
    for (const auto& [mu, a] : want.c)
        if (!(got.coeff(mu) == a))
            return "p" + mu.str() + ": got " + got.coeff(mu).str() + ", want " + a.str();
    return "";
}

}  // namespace

Rat burnside_bullet(const HurwitzQuery& q) {
    if (q.d < 1) throw std::domain_error("degree must be positive");
    for (const auto& eta : q.profiles)
        if (eta.size() != q.d) throw std::invalid_argument("profile size mismatch");
    Rat dfac(factorial_z(q.d));
    Rat total(0);
    for (const auto& rho : enumerate_partitions(q.d)) {
        Rat dim = rat(dim_rep(rho));
        Rat term = rat_pow(dim / dfac, 2 - 2 * q.h);
        for (const auto& eta : q.profiles)
            term *= dfac / rat(z_order(eta)) * rat(character(rho, eta)) / dim;
        total += term;
    }
    return total;
}

XLaurent u_poly(int h, const Partition& eta) {
    int d = eta.size();
    Rat dfac(factorial_z(d));
    XLaurent out;
    for (const auto& rho : enumerate_partitions(d)) {
        Rat w = rat_pow(rat(dim_rep(rho)) / dfac, 2 - 2 * h)
                * rat(central_character(rho, eta));
        out = out + XLaurent::monomial(static_cast<int>(central_character_two(rho)), w);
    }
    return out;
}

PhiSeries phi_bullet(int h, int D) {
    if (D < 1) throw std::domain_error("truncation degree must be positive");
    PSeries<XLaurent> f = PSeries<XLaurent>::one(D);
    for (int d = 1; d <= D; ++d)
        for (const auto& eta : enumerate_partitions(d)) f.set(eta, u_poly(h, eta));
    return {h, std::move(f)};
}

PhiSeries phi_circ(int h, int D) {
    PhiSeries b = phi_bullet(h, D);
    return {h, log_p(b.f)};
}

long long branch_count(int g, int h, const Partition& eta) {
    return 2LL * g - 2 + eta.size() + eta.length() - 2LL * eta.size() * h;
}

Rat hurwitz_number(int g, int h, const Partition& eta, bool connected) {
    long long r = branch_count(g, h, eta);
    if (r < 0) throw std::domain_error("negative simple branch count: no such covers");
    XLaurent coeff =
        connected ? phi_circ(h, eta.size()).f.coeff(eta) : u_poly(h, eta);
    LambdaSeries s = x_to_lambda(coeff, static_cast<int>(r));
    return s.c[static_cast<size_t>(r)] * Rat(factorial_z(static_cast<int>(r)));
}

std::vector<XLaurent> simple_specialize(int h, int D) {
    if (D < 1) throw std::domain_error("truncation degree must be positive");
    std::vector<XLaurent> out(static_cast<size_t>(D) + 1);
    out[0] = XLaurent::one();
    for (int d = 1; d <= D; ++d) out[d] = u_poly(h, Partition::ones(d));
    return out;
}

std::map<Partition, XLaurent> evolve_cutjoin(int h, int d) {
    if (d < 1) throw std::domain_error("degree must be positive");
    const CharacterTable& T = char_table(d);
    const auto& parts = T.labels();
    int n = static_cast<int>(parts.size());
    Rat dfac(factorial_z(d));

    // lambda = 0 slice of the series, the ODE initial data
    std::vector<Rat> init(n);
    for (int e = 0; e < n; ++e) {
        Rat s(0);
        for (int r = 0; r < n; ++r)
            s += rat_pow(rat(dim_rep(parts[r])) / dfac, 2 - 2 * h)
                 * rat(central_character(parts[r], parts[e]));
        init[e] = s;
    }

    // Expand the initial data over the eigenvectors (chi_nu(eta)/z_eta)_eta,
    // whose eigenvalue under cut+join is f_nu(2); column orthogonality of
    // the character table makes the expansion a plain character sum.
    std::vector<Rat> c(n);
    for (int v = 0; v < n; ++v) {
        Rat s(0);
        for (int e = 0; e < n; ++e) s += rat(T.chi(v, e)) * init[e];
        c[v] = s;
    }

    std::map<Partition, XLaurent> out;
    for (int e = 0; e < n; ++e) {
        XLaurent x;
        for (int v = 0; v < n; ++v) {
            Rat w = c[v] * rat(T.chi(v, e)) / rat(z_order(parts[e]));
            if (w == 0) continue;
            x = x + XLaurent::monomial(
                        static_cast<int>(central_character_two(parts[v])), w);
        }
        out.emplace(parts[e], std::move(x));
    }
    return out;
}

VerificationReport verify_cutjoin_phi(int h, int D, int connected_D) {
    if (connected_D < 0) connected_D = D;
    VerificationReport rep;
    rep.suite = "phi-cutjoin";

    PhiSeries b = phi_bullet(h, D);
    PSeries<XLaurent> lhs = lambda_derivative(b.f);
    PSeries<XLaurent> rhs = cut_operator(b.f) + join_operator(b.f);
    rep.add("bullet/h=" + num(h) + "/D=" + num(D), lhs == rhs,
            lhs == rhs ? "" : first_mismatch(lhs, rhs));

    PhiSeries cn = phi_circ(h, connected_D);
    PSeries<XLaurent> clhs = lambda_derivative(cn.f);
    PSeries<XLaurent> crhs =
        cut_operator(cn.f) + join_operator(cn.f) + quad_operator(cn.f);
    rep.add("connected/h=" + num(h) + "/D=" + num(connected_D), clhs == crhs,
            clhs == crhs ? "" : first_mismatch(clhs, crhs));
    return rep;
}

VerificationReport verify_exp_log(int h, int D) {
    VerificationReport rep;
    rep.suite = "phi-conn";
    PhiSeries b = phi_bullet(h, D);
    PSeries<XLaurent> back = exp_p(phi_circ(h, D).f);
    rep.add("explog/h=" + num(h) + "/D=" + num(D), back == b.f,
            back == b.f ? "" : first_mismatch(back, b.f));
    return rep;
}

VerificationReport verify_parity(int h, int D) {
    VerificationReport rep;
    rep.suite = "phi-parity";
    PhiSeries b = phi_bullet(h, D);
    for (int d = 1; d <= D; ++d) {
        bool ok = true;
        std::string w;
        for (const auto& eta : enumerate_partitions(d)) {
            XLaurent U = b.f.coeff(eta);
            bool even = (eta.size() - eta.length()) % 2 == 0;
            if (even ? U.even_in_lambda() : U.odd_in_lambda()) continue;
            ok = false;
            w = "p" + eta.str() + " not " + (even ? "even: " : "odd: ") + U.str();
            break;
        }
        rep.add("mirror/h=" + num(h) + "/d=" + num(d), ok, w);
    }
    auto simple = simple_specialize(h, D);
    bool ok = true;
    std::string w;
    for (int d = 1; d <= D; ++d) {
        if (simple[d].even_in_lambda()) continue;
        ok = false;
        w = "degree " + num(d) + " not even: " + simple[d].str();
        break;
    }
    rep.add("simple/h=" + num(h) + "/D=" + num(D), ok, w);
    return rep;
}

VerificationReport verify_routes(int h, int max_d) {
    VerificationReport rep;
    rep.suite = "phi-routes";
    for (int d = 1; d <= max_d; ++d) {
        auto evolved = evolve_cutjoin(h, d);
        bool ok = true;
        std::string w;
        for (const auto& [eta, x] : evolved) {
            XLaurent direct = u_poly(h, eta);
            if (direct == x) continue;
            ok = false;
            w = "p" + eta.str() + ": evolved " + x.str() + ", direct " + direct.str();
            break;
        }
        rep.add("routes/h=" + num(h) + "/d=" + num(d), ok, w);
    }
    return rep;
}

VerificationReport verify_phi_golden() {
    VerificationReport rep;
    rep.suite = "phi-golden";

    auto cst = [](long long n, long long d) { return XLaurent::monomial(0, rat(n, d)); };

    struct Row {
        Partition eta;
        XLaurent want;
        std::string note;
    };

    const std::string p4_note =
        "note: published closed forms show sin(2 lambda) for sinh(2 lambda) and a "
        "plus sign on the 18 e^{2 lambda} term; the character sum fixes both";
    const std::string p22_note =
        "note: one published exponential form shows +9 e^{-2 lambda}; evenness in "
        "lambda forces -9";
    const std::string g1p3_note =
        "note: published log form shows 4 sinh(3 lambda) - 1; the disconnected "
        "coefficient and the flow force 4 cosh(3 lambda) - 1";
    const std::string g1p111_note =
        "note: one published line shows 2 cosh(lambda) + 1 for 2 cosh(3 lambda) + 1";

    std::vector<Row> g0_bullet = {
        {Partition{1}, XLaurent::one(), ""},
        {Partition{2}, sinh_x(1).scale(rat(1, 2)), ""},
        {Partition{1, 1}, cosh_x(1).scale(rat(1, 2)), ""},
        {Partition{3}, (cosh_x(3) - XLaurent::one()).scale(rat(1, 9)), ""},
        {Partition{2, 1}, sinh_x(3).scale(rat(1, 6)), ""},
        {Partition{1, 1, 1}, (cosh_x(3) + cst(2, 1)).scale(rat(1, 18)), ""},
        {Partition{4}, (sinh_x(6) - sinh_x(2).scale(rat(3))).scale(rat(1, 48)), p4_note},
        {Partition{3, 1}, (cosh_x(6) - XLaurent::one()).scale(rat(1, 36)), ""},
        {Partition{2, 2},
         (cosh_x(6) - cosh_x(2).scale(rat(3)) + cst(2, 1)).scale(rat(1, 96)), p22_note},
        {Partition{2, 1, 1},
         (sinh_x(6) + sinh_x(2).scale(rat(3))).scale(rat(1, 48)), ""},
        {Partition{1, 1, 1, 1},
         (cosh_x(6) + cosh_x(2).scale(rat(9)) + cst(2, 1)).scale(rat(1, 288)), ""},
    };

    std::vector<Row> g0_conn = {
        {Partition{1}, XLaurent::one(), ""},
        {Partition{2}, sinh_x(1).scale(rat(1, 2)), ""},
        {Partition{1, 1}, (cosh_x(1) - XLaurent::one()).scale(rat(1, 2)), ""},
        {Partition{3}, (cosh_x(3) - XLaurent::one()).scale(rat(1, 9)), ""},
        {Partition{2, 1}, sinh_x(3).scale(rat(1, 6)) - sinh_x(1).scale(rat(1, 2)), ""},
        {Partition{1, 1, 1},
         cosh_x(3).scale(rat(1, 18)) - cosh_x(1).scale(rat(1, 2)) + cst(4, 9), ""},
        {Partition{4}, (sinh_x(6) - sinh_x(2).scale(rat(3))).scale(rat(1, 48)), ""},
        {Partition{3, 1},
         cosh_x(6).scale(rat(1, 36)) - cosh_x(3).scale(rat(1, 9)) + cst(1, 12), ""},
        {Partition{2, 2},
         cosh_x(6).scale(rat(1, 96)) - cosh_x(2).scale(rat(3, 32)) + cst(1, 12), ""},
        {Partition{2, 1, 1},
         sinh_x(6).scale(rat(1, 48)) - sinh_x(2).scale(rat(1, 16))
             - sinh_x(3).scale(rat(1, 6)) + sinh_x(1).scale(rat(1, 2)), ""},
        {Partition{1, 1, 1, 1},
         cosh_x(6).scale(rat(1, 288)) - cosh_x(2).scale(rat(1, 32))
             - cosh_x(3).scale(rat(1, 18)) + cosh_x(1).scale(rat(1, 2)) - cst(5, 12),
         ""},
    };

    std::vector<Row> g1_bullet = {
        {Partition{1}, XLaurent::one(), ""},
        {Partition{2}, sinh_x(1).scale(rat(2)), ""},
        {Partition{1, 1}, cosh_x(1).scale(rat(2)), ""},
        {Partition{3}, cosh_x(3).scale(rat(4)) - XLaurent::one(), ""},
        {Partition{2, 1}, sinh_x(3).scale(rat(6)), ""},
        {Partition{1, 1, 1}, cosh_x(3).scale(rat(2)) + XLaurent::one(), g1p111_note},
    };

    std::vector<Row> g1_conn = {
        {Partition{1}, XLaurent::one(), ""},
        {Partition{2}, sinh_x(1).scale(rat(2)), ""},
        {Partition{1, 1}, cosh_x(1).scale(rat(2)) - cst(1, 2), ""},
        {Partition{3}, cosh_x(3).scale(rat(4)) - XLaurent::one(), g1p3_note},
        {Partition{2, 1}, sinh_x(3).scale(rat(6)) - sinh_x(1).scale(rat(2)), ""},
        {Partition{1, 1, 1},
         cosh_x(3).scale(rat(2)) - cosh_x(1).scale(rat(2)) + cst(4, 3), ""},
    };

    PhiSeries b0 = phi_bullet(0, 4);
    PhiSeries c0 = phi_circ(0, 4);
    PhiSeries b1 = phi_bullet(1, 3);
    PhiSeries c1 = phi_circ(1, 3);

    auto run = [&rep](const char* tag, const PSeries<XLaurent>& f,
                      const std::vector<Row>& rows) {
        for (const auto& r : rows) {
            XLaurent got = f.coeff(r.eta);
            bool ok = got == r.want;
            rep.add(std::string(tag) + "/p" + r.eta.str(), ok,
                    ok ? r.note : "got " + got.str() + ", want " + r.want.str());
        }
    };
    run("g0/bullet", b0.f, g0_bullet);
    run("g0/connected", c0.f, g0_conn);
    run("g1/bullet", b1.f, g1_bullet);
    run("g1/connected", c1.f, g1_conn);

    // lambda = 0 slice in genus 1, the initial vector of the degree <= 3 flow
    {
        std::vector<std::pair<Partition, Rat>> want = {
            {Partition{1}, rat(1)},    {Partition{2}, rat(0)},
            {Partition{1, 1}, rat(2)}, {Partition{3}, rat(3)},
            {Partition{2, 1}, rat(0)}, {Partition{1, 1, 1}, rat(3)},
        };
        bool ok = true;
        std::string w;
        for (const auto& [eta, v] : want) {
            Rat got = b1.f.coeff(eta).at_one();
            if (got == v) continue;
            ok = false;
            w = "p" + eta.str() + " at 0: got " + rat_str(got) + ", want " + rat_str(v);
            break;
        }
        rep.add("g1/initial", ok, w);
    }
    return rep;
}

LambdaSeries hodge_series(const Partition& mu, int order) {
    if (mu.empty()) throw std::domain_error("profile must be nonempty");
    int m = mu.size() + mu.length() - 2;
    XLaurent coeff = phi_circ(0, mu.size()).f.coeff(mu);
    Rat pre = rat(aut_order(mu));
    for (int i = 0; i < mu.length(); ++i) {
        int a = mu.part(i);
        pre *= rat(a) * rat(a) * Rat(factorial_z(a)) / Rat(pow_z(a, a));
    }
    return x_to_lambda(coeff, order + m).scale(pre).shift_down(m);
}

VerificationReport s_lambda_identities(int N) {
    if (N < 10) throw std::domain_error("order below 10 is not probative");
    VerificationReport rep;
    rep.suite = "s-identities";

    LambdaSeries S1 = s_series(1, N), S2 = s_series(2, N), S3 = s_series(3, N);
    struct Row {
        Partition mu;
        LambdaSeries want;
        std::string label;
    };
    std::vector<Row> rows = {
        {Partition{1}, LambdaSeries::one(N), "1"},
        {Partition{2}, S2, "S(2λ)"},
        {Partition{1, 1}, (S1 * S1).scale(rat(1, 2)), "S(λ)^2/2"},
        {Partition{3}, S3 * S3, "S(3λ)^2"},
        {Partition{2, 1}, (S2 * S2 * S2).scale(rat(4, 3)), "(4/3) S(2λ)^3"},
        {Partition{1, 1, 1},
         (S1 * S1 * S1 * S3 + S1 * S1 * S1 * S1).scale(rat(1, 2)),
         "(S(λ)^3 S(3λ) + S(λ)^4)/2"},
    };
    for (const auto& r : rows) {
        LambdaSeries got = hodge_series(r.mu, N);
        bool ok = got == r.want;
        rep.add("hodge/p" + r.mu.str() + "=" + r.label, ok,
                ok ? "" : "got " + got.str() + ", want " + r.want.str());
    }
    return rep;
}

namespace {

// Laurent polynomials in y = e^{lambda/2}, just for the survey solver
using YLaurent = std::map<int, Rat>;

void y_add(YLaurent& a, int e, const Rat& q) {
    auto [it, fresh] = a.emplace(e, q);
    if (fresh) return;
    it->second += q;
    if (it->second == 0) a.erase(it);
}

YLaurent y_mul(const YLaurent& a, const YLaurent& b) {
    YLaurent r;
    for (const auto& [e, p] : a)
        for (const auto& [f, q] : b) y_add(r, e + f, p * q);
    return r;
}

YLaurent y_sinh_half(int k) { return {{k, rat(1, 2)}, {-k, rat(-1, 2)}}; }

void gen_multisets(int m, int low, int high, std::vector<int>& cur,
                   std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == m) {
        int s = 0;
        for (int k : cur) s += k;
        if (s % 2 == 0) out.push_back(cur);
        return;
    }
    for (int k = low; k <= high; ++k) {
        cur.push_back(k);
        gen_multisets(m, k, high, cur, out);
        cur.pop_back();
    }
}

std::string s_monomial_str(const std::vector<int>& ks) {
    std::string s;
    for (size_t i = 0; i < ks.size();) {
        size_t j = i;
        while (j < ks.size() && ks[j] == ks[i]) ++j;
        if (!s.empty()) s += "*";
        s += "S(" + (ks[i] == 1 ? std::string() : std::to_string(ks[i])) + "λ)";
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

}  // namespace

VerificationReport s_poly_survey(int max_d) {
    VerificationReport rep;
    rep.suite = "s-survey";
    PhiSeries conn = phi_circ(0, max_d);

    for (int d = 1; d <= max_d; ++d) {
        for (const auto& eta : enumerate_partitions(d)) {
            int m = eta.size() + eta.length() - 2;
            Rat pre = rat(aut_order(eta));
            for (int i = 0; i < eta.length(); ++i) {
                int a = eta.part(i);
                pre *= rat(a) * rat(a) * Rat(factorial_z(a)) / Rat(pow_z(a, a));
            }
            YLaurent target;
            for (const auto& [e, q] : conn.f.coeff(eta).c) y_add(target, 2 * e, q * pre);

            std::string id = "spoly/p" + eta.str();
            if (m == 0) {
                bool one = target == YLaurent{{0, rat(1)}};
                rep.add(id, true, one ? "1" : "unexpected degree-0 target");
                continue;
            }

            // A lambda-free Laurent target forces a homogeneous degree-m
            // combination (lambda is transcendental over the e^{lambda/2}
            // Laurent field), so the scan below is complete for k <= d.
            std::vector<std::vector<int>> sets;
            std::vector<int> cur;
            gen_multisets(m, 1, d, cur, sets);

            std::vector<YLaurent> cols(sets.size());
            std::map<int, int> rowix;
            for (size_t t = 0; t < sets.size(); ++t) {
                YLaurent prod = {{0, rat(1)}};
                for (int k : sets[t]) prod = y_mul(prod, y_sinh_half(k));
                cols[t] = std::move(prod);
                for (const auto& [e, q] : cols[t]) rowix.emplace(e, 0);
            }
            for (const auto& [e, q] : target) rowix.emplace(e, 0);
            int nrows = 0;
            for (auto& [e, ix] : rowix) ix = nrows++;
            int ncols = static_cast<int>(sets.size());

            std::vector<std::vector<Rat>> A(nrows, std::vector<Rat>(ncols, Rat(0)));
            std::vector<Rat> rhs(nrows, Rat(0));
            for (int t = 0; t < ncols; ++t)
                for (const auto& [e, q] : cols[t]) A[rowix[e]][t] = q;
            for (const auto& [e, q] : target) rhs[rowix[e]] = q;

            // Gauss-Jordan over Rat; wide system, any particular solution will do
            std::vector<int> pivot_col;
            int row = 0;
            for (int col = 0; col < ncols && row < nrows; ++col) {
                int pr = -1;
                for (int r = row; r < nrows; ++r)
                    if (A[r][col] != 0) { pr = r; break; }
                if (pr < 0) continue;
                std::swap(A[pr], A[row]);
                std::swap(rhs[pr], rhs[row]);
                for (int r = 0; r < nrows; ++r) {
                    if (r == row || A[r][col] == 0) continue;
                    Rat f = A[r][col] / A[row][col];
                    for (int cc = col; cc < ncols; ++cc) A[r][cc] -= f * A[row][cc];
                    rhs[r] -= f * rhs[row];
                }
                pivot_col.push_back(col);
                ++row;
            }
            bool solvable = true;
            for (int r = row; r < nrows; ++r)
                if (rhs[r] != 0) { solvable = false; break; }

            if (!solvable) {
                rep.add(id, true,
                        "no polynomial over S(λ)..S(" + std::to_string(d) + "λ)");
                continue;
            }
            std::vector<Rat> a(ncols, Rat(0));
            for (int r = 0; r < row; ++r) a[pivot_col[r]] = rhs[r] / A[r][pivot_col[r]];
            std::string poly;
            for (int t = 0; t < ncols; ++t) {
                if (a[t] == 0) continue;
                Rat q = a[t];
                for (int k : sets[t]) q *= k;
                q /= Rat(pow_z(2, m));
                if (!poly.empty()) poly += " + ";
                poly += "(" + rat_str(q) + ")*" + s_monomial_str(sets[t]);
            }
            rep.add(id, true, poly.empty() ? "0" : poly);
        }
    }
    return rep;
}

}  // namespace mvh
