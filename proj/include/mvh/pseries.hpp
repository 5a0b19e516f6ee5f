#pragma once

#include <algorithm>
#include <iterator>
#include <stdexcept>
#include <string>

#include "mvh/coeffring.hpp"
#include "mvh/partitions.hpp"
#include "mvh/report.hpp"

namespace mvh {

template <class R>
struct RingTraits;

template <>
struct RingTraits<Rat> {
    static Rat zero() { return Rat(0); }
    static Rat one() { return Rat(1); }
    static bool is_zero(const Rat& a) { return a == 0; }
    static Rat scale(const Rat& a, const Rat& q) { return a * q; }
    static std::string str(const Rat& a) { return rat_str(a); }
};

template <>
struct RingTraits<XLaurent> {
    static XLaurent zero() { return {}; }
    static XLaurent one() { return XLaurent::one(); }
    static bool is_zero(const XLaurent& a) { return a.is_zero(); }
    static XLaurent scale(const XLaurent& a, const Rat& q) { return a.scale(q); }
    static std::string str(const XLaurent& a) { return a.str(); }
};

template <>
struct RingTraits<ULaurent> {
    static ULaurent zero() { return {}; }
    static ULaurent one() { return ULaurent::one(); }
    static bool is_zero(const ULaurent& a) { return a.is_zero(); }
    static ULaurent scale(const ULaurent& a, const Rat& q) {
        return a.scale(GaussRat(q));
    }
    static std::string str(const ULaurent& a) { return a.str(); }
};

template <>
struct RingTraits<UVLaurent> {
    static UVLaurent zero() { return {}; }
    static UVLaurent one() { return UVLaurent::one(); }
    static bool is_zero(const UVLaurent& a) { return a.is_zero(); }
    static UVLaurent scale(const UVLaurent& a, const Rat& q) {
        return a.scale(GaussRat(q));
    }
    static std::string str(const UVLaurent& a) { return a.str(); }
};

template <>
struct RingTraits<URat> {
    static URat zero() { return URat::zero(); }
    static URat one() { return URat::one(); }
    static bool is_zero(const URat& a) { return a.is_zero(); }
    static URat scale(const URat& a, const Rat& q) { return a.scale(GaussRat(q)); }
    static std::string str(const URat& a) { return a.str(); }
};

template <>
struct RingTraits<UVRat> {
    static UVRat zero() { return UVRat::zero(); }
    static UVRat one() { return UVRat::one(); }
    static bool is_zero(const UVRat& a) { return a.is_zero(); }
    static UVRat scale(const UVRat& a, const Rat& q) { return a.scale(GaussRat(q)); }
    static std::string str(const UVRat& a) { return a.str(); }
};

// Formal power series in p_1, p_2, ... truncated at total degree D, sparse
// over partitions: the stored value at mu is the coefficient of
// p_mu = p_{mu_1} ... p_{mu_l}; the empty partition holds the constant term.
template <class R>
struct PSeries {
    int D = 0;
    std::map<Partition, R> c;

    static PSeries zero(int D) { return {D, {}}; }
    static PSeries constant(int D, R a) {
        PSeries s{D, {}};
        s.set(Partition(), std::move(a));
        return s;
    }
    static PSeries one(int D) { return constant(D, RingTraits<R>::one()); }
    static PSeries monomial(int D, const Partition& mu, R a) {
        if (mu.size() > D) return zero(D);
        PSeries s{D, {}};
        s.set(mu, std::move(a));
        return s;
    }

    R coeff(const Partition& mu) const {
        auto it = c.find(mu);
        return it == c.end() ? RingTraits<R>::zero() : it->second;
    }

    void set(const Partition& mu, R a) {
        if (RingTraits<R>::is_zero(a))
            c.erase(mu);
        else
            c.insert_or_assign(mu, std::move(a));
    }

    void accumulate(const Partition& mu, const R& a) {
        auto it = c.find(mu);
        if (it == c.end()) {
            if (!RingTraits<R>::is_zero(a)) c.emplace(mu, a);
        } else {
            it->second = it->second + a;
            if (RingTraits<R>::is_zero(it->second)) c.erase(it);
        }
    }

    PSeries operator+(const PSeries& o) const {
        check(o);
        PSeries r = *this;
        for (const auto& [mu, a] : o.c) r.accumulate(mu, a);
        return r;
    }

    PSeries operator-(const PSeries& o) const {
        check(o);
        PSeries r = *this;
        for (const auto& [mu, a] : o.c) r.accumulate(mu, -a);
        return r;
    }

    static Partition merge_parts(const Partition& a, const Partition& b) {
        std::vector<int> v;
        v.reserve(a.length() + b.length());
        std::merge(a.parts().begin(), a.parts().end(), b.parts().begin(),
                   b.parts().end(), std::back_inserter(v), std::greater<int>());
        return Partition(std::move(v));
    }

    PSeries operator*(const PSeries& o) const {
        check(o);
        PSeries r = zero(D);
        for (const auto& [mu, a] : c) {
            for (const auto& [nu, b] : o.c) {
                if (mu.size() + nu.size() > D) continue;
                r.accumulate(merge_parts(mu, nu), a * b);
            }
        }
        return r;
    }

    PSeries scale(const Rat& q) const {
        PSeries r = zero(D);
        for (const auto& [mu, a] : c) r.set(mu, RingTraits<R>::scale(a, q));
        return r;
    }

    PSeries scale_ring(const R& g) const {
        PSeries r = zero(D);
        for (const auto& [mu, a] : c) r.set(mu, a * g);
        return r;
    }

    // d/dp_k: p_mu -> m_k(mu) p_{mu without one k}
    PSeries derivative(int k) const {
        PSeries r = zero(D);
        for (const auto& [mu, a] : c) {
            auto m = mu.multiplicities();
            auto it = m.find(k);
            if (it == m.end()) continue;
            r.accumulate(mu.remove_part(k), RingTraits<R>::scale(a, Rat(it->second)));
        }
        return r;
    }

    // multiply by the monomial p_extra
    PSeries mul_monomial(const Partition& extra) const {
        PSeries r = zero(D);
        for (const auto& [mu, a] : c) {
            if (mu.size() + extra.size() > D) continue;
            r.accumulate(merge_parts(mu, extra), a);
        }
        return r;
    }

    bool operator==(const PSeries& o) const { return D == o.D && c == o.c; }

    std::string str() const {
        if (c.empty()) return "0";
        std::string s;
        for (const auto& [mu, a] : c) {
            if (!s.empty()) s += " + ";
            std::string coef = "[" + RingTraits<R>::str(a) + "]";
            s += mu.empty() ? coef : coef + "*p" + mu.str();
        }
        return s;
    }

private:
    void check(const PSeries& o) const {
        if (D != o.D) throw std::invalid_argument("truncation degree mismatch");
    }
};

// the cut operator (1/2) sum_{i,j} (i+j) p_i p_j dF/dp_{i+j}
template <class R>
PSeries<R> cut_operator(const PSeries<R>& F) {
    PSeries<R> out = PSeries<R>::zero(F.D);
    for (int s = 2; s <= F.D; ++s) {
        PSeries<R> G = F.derivative(s);
        if (G.c.empty()) continue;
        for (int i = 1; i < s; ++i) {
            Partition ij = Partition{std::max(i, s - i), std::min(i, s - i)};
            out = out + G.mul_monomial(ij).scale(rat(s, 2));
        }
    }
    return out;
}

// the join operator (1/2) sum_{i,j} i j p_{i+j} d2F/dp_i dp_j
template <class R>
PSeries<R> join_operator(const PSeries<R>& F) {
    PSeries<R> out = PSeries<R>::zero(F.D);
    for (int i = 1; i < F.D; ++i) {
        PSeries<R> Gi = F.derivative(i);
        if (Gi.c.empty()) continue;
        for (int j = 1; i + j <= F.D; ++j) {
            PSeries<R> G = Gi.derivative(j);
            if (G.c.empty()) continue;
            out = out + G.mul_monomial(Partition{i + j})
                            .scale(rat(static_cast<long>(i) * j, 2));
        }
    }
    return out;
}

// the quadratic companion (1/2) sum_{i,j} i j p_{i+j} (dF/dp_i)(dF/dp_j),
// which turns the disconnected cut-and-join flow into the connected one
template <class R>
PSeries<R> quad_operator(const PSeries<R>& F) {
    PSeries<R> out = PSeries<R>::zero(F.D);
    for (int i = 1; i < F.D; ++i) {
        PSeries<R> Gi = F.derivative(i);
        if (Gi.c.empty()) continue;
        for (int j = 1; i + j <= F.D; ++j) {
            PSeries<R> Gj = F.derivative(j);
            if (Gj.c.empty()) continue;
            out = out + (Gi * Gj).mul_monomial(Partition{i + j})
                            .scale(rat(static_cast<long>(i) * j, 2));
        }
    }
    return out;
}

template <class R>
PSeries<R> exp_p(const PSeries<R>& F) {
    if (!RingTraits<R>::is_zero(F.coeff(Partition())))
        throw std::domain_error("exp needs a vanishing constant term");
    PSeries<R> out = PSeries<R>::one(F.D);
    PSeries<R> pow = PSeries<R>::one(F.D);
    Rat fact(1);
    for (int n = 1; n <= F.D; ++n) {
        pow = pow * F;
        if (pow.c.empty()) break;
        fact *= n;
        out = out + pow.scale(1 / fact);
    }
    return out;
}

template <class R>
PSeries<R> log_p(const PSeries<R>& G) {
    R c0 = G.coeff(Partition());
    if (!(c0 == RingTraits<R>::one()))
        throw std::domain_error("log needs constant term 1");
    PSeries<R> A = G;
    A.set(Partition(), RingTraits<R>::zero());
    PSeries<R> out = PSeries<R>::zero(G.D);
    PSeries<R> pow = PSeries<R>::one(G.D);
    for (int n = 1; n <= G.D; ++n) {
        pow = pow * A;
        if (pow.c.empty()) break;
        out = out + pow.scale(rat(n % 2 == 1 ? 1 : -1, n));
    }
    return out;
}

// C^{l-1} p_d; checks the closed form
// sum over mu of size d, length l of (l-1)! d^{l-1} / prod m_j! p_mu
PSeries<Rat> cut_power(int d, int l);

// coefficient identity behind the cut-and-join equations: the class sum of
// transpositions acts on the nu-isotypic p-polynomial by f_nu(2)
VerificationReport central_character_action_check(const Partition& nu);

// (cut+join)(p_mu) agrees with the neighbor multiplicities, all |mu| <= maxd
VerificationReport verify_operator_neighbors(int maxd);

}  // namespace mvh
