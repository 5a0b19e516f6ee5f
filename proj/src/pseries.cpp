#include "mvh/pseries.hpp"

#include "mvh/characters.hpp"

namespace mvh {

PSeries<Rat> cut_power(int d, int l) {
    if (l < 1 || l > d) throw std::invalid_argument("need 1 <= l <= d");
    auto s = PSeries<Rat>::monomial(d, Partition{d}, Rat(1));
    for (int t = 1; t < l; ++t) s = cut_operator(s);

    auto expect = PSeries<Rat>::zero(d);
    Rat common = Rat(factorial_z(l - 1)) * Rat(pow_z(d, l - 1));
    for (const auto& mu : enumerate_partitions(d)) {
        if (mu.length() != l) continue;
        expect.set(mu, common / rat(aut_order(mu)));
    }
    if (!(s == expect))
        throw std::logic_error("iterated cut of p_" + std::to_string(d) +
                               " disagrees with its closed form at l=" +
                               std::to_string(l));
    return s;
}

VerificationReport central_character_action_check(const Partition& nu) {
    VerificationReport rep;
    rep.suite = "central-character action nu=" + nu.str();
    const int d = nu.size();
    auto S = PSeries<Rat>::zero(d);
    for (const auto& eta : enumerate_partitions(d))
        S.set(eta, rat(character(nu, eta)) / rat(z_order(eta)));
    auto lhs = S.scale(rat(kappa(nu), 2));
    auto rhs = cut_operator(S) + join_operator(S);
    bool pass = lhs == rhs;
    rep.add("f_nu(2) * sum chi_nu(mu)/z_mu p_mu = (cut+join) of the same", pass,
            pass ? "" : "lhs=" + lhs.str() + " rhs=" + rhs.str());
    return rep;
}

VerificationReport verify_operator_neighbors(int maxd) {
    VerificationReport rep;
    rep.suite = "operator action vs neighbor multiplicities, d<=" + std::to_string(maxd);
    for (int d = 1; d <= maxd; ++d) {
        bool all = true;
        std::string witness;
        for (const auto& mu : enumerate_partitions(d)) {
            auto applied = cut_operator(PSeries<Rat>::monomial(d, mu, Rat(1))) +
                           join_operator(PSeries<Rat>::monomial(d, mu, Rat(1)));
            auto expect = PSeries<Rat>::zero(d);
            if (d >= 2) {
                auto ns = cut_join_neighbors(mu);
                for (const auto& [p, m] : ns.joins) expect.accumulate(p, rat(m));
                for (const auto& [p, m] : ns.cuts) expect.accumulate(p, rat(m));
            }
            if (!(applied == expect)) {
                all = false;
                if (witness.empty())
                    witness = "mu=" + mu.str() + ": operators=" + applied.str() +
                              " neighbors=" + expect.str();
            }
        }
        rep.add("d=" + std::to_string(d), all, witness);
    }
    return rep;
}

}  // namespace mvh
