#pragma once

#include "mvh/coeffring.hpp"
#include "mvh/partitions.hpp"
#include "mvh/pseries.hpp"
#include "mvh/report.hpp"

namespace mvh {

// The sine weight attached to a partition, in its two closed forms.  Both
// return a quotient with a factored sine-product denominator; the empty
// partition gives 1.

// row form: prod_{a<b} sin((nu_a - nu_b + b - a) lambda/2) / sin((b - a) lambda/2)
// divided by prod over boxes (i, v) of 2 sin((v - i + l(nu)) lambda/2)
URat v_product(const Partition& nu);

// hook form: 1 / prod over boxes of 2 sin(h lambda/2), one factor 2 per box.
// That 2-power is the one matching v_product; see check_vhook.
URat v_hook(const Partition& nu);

// both forms agree for every |nu| <= max_d, empty partition included
VerificationReport check_vhook(int max_d);

// Generating series with coefficients rational in u and v.  The coefficient
// of p_mu is (1/z_mu) sum_nu chi_nu(mu) v^{kappa_nu/2} u^{-kappa_nu} V(nu),
// constant term 1.
struct MVSeries {
    int D = 0;
    PSeries<UVRat> f;
};

MVSeries r_bullet(int D);

// log of r_bullet
MVSeries r_connected(int D);

// The scaled tau-derivative D_v (v^m -> m v^m) of r_bullet equals cut+join
// applied to it, coefficient by coefficient; the connected series satisfies
// the same equation with the quadratic companion added.  connected_D < 0
// caps the connected check at min(D, 4).
VerificationReport check_cutjoin_mv(int D, int connected_D = -1);

// character-weighted hook sums: for every class rho of S_n,
//   sum_{nu |- n} chi_nu(rho) u^{-kappa_nu} v_hook(nu)
// collapses to i^{n - l(rho)} over the cycle sine product of rho
VerificationReport check_evidence(int n);

// v = 1 slice: the log of the specialized series carries single-row
// coefficients -i^{d+1} / (2d sin(d lambda/2)) and nothing else, through degree D
VerificationReport check_rinit(int D);

// v-exponent moments of the connected coefficient at p_mu: with c_m the
// v^m slice, sum_m m^k c_m vanishes for k < l-1 and at k = l-1 equals
// i^{d-1} (l-1)! d^{l-2} / (2 sin(d lambda/2) prod m_j!), d = |mu|, l = l(mu)
VerificationReport check_limit(const Partition& mu);

// check_limit swept over every nonempty mu with |mu| <= max_d
VerificationReport check_limit_all(int max_d);

// frozen degree <= 2 coefficients in u, v form; one circulating closed form
// carries a denominator misprint and the case note says so
VerificationReport check_golden_mv();

// exp of the connected series reproduces r_bullet; independently, each
// connected coefficient with |mu| <= tuple_D is re-derived from ordered
// tuple sums, sum_n (-1)^{n-1}/n sum over tuples with multiset union mu
VerificationReport check_conn(int D, int tuple_D);

}  // namespace mvh
