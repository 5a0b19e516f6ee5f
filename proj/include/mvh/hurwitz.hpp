#pragma once

#include <map>
#include <vector>

#include "mvh/coeffring.hpp"
#include "mvh/partitions.hpp"
#include "mvh/pseries.hpp"
#include "mvh/report.hpp"

namespace mvh {

// Branched covers of a genus h base curve: degree d, one ramification
// profile per marked branch point.  Simple branch points are not listed;
// they enter through the lambda grading of the series below.
struct HurwitzQuery {
    int h = 0;
    int d = 1;
    std::vector<Partition> profiles;
};

// sum over rho |- d of (dim/d!)^{2-2h} prod_i |C_{eta^i}| chi_rho(eta^i)/dim,
// the automorphism-weighted count of covers with the given branching
Rat burnside_bullet(const HurwitzQuery& q);

// U_h^eta(lambda) = sum_rho (dim/d!)^{2-2h} e^{f_rho(2) lambda} f_rho(eta),
// the p_eta coefficient of the disconnected series, with x = e^lambda
XLaurent u_poly(int h, const Partition& eta);

// Generating series of almost simple covers truncated at p-degree D.  Every
// p_eta coefficient is even or odd in lambda according to |eta| - l(eta).
struct PhiSeries {
    int h = 0;
    PSeries<XLaurent> f;
};

PhiSeries phi_bullet(int h, int D);  // 1 + sum_eta U_h^eta(lambda) p_eta
PhiSeries phi_circ(int h, int D);    // its log: connected covers only

// number of simple branch points forced by Riemann-Hurwitz:
// 2g - 2 + |eta| + l(eta) - 2|eta|h
long long branch_count(int g, int h, const Partition& eta);

// r! times the lambda^r coefficient of the p_eta coefficient of the chosen
// series, r = branch_count; throws domain_error when r < 0 (no such covers)
Rat hurwitz_number(int g, int h, const Partition& eta, bool connected);

// covers with only simple branching: keeps eta = (1^d) and grades by degree;
// entry [d] is the coefficient of q^d, an even function of lambda
std::vector<XLaurent> simple_specialize(int h, int D);

// Solves the degree-d cut-and-join ODE system exactly from the lambda = 0
// values: the cut-and-join matrix is diagonal in the character basis with
// integer eigenvalues f_nu(2), so the flow stays inside XLaurent.  Agrees
// with u_poly(h, eta) for every eta |- d without ever calling it.
std::map<Partition, XLaurent> evolve_cutjoin(int h, int d);

// dPhi/dlambda = (cut+join)Phi for the disconnected series at truncation D,
// and the connected variant with the quadratic term at connected_D
// (default: same D)
VerificationReport verify_cutjoin_phi(int h, int D, int connected_D = -1);

// exp_p(phi_circ) reproduces phi_bullet at truncation D
VerificationReport verify_exp_log(int h, int D);

// mirror symmetry x <-> x^{-1} of every coefficient per |eta| - l(eta), and
// evenness of the simple specialization, through degree D
VerificationReport verify_parity(int h, int D);

// evolve_cutjoin against the character-sum route, all d <= max_d
VerificationReport verify_routes(int h, int max_d);

// frozen low degree tables: genus 0 through degree 4 and genus 1 through
// degree 3, in both disconnected and connected form.  Two discrepancies in
// circulating printed tables are noted as errata in the case witnesses.
VerificationReport verify_phi_golden();

// sum over g of prod mu_j^2 int_{Mbar_{g,l}} Lambda_g^v(1)/prod(1-mu_j psi_j)
// lambda^{2g}: the p_mu coefficient of phi_circ(0) under the standard
// single-Hurwitz normalization, as an exact Taylor series to the given order
LambdaSeries hodge_series(const Partition& mu, int order);

// the six closed hodge_series evaluations in terms of S(k lambda) =
// sinh(k lambda/2)/(k lambda/2), checked as series to order N (N >= 10)
VerificationReport s_lambda_identities(int N);

// Expresses hodge_series(eta) as a polynomial in the S(k lambda), k <= d,
// by exact linear algebra, for every eta |- d <= max_d.  Exploratory: cases
// always pass and the witness carries the found polynomial or the verdict
// that none exists on this generator range.
VerificationReport s_poly_survey(int max_d);

}  // namespace mvh
