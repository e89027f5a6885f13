#ifndef QWITT_LAMBDA_HPP
#define QWITT_LAMBDA_HPP

#include "qwitt/necklace.hpp"
#include "qwitt/series.hpp"
#include "qwitt/witt.hpp"

namespace qwitt {

// Element of the power-series presentation: a truncated series with
// constant term 1, tagged with the deformation context of its Witt preimage.
struct LambdaElement {
    WittContext ctx;
    Series series; // order == ctx.trunc, coeff(0) == 1
};

LambdaElement make_lambda(const WittContext& ctx, Series s);

// Theta: (a_n) -> prod_n 1/(1 - a_n t^n), truncated at order N
LambdaElement theta(const WittVector& a);
// inverse by factor peeling; exact
WittVector theta_inv(const LambdaElement& s);

// ring operations transported through Theta
LambdaElement lam_add(const LambdaElement& s, const LambdaElement& u);
LambdaElement lam_mul(const LambdaElement& s, const LambdaElement& u);

// Upsilon: coefficient of t^{n-1} is the n-th ghost component
GhostVector upsilon(const LambdaElement& s);
// cross-check route: formal d/dt log of prod (1-g a_n t^n)/(1-a_n t^n);
// needs rational division in the ring
GhostVector upsilon_via_log_derivative(const LambdaElement& s);

// Kim-Lee expansion: prod_n ((1-t^n)/(1-q t^n))^{a_n} = 1 + sum b_n t^n with
// every b_n certified to lie in Z[q] (IntegralityViolation otherwise).
std::vector<QPoly> kimlee_expand(const std::vector<long>& a, int trunc);

// The series presentation of a necklace vector in the classical (h = 0)
// chart: the unique series whose log-derivative integrates the necklace
// ghost, computed directly from the product formulas — the
// ((1-g t^n)/(1-t^n))^{a_n} form for Psi-fixed integer coordinates, the
// exp form otherwise (rationals required). Cross-oracle:
// theta(transport_to_h(tau_inv(a), 0)).
LambdaElement symmetric_product(const NecklaceVector& a);

} // namespace qwitt

#endif
