#ifndef QWITT_NECKLACE_HPP
#define QWITT_NECKLACE_HPP

#include "qwitt/witt.hpp"

namespace qwitt {

// Coordinate vector of the necklace-ring functor: componentwise addition,
// Psi-twisted multiplication. The context ring must carry Psi-operations.
struct NecklaceVector {
    WittContext ctx;
    std::vector<RElem> coords;

    const RElem& at(int n) const { return coords[static_cast<size_t>(n - 1)]; }
    RElem& at(int n) { return coords[static_cast<size_t>(n - 1)]; }
};

NecklaceVector make_necklace(const WittContext& ctx, std::vector<RElem> coords);
NecklaceVector necklace_zero(const WittContext& ctx);
bool necklace_eq(const NecklaceVector& a, const NecklaceVector& b);

// w_n = sum_{d|n} d (1 - g^{n/d}) Psi^{n/d}(a_d)
GhostVector neck_ghost(const NecklaceVector& a);

NecklaceVector neck_add(const NecklaceVector& a, const NecklaceVector& b);
NecklaceVector neck_neg(const NecklaceVector& a);
// the unique product making neck_ghost multiplicative (divides by n only)
NecklaceVector neck_mul(const NecklaceVector& a, const NecklaceVector& b);
// independent route through the structure constants of Prop 5.15 / 5.17
NecklaceVector neck_mul_via_constants(const NecklaceVector& a,
                                      const NecklaceVector& b);

// --- Moebius-like functions --------------------------------------------------

// mu_m: the inverse of the [.]_m-weighted divisor matrix zeta_m;
// mu_0 is the classical Moebius function.
Int mobius_m(const Int& m, int n);
// chain-weight form (normative definition, used as a cross-oracle)
Int mobius_m_chains(const Int& m, int n);
// classical mu, by squarefree sign
int mobius_classical(int n);
// polynomial analogue with the twisted chain weights of the g(q) case
QPoly mobius_hat(const QPoly& g, int n);

// inverse-relation witnesses: sum_{d|n} [n/d]_m mu_m(d) = delta_{n,1}
Int zeta_mu_convolution(const Int& m, int n);

// --- structure constants -------------------------------------------------------

// coefficient of Psi^{n/i}(x_i) Psi^{n/j}(y_j) in the n-th product coordinate
RElem struct_const(const WittContext& ctx, int n, int i, int j);
// the same value as an exact rational function (for printing/certification)
QRat struct_const_qrat(const Deformation& def, int n, int i, int j);

// --- inverse ghost -------------------------------------------------------------

// f_n(q): sum_{d|n} (1-g^{n/d}) psi^{n/d}(f_d) = delta_{n,1}
std::vector<QRat> f_coeffs(const QPoly& g, int trunc);
// eta(w)_n = (1/n) sum_{d|n} f_d(q) Psi^d(w_{n/d}); inverse of neck_ghost
NecklaceVector eta_inverse(const GhostVector& w);

// --- unity, transports, induction/restriction ----------------------------------

NecklaceVector neck_unity(const WittContext& ctx);
// universal unity coordinates over Q resp. Q(q)
std::vector<QRat> neck_unity_coordinates(const Deformation& def, int trunc);

NecklaceVector neck_transport_two_minus(const NecklaceVector& a);

NecklaceVector neck_induce(int r, const NecklaceVector& a);
NecklaceVector neck_restrict(int r, const NecklaceVector& a);
// Prop 6.4(c) closed form; integer deformation only
NecklaceVector neck_restrict_closed_form(int r, const NecklaceVector& a);

} // namespace qwitt

#endif
