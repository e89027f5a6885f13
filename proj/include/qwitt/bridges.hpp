#ifndef QWITT_BRIDGES_HPP
#define QWITT_BRIDGES_HPP

#include "qwitt/necklace.hpp"
#include "qwitt/witt.hpp"

namespace qwitt {

// Necklace polynomial value M(x,n) = (1/n) sum_{d|n} mu(d) psi^d(x^{n/d});
// computed in the rational extension and certified integral. A failed
// certificate signals a ring violating the lambda-ring congruences.
RElem teich_classical(const Ring& ring, const RElem& x, int n);

// M^m(x,n) = (1/n) sum_{d|n} mu_m(d) [n/d]_m psi^d(x^{n/d})
RElem teich_m(const Ring& ring, const RElem& x, int n, const Int& m);

// M^{g}(x,n) via the defining recursion
//   sum_{d|n} d (1-g^{n/d}) Psi^{n/d}(M^{g}(x,d)) = (1-g^n) x^n,  g != 1
RElem teich_g(const Ring& ring, const RElem& x, int n, const QPoly& g);
// independent closed form through f_d(q)
RElem teich_g_closed_form(const Ring& ring, const RElem& x, int n, const QPoly& g);

// deformation dispatch used by tau
RElem teich(const WittContext& ctx, const RElem& x, int n);

// tau(a)_n = sum_{d|n} M(a_d, n/d): the strict isomorphism from the Witt
// presentation onto the necklace presentation over lambda-ring instances.
NecklaceVector tau(const WittVector& a);
WittVector tau_inv(const NecklaceVector& b);

} // namespace qwitt

#endif
