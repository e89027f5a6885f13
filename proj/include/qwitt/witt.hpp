#ifndef QWITT_WITT_HPP
#define QWITT_WITT_HPP

#include <variant>
#include <vector>

#include "qwitt/mpoly.hpp"
#include "qwitt/ring.hpp"

namespace qwitt {

// Deformation parameter: a polynomial g(q) with integer coefficients (the
// functor over Z[q]-algebras) or a plain integer m (the specialization).
using Deformation = std::variant<QPoly, Int>;

Deformation deformation_poly(const QPoly& g);
Deformation deformation_int(const Int& m);

struct WittContext {
    WittContext(Deformation def, int trunc, RingPtr ring);

    Deformation def;
    int trunc; // N >= 1; coordinate indices run over 1..N
    RingPtr ring;

    bool is_polynomial() const { return std::holds_alternative<QPoly>(def); }
    const QPoly& g() const { return std::get<QPoly>(def); }
    const Int& m() const { return std::get<Int>(def); }

    // g(q) == 1 resp. m == 1 (ghost map not injective there)
    bool is_degenerate() const;

    // ring element of the deformation parameter
    RElem g_elem() const;
    // [k]_g resp. [k]_m as a ring element
    RElem bracket(int k) const;
    // 1 - g^j as a ring element
    RElem one_minus_g_pow(int j) const;
    // deformation of the strictly isomorphic partner functor (2-g resp. 2-m)
    Deformation two_minus() const;

    // same deformation and truncation over the rational extension ring
    WittContext extension_ctx() const;
    WittContext with_trunc(int n) const;
    WittContext with_deformation(Deformation d) const;

    bool same(const WittContext& o) const;
    std::string describe() const;
};

// Coordinate vector (a_1..a_N) subject to the Witt ring operations.
struct WittVector {
    WittContext ctx;
    std::vector<RElem> coords; // size N, index i holds a_{i+1}

    const RElem& at(int n) const { return coords[static_cast<size_t>(n - 1)]; }
    RElem& at(int n) { return coords[static_cast<size_t>(n - 1)]; }
};

// Componentwise ring A^N, the target of the ghost maps.
struct GhostVector {
    WittContext ctx;
    std::vector<RElem> coords;

    const RElem& at(int n) const { return coords[static_cast<size_t>(n - 1)]; }
    RElem& at(int n) { return coords[static_cast<size_t>(n - 1)]; }
};

WittVector make_witt(const WittContext& ctx, std::vector<RElem> coords);
WittVector witt_zero(const WittContext& ctx);

bool witt_eq(const WittVector& a, const WittVector& b);
bool ghost_eq(const GhostVector& a, const GhostVector& b);

// --- ghost maps ------------------------------------------------------------

// w_n = sum_{d|n} d (1 - g^{n/d}) a_d^{n/d}
GhostVector ghost(const WittVector& a);
// abelianized: w_n = sum_{d|n} d [n/d]_g a_d^{n/d}; stays nondegenerate at g=1
GhostVector ghost_ab(const WittVector& a);
// unique preimage under ghost on rings supporting the ghost path
WittVector unghost(const GhostVector& w);

GhostVector ghost_add(const GhostVector& a, const GhostVector& b);
GhostVector ghost_mul(const GhostVector& a, const GhostVector& b);
GhostVector ghost_neg(const GhostVector& a);

// --- ring operations ---------------------------------------------------------

enum class WittPath { Auto, Ghost, Polynomials };

WittVector witt_add(const WittVector& a, const WittVector& b,
                    WittPath path = WittPath::Auto);
WittVector witt_mul(const WittVector& a, const WittVector& b,
                    WittPath path = WittPath::Auto);
WittVector witt_neg(const WittVector& a, WittPath path = WittPath::Auto);
WittVector witt_sub(const WittVector& a, const WittVector& b,
                    WittPath path = WittPath::Auto);

// multiplicative identity; requires 1-g to be a unit in the ring
WittVector witt_unity(const WittContext& ctx);
// the universal unity coordinates E_n over Q resp. Q(q) (E_1 = 1/(1-g), ...)
std::vector<QRat> unity_coordinates(const Deformation& def, int trunc);

// --- universal polynomials ---------------------------------------------------

struct DefiningPolys {
    MPoly S, P, I;
};

// S_n, P_n, I_n with a symbolic deformation parameter; the coefficients are
// certified to be integer polynomials in it (IntegralityViolation otherwise).
// Results are cached per n; the cache is write-once-read-many.
const DefiningPolys& defining_polys(int n);

// Specialized to a concrete g: coefficients rewritten as polynomials in q
// and certified to lie in Z[g(q)].
DefiningPolys gen_defining_polys(int n, const QPoly& g);

// --- transports --------------------------------------------------------------

// strict isomorphism onto the 2-g (resp. 2-m) functor
WittVector transport_two_minus_g(const WittVector& a);
// strict transport onto h in {0,2}; integral by the transport lemma
WittVector transport_to_h(const WittVector& a, int h);

// --- induction / restriction -------------------------------------------------

// coordinate n of the result is a_{n/r} when r | n, else 0
WittVector induce(int r, const WittVector& a);
// ghost(restrict(r,a))_n = ghost(a)_{rn}; output truncation floor(N/r)
WittVector witt_restrict(int r, const WittVector& a);

} // namespace qwitt

#endif
