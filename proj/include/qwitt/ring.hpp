#ifndef QWITT_RING_HPP
#define QWITT_RING_HPP

#include <memory>
#include <optional>
#include <random>
#include <string>
#include <variant>

#include "qwitt/qrat.hpp"

namespace qwitt {

// A ring element. Which alternative is live depends on the owning ring:
// Z and Zmod use Int, Q uses Rat, Zq uses QPoly (integer coefficients),
// Qq uses QRat. Elements are immutable values; the owning ring is tracked
// by the containers (contexts, series), not by the element itself.
using RElem = std::variant<Int, Rat, QPoly, QRat>;

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

// Commutative ring with unity, optional Psi-operations and the capability
// flags that select between the ghost path (rational extension available)
// and the universal-polynomial path.
class Ring {
public:
    virtual ~Ring() = default;

    // Selector string: "Z", "Q", "Zq", "Qq", "Zmod:<k>".
    virtual std::string name() const = 0;

    virtual RElem zero() const = 0;
    virtual RElem one() const = 0;
    virtual RElem from_int(const Int& n) const = 0;
    RElem from_long(long n) const { return from_int(Int(n)); }

    virtual RElem add(const RElem& a, const RElem& b) const = 0;
    virtual RElem sub(const RElem& a, const RElem& b) const = 0;
    virtual RElem mul(const RElem& a, const RElem& b) const = 0;
    virtual RElem neg(const RElem& a) const = 0;
    virtual bool eq(const RElem& a, const RElem& b) const = 0;
    bool is_zero(const RElem& a) const { return eq(a, zero()); }

    RElem pow(const RElem& a, unsigned long e) const;

    virtual bool is_unit(const RElem& a) const = 0;
    virtual RElem inv(const RElem& a) const = 0; // precondition: is_unit

    // --- Psi structure -------------------------------------------------
    bool has_psi() const { return has_psi_; }
    // Psi^n; identity on the trivial instances, q -> q^n on Z[q]-algebras.
    RElem psi(int n, const RElem& a) const;

    // --- capability flags ----------------------------------------------
    bool is_torsion_free() const { return torsion_free_; }
    bool is_q_algebra() const { return q_algebra_; }
    bool has_rational_extension() const { return !extension_name_.empty(); }
    bool has_rational_division() const { return rational_division_; }

    // The designated image of q (Z[q]-algebra instances only).
    std::optional<RElem> q_image() const;

    // --- rational extension --------------------------------------------
    // Extension ring where division by nonzero integers and by 1-g is
    // exact (Q for Z, Q(q) for Z[q]; Q and Q(q) are their own extensions).
    RingPtr extension() const;
    RElem embed(const RElem& a) const;                  // into extension()
    // Membership test: pull an extension element back, if it lies in the
    // image of this ring.
    virtual std::optional<RElem> contract(const RElem& ext) const = 0;

    // Interpret a universal constant from Q(q) in this ring, when possible
    // (e.g. integer constants in Z, polynomials with integer coefficients
    // in Z[q], constants with invertible denominator in Z/k).
    virtual std::optional<RElem> from_qrat(const QRat& v) const = 0;

    // y with d*y = x, computed through the rational extension and
    // certified by the membership test; throws NotDivisible otherwise.
    RElem div_exact(const RElem& x, const Int& d) const;
    RElem div_exact(const RElem& x, const RElem& d) const;

    // --- text grammar ----------------------------------------------------
    virtual std::string to_string(const RElem& a) const = 0;
    RElem parse(const std::string& text) const;

    // --- library-level self test -----------------------------------------
    // Randomized check of the commutative-ring axioms and, when has_psi,
    // of the Psi-ring axioms. Returns true when every sampled instance of
    // every axiom holds exactly.
    bool self_check(unsigned seed = 1, int iterations = 64) const;
    virtual RElem sample(std::mt19937_64& rng) const = 0;

    // --- factory ---------------------------------------------------------
    static RingPtr make(const std::string& selector);
    static RingPtr Z();
    static RingPtr Q();
    static RingPtr Zq();
    static RingPtr Qq();
    static RingPtr Zmod(const Int& k);
    // Trivial adapter used in tests: same carrier, has_psi() == false.
    static RingPtr without_psi(const RingPtr& base);

    bool same(const Ring& other) const { return name() == other.name(); }

protected:
    virtual RElem psi_impl(int n, const RElem& a) const = 0;

    bool has_psi_ = true;
    bool torsion_free_ = true;
    bool q_algebra_ = false;
    bool rational_division_ = false;
    // selector of the rational extension; empty = none, name() = itself
    std::string extension_name_;
};

} // namespace qwitt

#endif
