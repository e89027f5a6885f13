#ifndef QWITT_QPOLY_HPP
#define QWITT_QPOLY_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace qwitt {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Int int_pow(const Int& base, unsigned long e);
Rat rat_pow(const Rat& base, unsigned long e);

// Dense univariate polynomial in q over the rationals.
// Trailing zero coefficients are always trimmed, so degree() is exact.
class QPoly {
public:
    QPoly() = default;
    QPoly(long c);
    explicit QPoly(const Int& c);
    explicit QPoly(const Rat& c);
    explicit QPoly(std::vector<Rat> coeffs);

    static QPoly q();                            // the variable
    static QPoly monomial(const Rat& c, int deg);
    // [n]_g = 1 + g + ... + g^{n-1}
    static QPoly bracket(int n, const QPoly& g);
    static QPoly bracket_q(int n) { return bracket(n, q()); }

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& coeff(int k) const;               // 0 outside range
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& leading() const;

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rat constant_value() const { return coeff(0); }
    // true when every coefficient lies in Z
    bool has_integer_coeffs() const;

    QPoly operator-() const;
    QPoly operator+(const QPoly& o) const;
    QPoly operator-(const QPoly& o) const;
    QPoly operator*(const QPoly& o) const;
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }
    bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const QPoly& o) const { return !(*this == o); }

    QPoly scaled(const Rat& c) const;
    QPoly pow(unsigned long e) const;
    QPoly monic() const;

    // Euclidean division over Q; divisor must be nonzero.
    static void divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem);
    static QPoly gcd(const QPoly& a, const QPoly& b); // monic (or 0)

    Rat eval(const Rat& x) const;
    QPoly compose(const QPoly& inner) const;     // this(inner(q))
    QPoly subst_q_pow(int n) const;              // q -> q^n

    // Membership in Z[g]: the g-adic digits must be integer constants.
    // For constant g this degenerates to "is an integer constant".
    bool is_integer_poly_in(const QPoly& g) const;

    std::string to_string() const;

private:
    void trim();
    std::vector<Rat> coeffs_; // coeffs_[k] is the coefficient of q^k
};

QPoly operator*(const Rat& c, const QPoly& p);

} // namespace qwitt

#endif
