#ifndef QWITT_QRAT_HPP
#define QWITT_QRAT_HPP

#include <string>

#include "qwitt/qpoly.hpp"

namespace qwitt {

// Rational function in q over the rationals, kept in canonical form:
// gcd(num, den) = 1 and den monic. Equality is therefore structural.
class QRat {
public:
    QRat() : num_(), den_(1) {}
    QRat(long c) : num_(c), den_(1) {}
    explicit QRat(const Rat& c) : num_(c), den_(1) {}
    explicit QRat(QPoly num) : num_(std::move(num)), den_(1) {}
    QRat(QPoly num, QPoly den);

    static QRat q() { return QRat(QPoly::q()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.degree() == 0; }
    // valid only when is_poly()
    QPoly poly() const { return num_; }

    QRat operator-() const;
    QRat operator+(const QRat& o) const;
    QRat operator-(const QRat& o) const;
    QRat operator*(const QRat& o) const;
    QRat operator/(const QRat& o) const;
    QRat& operator+=(const QRat& o) { return *this = *this + o; }
    QRat& operator-=(const QRat& o) { return *this = *this - o; }
    QRat& operator*=(const QRat& o) { return *this = *this * o; }
    bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QRat& o) const { return !(*this == o); }

    QRat inv() const;
    QRat pow(long e) const;
    QRat subst_q_pow(int n) const; // q -> q^n
    Rat eval(const Rat& x) const;  // throws NotDivisible when den(x) = 0

    std::string to_string() const;

private:
    void normalize();
    QPoly num_, den_;
};

} // namespace qwitt

#endif
