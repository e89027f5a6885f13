#include "qwitt/qrat.hpp"

#include "qwitt/errors.hpp"

namespace qwitt {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw NotDivisible("rational function with zero denominator");
    normalize();
}

void QRat::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    if (den_.degree() > 0 && !num_.is_constant()) {
        QPoly g = QPoly::gcd(num_, den_);
        if (g.degree() > 0) {
            QPoly q, r;
            QPoly::divmod(num_, g, q, r);
            num_ = q;
            QPoly::divmod(den_, g, q, r);
            den_ = q;
        }
    }
    // make the denominator monic
    Rat lead = den_.leading();
    if (lead != 1) {
        Rat inv_lead = Rat(1) / lead;
        den_ = den_.scaled(inv_lead);
        num_ = num_.scaled(inv_lead);
    }
}

QRat QRat::operator-() const {
    QRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

QRat QRat::operator+(const QRat& o) const {
    if (den_.degree() == 0 && o.den_.degree() == 0) {
        // both denominators are monic constants, i.e. equal to 1
        QRat r;
        r.num_ = num_ + o.num_;
        return r;
    }
    return QRat(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QRat QRat::operator-(const QRat& o) const { return *this + (-o); }

QRat QRat::operator*(const QRat& o) const {
    if (den_.degree() == 0 && o.den_.degree() == 0) {
        QRat r;
        r.num_ = num_ * o.num_;
        return r;
    }
    return QRat(num_ * o.num_, den_ * o.den_);
}

QRat QRat::operator/(const QRat& o) const { return *this * o.inv(); }

QRat QRat::inv() const {
    if (is_zero()) throw NotDivisible("inverse of zero rational function");
    return QRat(den_, num_);
}

QRat QRat::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    QRat base(*this), r(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return r;
}

QRat QRat::subst_q_pow(int n) const {
    return QRat(num_.subst_q_pow(n), den_.subst_q_pow(n));
}

Rat QRat::eval(const Rat& x) const {
    Rat d = den_.eval(x);
    if (d == 0) throw NotDivisible("pole of rational function at q = " + x.get_str());
    return Rat(num_.eval(x) / d);
}

std::string QRat::to_string() const {
    if (is_poly()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

} // namespace qwitt
