#include "qwitt/series.hpp"

#include <sstream>

#include "qwitt/errors.hpp"

namespace qwitt {

Series::Series(RingPtr ring, int order) : ring_(std::move(ring)), order_(order) {
    if (order_ < 0) throw Error("InvalidArgument", "series order must be >= 0");
    c_.assign(static_cast<size_t>(order_) + 1, ring_->zero());
}

Series::Series(RingPtr ring, int order, std::vector<RElem> coeffs)
    : Series(std::move(ring), order) {
    for (size_t k = 0; k < c_.size() && k < coeffs.size(); ++k)
        c_[k] = std::move(coeffs[k]);
}

Series Series::one(RingPtr ring, int order) {
    Series s(std::move(ring), order);
    s.c_[0] = s.ring_->one();
    return s;
}

Series Series::one_plus(RingPtr ring, int order, const RElem& c, int k) {
    Series s = one(ring, order);
    if (k <= order) s.c_[static_cast<size_t>(k)] = s.ring_->add(s.c_[static_cast<size_t>(k)], c);
    return s;
}

void Series::check_compatible(const Series& o) const {
    if (!ring_->same(*o.ring_))
        throw RingMismatch("series over " + ring_->name() + " and " +
                           o.ring_->name());
    if (order_ != o.order_)
        throw RingMismatch("series of different truncation orders");
}

Series Series::operator+(const Series& o) const {
    check_compatible(o);
    Series r(ring_, order_);
    for (int k = 0; k <= order_; ++k)
        r.c_[static_cast<size_t>(k)] = ring_->add(coeff(k), o.coeff(k));
    return r;
}

Series Series::operator-(const Series& o) const {
    check_compatible(o);
    Series r(ring_, order_);
    for (int k = 0; k <= order_; ++k)
        r.c_[static_cast<size_t>(k)] = ring_->sub(coeff(k), o.coeff(k));
    return r;
}

Series Series::operator-() const {
    Series r(ring_, order_);
    for (int k = 0; k <= order_; ++k)
        r.c_[static_cast<size_t>(k)] = ring_->neg(coeff(k));
    return r;
}

Series Series::operator*(const Series& o) const {
    check_compatible(o);
    Series r(ring_, order_);
    for (int i = 0; i <= order_; ++i) {
        if (ring_->is_zero(coeff(i))) continue;
        for (int j = 0; i + j <= order_; ++j) {
            if (ring_->is_zero(o.coeff(j))) continue;
            size_t k = static_cast<size_t>(i + j);
            r.c_[k] = ring_->add(r.c_[k], ring_->mul(coeff(i), o.coeff(j)));
        }
    }
    return r;
}

bool Series::operator==(const Series& o) const {
    check_compatible(o);
    for (int k = 0; k <= order_; ++k)
        if (!ring_->eq(coeff(k), o.coeff(k))) return false;
    return true;
}

Series Series::scaled(const RElem& c) const {
    Series r(ring_, order_);
    for (int k = 0; k <= order_; ++k)
        r.c_[static_cast<size_t>(k)] = ring_->mul(coeff(k), c);
    return r;
}

Series Series::inverse() const {
    if (!ring_->is_unit(coeff(0)))
        throw NotInvertible("series constant term is not a unit");
    RElem u = ring_->inv(coeff(0));
    Series r(ring_, order_);
    r.c_[0] = u;
    for (int n = 1; n <= order_; ++n) {
        RElem acc = ring_->zero();
        for (int k = 1; k <= n; ++k)
            acc = ring_->add(acc, ring_->mul(coeff(k), r.coeff(n - k)));
        r.c_[static_cast<size_t>(n)] = ring_->neg(ring_->mul(u, acc));
    }
    return r;
}

Series Series::int_pow(long e) const {
    if (e < 0) return inverse().int_pow(-e);
    Series base(*this), r = one(ring_, order_);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return r;
}

RElem Series::rat_scalar(const Rat& r) const {
    std::optional<RElem> v = ring_->from_qrat(QRat(r));
    if (!v)
        throw RingLacksRationalDivision("ring " + ring_->name() +
                                        " cannot divide by integers");
    return *v;
}

Series Series::log() const {
    if (!ring_->eq(coeff(0), ring_->one()))
        throw ConstantTermNotOne("log needs constant term 1");
    if (!ring_->has_rational_division())
        throw RingLacksRationalDivision("log over " + ring_->name());
    // from s * L' = s': n*l_n = n*a_n - sum_{k=1}^{n-1} k*l_k*a_{n-k}
    Series l(ring_, order_);
    for (int n = 1; n <= order_; ++n) {
        RElem acc = ring_->mul(ring_->from_long(n), coeff(n));
        for (int k = 1; k < n; ++k)
            acc = ring_->sub(acc, ring_->mul(ring_->mul(ring_->from_long(k),
                                                        l.coeff(k)),
                                             coeff(n - k)));
        l.c_[static_cast<size_t>(n)] = ring_->mul(acc, rat_scalar(make_rat(1, n)));
    }
    return l;
}

Series Series::exp() const {
    if (!ring_->is_zero(coeff(0)))
        throw ConstantTermNotZero("exp needs constant term 0");
    if (!ring_->has_rational_division())
        throw RingLacksRationalDivision("exp over " + ring_->name());
    // from E' = s' * E: n*e_n = sum_{k=1}^{n} k*a_k*e_{n-k}
    Series e = one(ring_, order_);
    for (int n = 1; n <= order_; ++n) {
        RElem acc = ring_->zero();
        for (int k = 1; k <= n; ++k)
            acc = ring_->add(acc, ring_->mul(ring_->mul(ring_->from_long(k),
                                                        coeff(k)),
                                             e.coeff(n - k)));
        e.c_[static_cast<size_t>(n)] = ring_->mul(acc, rat_scalar(make_rat(1, n)));
    }
    return e;
}

std::string Series::to_string() const {
    std::ostringstream os;
    os << "[";
    for (int k = 0; k <= order_; ++k) {
        if (k) os << ", ";
        os << ring_->to_string(coeff(k));
    }
    os << "]";
    return os.str();
}

} // namespace qwitt
