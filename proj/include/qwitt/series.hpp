#ifndef QWITT_SERIES_HPP
#define QWITT_SERIES_HPP

#include <vector>

#include "qwitt/ring.hpp"

namespace qwitt {

// Power series in t over a coefficient ring, truncated at a fixed order N:
// coefficients c_0..c_N of t^0..t^N. All operations truncate consistently.
// The ring handle travels with the value; mixing rings raises RingMismatch.
class Series {
public:
    Series(RingPtr ring, int order);
    Series(RingPtr ring, int order, std::vector<RElem> coeffs);

    static Series one(RingPtr ring, int order);
    // 1 + c*t^k truncated
    static Series one_plus(RingPtr ring, int order, const RElem& c, int k);

    const RingPtr& ring() const { return ring_; }
    int order() const { return order_; }
    const RElem& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
    void set_coeff(int k, const RElem& v) { c_[static_cast<size_t>(k)] = v; }

    Series operator+(const Series& o) const;
    Series operator-(const Series& o) const;
    Series operator*(const Series& o) const;
    Series operator-() const;
    bool operator==(const Series& o) const;
    bool operator!=(const Series& o) const { return !(*this == o); }

    Series scaled(const RElem& c) const;
    // multiplicative inverse; requires c_0 to be a unit (NotInvertible)
    Series inverse() const;
    // s^e with truncation; negative e through the inverse
    Series int_pow(long e) const;

    // log: constant term must be 1 and the ring must contain the rationals
    Series log() const;
    // exp: constant term must be 0, rationals required
    Series exp() const;

    std::string to_string() const;

private:
    void check_compatible(const Series& o) const;
    RElem rat_scalar(const Rat& r) const; // throws RingLacksRationalDivision

    RingPtr ring_;
    int order_;
    std::vector<RElem> c_;
};

} // namespace qwitt

#endif
