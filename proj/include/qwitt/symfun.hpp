#ifndef QWITT_SYMFUN_HPP
#define QWITT_SYMFUN_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "qwitt/qrat.hpp"

namespace qwitt {

// Symmetric polynomial in a finite alphabet x_1..x_k with rational-function
// coefficients in q. Asserting identities only in degrees <= k keeps the
// finite truncation faithful to the infinite-alphabet statements.
class SymPoly {
public:
    using Expo = std::vector<uint32_t>; // length k

    explicit SymPoly(int vars) : vars_(vars) {}
    SymPoly(int vars, const QRat& c);

    int vars() const { return vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Expo, QRat>& terms() const { return terms_; }

    void add_term(const Expo& e, const QRat& c);

    SymPoly operator-() const;
    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator-(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly& operator+=(const SymPoly& o) { return *this = *this + o; }
    SymPoly& operator-=(const SymPoly& o) { return *this = *this - o; }
    bool operator==(const SymPoly& o) const;
    bool operator!=(const SymPoly& o) const { return !(*this == o); }

    SymPoly scaled(const QRat& c) const;
    SymPoly pow(unsigned long e) const;

    // invariance under all adjacent-variable transpositions
    bool is_symmetric() const;
    // substitute a rational value for q in every coefficient
    SymPoly eval_q(const Rat& value) const;
    // true when every coefficient denominator is a power of (1-q) with
    // exponent <= bound
    bool denominators_divide_one_minus_q_power(int bound) const;
    // true when every coefficient is a polynomial in q
    bool has_polynomial_coeffs() const;

    std::string to_string() const;

private:
    int vars_;
    std::map<Expo, QRat> terms_;
};

// --- bases -------------------------------------------------------------------

SymPoly power_sum(int vars, int n);    // p_n
SymPoly complete_h(int vars, int n);   // h_n
// q-deformed bases of Eq. (4.2): sum d [n/d]_q u_d^{n/d} = p_n and
// sum d (1-q^{n/d}) v_d^{n/d} = p_n
SymPoly u_q(int vars, int n);
SymPoly v_q(int vars, int n);
// classical necklace-type basis: p_n = sum_{d|n} d q_d^{n/d}
SymPoly qn_basis(int vars, int n);
// coefficients of prod 1/(1-u_j t^j) resp. prod 1/(1-v_j t^j)
SymPoly hq(int vars, int n);
SymPoly gq(int vars, int n);

// --- series with SymPoly coefficients (helpers for the product identities) ----

using SymSeries = std::vector<SymPoly>; // index = power of t, size = order+1

SymSeries symser_one(int vars, int order);
SymSeries symser_mul(const SymSeries& a, const SymSeries& b);
SymSeries symser_inv(const SymSeries& a);
SymSeries symser_log(const SymSeries& a);
SymSeries symser_exp(const SymSeries& a);
SymSeries symser_pow_int(const SymSeries& a, long e);
// 1 + c t^k
SymSeries symser_one_plus(int vars, int order, const SymPoly& c, int k);
// H(X,t) = prod_i 1/(1 - x_i t), truncated
SymSeries symser_H(int vars, int order);

} // namespace qwitt

#endif
