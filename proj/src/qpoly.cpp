#include "qwitt/qpoly.hpp"

#include <sstream>

#include "qwitt/errors.hpp"

namespace qwitt {

Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), e);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), e);
    return r; // canonical since base was canonical
}

QPoly::QPoly(long c) {
    if (c != 0) coeffs_.push_back(Rat(c));
}

QPoly::QPoly(const Int& c) {
    if (c != 0) coeffs_.push_back(Rat(c));
}

QPoly::QPoly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
}

QPoly::QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void QPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::q() { return monomial(Rat(1), 1); }

QPoly QPoly::monomial(const Rat& c, int deg) {
    QPoly p;
    if (c != 0) {
        p.coeffs_.assign(static_cast<size_t>(deg) + 1, Rat(0));
        p.coeffs_.back() = c;
    }
    return p;
}

QPoly QPoly::bracket(int n, const QPoly& g) {
    QPoly sum(1);
    QPoly gp(1);
    for (int i = 1; i < n; ++i) {
        gp *= g;
        sum += gp;
    }
    return sum;
}

const Rat& QPoly::coeff(int k) const {
    static const Rat zero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[static_cast<size_t>(k)];
}

const Rat& QPoly::leading() const {
    static const Rat zero(0);
    return coeffs_.empty() ? zero : coeffs_.back();
}

bool QPoly::has_integer_coeffs() const {
    for (const Rat& c : coeffs_)
        if (!is_integer(c)) return false;
    return true;
}

QPoly QPoly::operator-() const {
    QPoly r(*this);
    for (Rat& c : r.coeffs_) c = -c;
    return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
    QPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] += o.coeffs_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator-(const QPoly& o) const {
    QPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) r.coeffs_[i] -= o.coeffs_[i];
    r.trim();
    return r;
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    QPoly r;
    r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) {
            if (o.coeffs_[j] == 0) continue;
            r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
        }
    }
    r.trim();
    return r;
}

QPoly QPoly::scaled(const Rat& c) const {
    if (c == 0) return QPoly();
    QPoly r(*this);
    for (Rat& x : r.coeffs_) x *= c;
    return r;
}

QPoly operator*(const Rat& c, const QPoly& p) { return p.scaled(c); }

QPoly QPoly::pow(unsigned long e) const {
    QPoly base(*this), r(1);
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

QPoly QPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(Rat(1) / leading());
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quot, QPoly& rem) {
    if (b.is_zero()) throw NotDivisible("polynomial division by zero");
    rem = a;
    quot = QPoly();
    if (a.degree() < b.degree()) return;
    quot.coeffs_.assign(static_cast<size_t>(a.degree() - b.degree()) + 1, Rat(0));
    const Rat lb = b.leading();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        int shift = rem.degree() - b.degree();
        Rat f = rem.leading() / lb;
        quot.coeffs_[static_cast<size_t>(shift)] = f;
        rem -= b * monomial(f, shift);
    }
    quot.trim();
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x.monic();
}

Rat QPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

QPoly QPoly::compose(const QPoly& inner) const {
    QPoly acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * inner + QPoly(coeffs_[i]);
    return acc;
}

QPoly QPoly::subst_q_pow(int n) const {
    if (is_zero()) return QPoly();
    QPoly r;
    r.coeffs_.assign(coeffs_.size() * static_cast<size_t>(n) + 1, Rat(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        r.coeffs_[i * static_cast<size_t>(n)] = coeffs_[i];
    r.trim();
    return r;
}

bool QPoly::is_integer_poly_in(const QPoly& g) const {
    if (g.degree() <= 0) {
        // Z[g] = Z for constant g with integer value.
        return is_constant() && is_integer(constant_value());
    }
    QPoly c = *this;
    while (!c.is_zero()) {
        QPoly u, digit;
        divmod(c, g, u, digit);
        if (!digit.is_constant() || !is_integer(digit.constant_value()))
            return false;
        c = u;
    }
    return true;
}

std::string QPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        const Rat& c = coeffs_[k];
        if (c == 0) continue;
        Rat a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        first = false;
        if (k == 0) {
            os << a.get_str();
        } else {
            if (a != 1) os << a.get_str() << "*";
            os << "q";
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

} // namespace qwitt
