#include "qwitt/symfun.hpp"

#include <sstream>

#include "qwitt/errors.hpp"

namespace qwitt {

namespace {

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

// Degrees beyond the alphabet size stay computable on the truncated
// alphabet; identities are only asserted in degrees <= vars. An empty
// alphabet is the one genuinely unusable input.
void check_degree(int vars, int n) {
    if (n < 1) throw Error("InvalidArgument", "degree must be >= 1");
    if (vars < 1)
        throw DegreeExceedsAlphabet("alphabet must contain a variable");
}

} // namespace

SymPoly::SymPoly(int vars, const QRat& c) : vars_(vars) {
    if (!c.is_zero()) terms_.emplace(Expo(static_cast<size_t>(vars), 0), c);
}

void SymPoly::add_term(const Expo& e, const QRat& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymPoly SymPoly::operator-() const {
    SymPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

SymPoly SymPoly::operator-(const SymPoly& o) const { return *this + (-o); }

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r(vars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            Expo e(ea);
            for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool SymPoly::operator==(const SymPoly& o) const {
    return vars_ == o.vars_ && terms_ == o.terms_;
}

SymPoly SymPoly::scaled(const QRat& c) const {
    SymPoly r(vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, cc] : terms_) r.terms_.emplace(e, cc * c);
    return r;
}

SymPoly SymPoly::pow(unsigned long e) const {
    SymPoly base(*this), r(vars_, QRat(1));
    while (e) {
        if (e & 1) r = r * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return r;
}

bool SymPoly::is_symmetric() const {
    for (int i = 0; i + 1 < vars_; ++i) {
        SymPoly swapped(vars_);
        for (const auto& [e, c] : terms_) {
            Expo s(e);
            std::swap(s[static_cast<size_t>(i)], s[static_cast<size_t>(i) + 1]);
            swapped.add_term(s, c);
        }
        if (!(swapped == *this)) return false;
    }
    return true;
}

SymPoly SymPoly::eval_q(const Rat& value) const {
    SymPoly r(vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, QRat(c.eval(value)));
    return r;
}

bool SymPoly::denominators_divide_one_minus_q_power(int bound) const {
    // canonical denominators are monic, so powers of (1-q) appear as (q-1)^j
    const QPoly q_minus_1 = QPoly::q() - QPoly(1);
    for (const auto& [e, c] : terms_) {
        QPoly den = c.den();
        int j = 0;
        while (den.degree() > 0) {
            QPoly quot, rem;
            QPoly::divmod(den, q_minus_1, quot, rem);
            if (!rem.is_zero()) return false;
            den = quot;
            if (++j > bound) return false;
        }
        if (!(den == QPoly(1))) return false;
    }
    return true;
}

bool SymPoly::has_polynomial_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_poly()) return false;
    return true;
}

std::string SymPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            os << "*x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bases
// ---------------------------------------------------------------------------

SymPoly power_sum(int vars, int n) {
    check_degree(vars, n);
    SymPoly p(vars);
    for (int i = 0; i < vars; ++i) {
        SymPoly::Expo e(static_cast<size_t>(vars), 0);
        e[static_cast<size_t>(i)] = static_cast<uint32_t>(n);
        p.add_term(e, QRat(1));
    }
    return p;
}

namespace {

void enumerate_monomials(int vars, int degree, int from, SymPoly::Expo& e,
                         SymPoly& out) {
    if (degree == 0) {
        out.add_term(e, QRat(1));
        return;
    }
    if (from >= vars) return;
    for (int take = degree; take >= 0; --take) {
        e[static_cast<size_t>(from)] = static_cast<uint32_t>(take);
        enumerate_monomials(vars, degree - take, from + 1, e, out);
    }
    e[static_cast<size_t>(from)] = 0;
}

} // namespace

SymPoly complete_h(int vars, int n) {
    check_degree(vars, n);
    SymPoly h(vars);
    SymPoly::Expo e(static_cast<size_t>(vars), 0);
    enumerate_monomials(vars, n, 0, e, h);
    return h;
}

namespace {

enum class DeformedBasis { U, V, QN };

// shared recursion: n * coef_n * b_n = p_n - sum_{d|n, d<n} d * w(n/d) * b_d^{n/d}
std::vector<SymPoly> basis_list(DeformedBasis kind, int vars, int n) {
    std::vector<SymPoly> b;
    const QPoly q = QPoly::q();
    for (int k = 1; k <= n; ++k) {
        SymPoly acc = power_sum(vars, k);
        for (int d : divisors(k)) {
            if (d == k) continue;
            QRat w;
            switch (kind) {
            case DeformedBasis::U: w = QRat(QPoly::bracket_q(k / d)); break;
            case DeformedBasis::V:
                w = QRat(QPoly(1) - q.pow(static_cast<unsigned long>(k / d)));
                break;
            case DeformedBasis::QN: w = QRat(1); break;
            }
            acc -= b[static_cast<size_t>(d - 1)]
                       .pow(static_cast<unsigned long>(k / d))
                       .scaled(w * QRat(Rat(d)));
        }
        QRat lead = (kind == DeformedBasis::V) ? QRat(QPoly(1) - q) : QRat(1);
        b.push_back(acc.scaled((QRat(Rat(k)) * lead).inv()));
    }
    return b;
}

} // namespace

SymPoly u_q(int vars, int n) {
    check_degree(vars, n);
    return basis_list(DeformedBasis::U, vars, n).back();
}

SymPoly v_q(int vars, int n) {
    check_degree(vars, n);
    return basis_list(DeformedBasis::V, vars, n).back();
}

SymPoly qn_basis(int vars, int n) {
    check_degree(vars, n);
    return basis_list(DeformedBasis::QN, vars, n).back();
}

SymPoly hq(int vars, int n) {
    check_degree(vars, n);
    std::vector<SymPoly> u = basis_list(DeformedBasis::U, vars, n);
    SymSeries prod = symser_one(vars, n);
    for (int j = 1; j <= n; ++j) {
        SymSeries factor =
            symser_one_plus(vars, n, -u[static_cast<size_t>(j - 1)], j);
        prod = symser_mul(prod, symser_inv(factor));
    }
    return prod[static_cast<size_t>(n)];
}

SymPoly gq(int vars, int n) {
    check_degree(vars, n);
    std::vector<SymPoly> v = basis_list(DeformedBasis::V, vars, n);
    SymSeries prod = symser_one(vars, n);
    for (int j = 1; j <= n; ++j) {
        SymSeries factor =
            symser_one_plus(vars, n, -v[static_cast<size_t>(j - 1)], j);
        prod = symser_mul(prod, symser_inv(factor));
    }
    return prod[static_cast<size_t>(n)];
}

// ---------------------------------------------------------------------------
// Series helpers
// ---------------------------------------------------------------------------

SymSeries symser_one(int vars, int order) {
    SymSeries s(static_cast<size_t>(order) + 1, SymPoly(vars));
    s[0] = SymPoly(vars, QRat(1));
    return s;
}

SymSeries symser_one_plus(int vars, int order, const SymPoly& c, int k) {
    SymSeries s = symser_one(vars, order);
    if (k <= order) s[static_cast<size_t>(k)] += c;
    return s;
}

SymSeries symser_mul(const SymSeries& a, const SymSeries& b) {
    int order = static_cast<int>(a.size()) - 1;
    int vars = a[0].vars();
    SymSeries r(a.size(), SymPoly(vars));
    for (int i = 0; i <= order; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j)
            r[static_cast<size_t>(i + j)] +=
                a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    return r;
}

SymSeries symser_inv(const SymSeries& a) {
    int order = static_cast<int>(a.size()) - 1;
    int vars = a[0].vars();
    SymPoly one(vars, QRat(1));
    if (!(a[0] == one))
        throw ConstantTermNotOne("symmetric series inverse needs constant term 1");
    SymSeries r(a.size(), SymPoly(vars));
    r[0] = one;
    for (int n = 1; n <= order; ++n) {
        SymPoly acc(vars);
        for (int k = 1; k <= n; ++k)
            acc += a[static_cast<size_t>(k)] * r[static_cast<size_t>(n - k)];
        r[static_cast<size_t>(n)] = -acc;
    }
    return r;
}

SymSeries symser_log(const SymSeries& a) {
    int order = static_cast<int>(a.size()) - 1;
    int vars = a[0].vars();
    if (!(a[0] == SymPoly(vars, QRat(1))))
        throw ConstantTermNotOne("symmetric series log needs constant term 1");
    SymSeries l(a.size(), SymPoly(vars));
    for (int n = 1; n <= order; ++n) {
        SymPoly acc = a[static_cast<size_t>(n)].scaled(QRat(Rat(n)));
        for (int k = 1; k < n; ++k)
            acc -= l[static_cast<size_t>(k)].scaled(QRat(Rat(k))) *
                   a[static_cast<size_t>(n - k)];
        l[static_cast<size_t>(n)] = acc.scaled(QRat(make_rat(1, n)));
    }
    return l;
}

SymSeries symser_exp(const SymSeries& a) {
    int order = static_cast<int>(a.size()) - 1;
    int vars = a[0].vars();
    if (!a[0].is_zero())
        throw ConstantTermNotZero("symmetric series exp needs constant term 0");
    SymSeries e = symser_one(vars, order);
    for (int n = 1; n <= order; ++n) {
        SymPoly acc(vars);
        for (int k = 1; k <= n; ++k)
            acc += a[static_cast<size_t>(k)].scaled(QRat(Rat(k))) *
                   e[static_cast<size_t>(n - k)];
        e[static_cast<size_t>(n)] = acc.scaled(QRat(make_rat(1, n)));
    }
    return e;
}

SymSeries symser_pow_int(const SymSeries& a, long e) {
    if (e < 0) return symser_pow_int(symser_inv(a), -e);
    SymSeries base(a), r = symser_one(a[0].vars(), static_cast<int>(a.size()) - 1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) r = symser_mul(r, base);
        k >>= 1;
        if (k) base = symser_mul(base, base);
    }
    return r;
}

SymSeries symser_H(int vars, int order) {
    SymSeries prod = symser_one(vars, order);
    for (int i = 0; i < vars; ++i) {
        SymPoly xi(vars);
        SymPoly::Expo e(static_cast<size_t>(vars), 0);
        e[static_cast<size_t>(i)] = 1;
        xi.add_term(e, QRat(1));
        prod = symser_mul(prod, symser_inv(symser_one_plus(vars, order, -xi, 1)));
    }
    return prod;
}

} // namespace qwitt
