#include "qwitt/mpoly.hpp"

#include <functional>
#include <sstream>

#include "qwitt/errors.hpp"

namespace qwitt {

bool MPoly::MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    uint64_t da = 0, db = 0;
    for (const auto& [v, e] : a) da += e;
    for (const auto& [v, e] : b) db += e;
    if (da != db) return da < db;
    return a < b; // lexicographic on (variable, exponent) pairs
}

MPoly::MPoly(const QPoly& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(const MVar& v) {
    MPoly p;
    p.terms_.emplace(Monomial{{v, 1}}, QPoly(1));
    return p;
}

void MPoly::add_term(const Monomial& m, const QPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r(*this);
    r += o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r(*this);
    r += -o;
    return r;
}

namespace {

MPoly::Monomial merge_monomials(const MPoly::Monomial& a, const MPoly::Monomial& b) {
    MPoly::Monomial m;
    m.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first == b[j].first) {
            m.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i;
            ++j;
        } else if (a[i].first < b[j].first) {
            m.push_back(a[i++]);
        } else {
            m.push_back(b[j++]);
        }
    }
    while (i < a.size()) m.push_back(a[i++]);
    while (j < b.size()) m.push_back(b[j++]);
    return m;
}

} // namespace

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(merge_monomials(ma, mb), ca * cb);
    return r;
}

MPoly MPoly::scaled(const QPoly& c) const {
    if (c.is_zero()) return MPoly();
    MPoly r;
    for (const auto& [m, cc] : terms_) r.terms_.emplace(m, cc * c);
    return r;
}

MPoly MPoly::scaled(const Rat& c) const { return scaled(QPoly(c)); }

MPoly MPoly::pow(unsigned long e) const {
    MPoly base(*this), r(QPoly(1));
    while (e) {
        if (e & 1) r *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return r;
}

bool MPoly::coefficients_integer_in(const QPoly& g) const {
    for (const auto& [m, c] : terms_)
        if (!c.is_integer_poly_in(g)) return false;
    return true;
}

RElem MPoly::evaluate(
    const Ring& ring,
    const std::function<std::optional<RElem>(const MVar&)>& bind,
    const RElem& g_image) const {
    RElem acc = ring.zero();
    for (const auto& [m, c] : terms_) {
        // coefficient: c evaluated at the deformation image, via Horner
        RElem cv = ring.zero();
        for (int k = c.degree(); k >= 0; --k) {
            cv = ring.mul(cv, g_image);
            const Rat& ck = c.coeff(k);
            if (ck != 0) {
                if (!is_integer(ck))
                    throw IntegralityViolation(
                        "non-integer coefficient in universal polynomial");
                cv = ring.add(cv, ring.from_int(Int(ck.get_num())));
            }
        }
        RElem term = cv;
        for (const auto& [v, e] : m) {
            std::optional<RElem> val = bind(v);
            if (!val)
                throw UnboundVariable("variable " + v.to_string() +
                                      " has no binding");
            term = ring.mul(term, ring.pow(*val, e));
        }
        acc = ring.add(acc, term);
    }
    return acc;
}

RElem mpoly_substitute(const MPoly& p, const Ring& ring,
                       const std::map<MVar, RElem>& bindings,
                       const RElem& g_image) {
    return p.evaluate(
        ring,
        [&](const MVar& v) -> std::optional<RElem> {
            auto it = bindings.find(v);
            if (it == bindings.end()) return std::nullopt;
            return it->second;
        },
        g_image);
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")";
        for (const auto& [v, e] : m) {
            os << "*" << v.to_string();
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

} // namespace qwitt
