#include "qwitt/ring.hpp"

#include <map>
#include <mutex>

#include "qwitt/errors.hpp"
#include "qwitt/textio.hpp"

namespace qwitt {

namespace {

template <class T>
const T& as(const RElem& e, const std::string& ring) {
    const T* p = std::get_if<T>(&e);
    if (!p)
        throw RingMismatch("element does not belong to ring " + ring);
    return *p;
}

Int mod_reduce(const Int& x, const Int& k) {
    Int r;
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return r;
}

std::optional<Int> mod_inverse(const Int& x, const Int& k) {
    Int r;
    if (mpz_invert(r.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t()) == 0)
        return std::nullopt;
    return r;
}

} // namespace

RElem Ring::pow(const RElem& a, unsigned long e) const {
    RElem base = a, r = one();
    while (e) {
        if (e & 1) r = mul(r, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return r;
}

RElem Ring::psi(int n, const RElem& a) const {
    if (!has_psi_)
        throw NoPsiStructure("ring " + name() + " carries no Psi-operations");
    if (n < 1)
        throw Error("InvalidArgument", "psi exponent must be >= 1");
    if (n == 1) return a;
    return psi_impl(n, a);
}

std::optional<RElem> Ring::q_image() const {
    if (!q_algebra_) return std::nullopt;
    return from_qrat(QRat::q());
}

RingPtr Ring::extension() const {
    if (extension_name_.empty()) return nullptr;
    return make(extension_name_);
}

RElem Ring::embed(const RElem& a) const {
    if (extension_name_.empty())
        throw NotDivisible("ring " + name() + " has no rational extension");
    if (extension_name_ == name()) return a;
    if (const Int* z = std::get_if<Int>(&a)) {
        if (extension_name_ == "Q") return RElem(Rat(*z));
        return RElem(QRat(QPoly(*z)));
    }
    if (const QPoly* p = std::get_if<QPoly>(&a)) return RElem(QRat(*p));
    // already an extension element (psi-less adapters share the carrier)
    if (std::holds_alternative<Rat>(a) || std::holds_alternative<QRat>(a))
        return a;
    throw RingMismatch("cannot embed element of ring " + name());
}

RElem Ring::div_exact(const RElem& x, const Int& d) const {
    if (d == 0) throw NotDivisible("division by zero");
    if (!is_torsion_free() && !has_rational_extension())
        throw NotDivisible("ring " + name() +
                           " supports no exact integer division");
    RingPtr ext = extension();
    RElem q = ext->mul(embed(x), *ext->from_qrat(QRat(make_rat(1, d))));
    std::optional<RElem> back = contract(q);
    if (!back)
        throw NotDivisible(to_string(x) + " is not divisible by " +
                           d.get_str() + " in " + name());
    return *back;
}

RElem Ring::div_exact(const RElem& x, const RElem& d) const {
    RingPtr ext = extension();
    RElem de = embed(d);
    if (ext->is_zero(de)) throw NotDivisible("division by zero");
    RElem q = ext->mul(embed(x), ext->inv(de));
    std::optional<RElem> back = contract(q);
    if (!back)
        throw NotDivisible(to_string(x) + " is not divisible by " +
                           to_string(d) + " in " + name());
    return *back;
}

RElem Ring::parse(const std::string& text) const {
    QRat v = parse_qrat(text);
    std::optional<RElem> e = from_qrat(v);
    if (!e)
        throw ParseError("\"" + text + "\" does not denote an element of " +
                         name());
    return *e;
}

bool Ring::self_check(unsigned seed, int iterations) const {
    std::mt19937_64 rng(seed);
    const RElem zr = zero(), on = one();
    for (int it = 0; it < iterations; ++it) {
        RElem x = sample(rng), y = sample(rng), z = sample(rng);
        if (!eq(add(x, y), add(y, x))) return false;
        if (!eq(add(add(x, y), z), add(x, add(y, z)))) return false;
        if (!eq(add(x, zr), x)) return false;
        if (!eq(add(x, neg(x)), zr)) return false;
        if (!eq(mul(x, y), mul(y, x))) return false;
        if (!eq(mul(mul(x, y), z), mul(x, mul(y, z)))) return false;
        if (!eq(mul(x, on), x)) return false;
        if (!eq(mul(x, add(y, z)), add(mul(x, y), mul(x, z)))) return false;
        if (has_psi()) {
            if (!eq(psi(1, x), x)) return false;
            for (int n : {2, 3}) {
                if (!eq(psi(n, add(x, y)), add(psi(n, x), psi(n, y))))
                    return false;
                if (!eq(psi(n, mul(x, y)), mul(psi(n, x), psi(n, y))))
                    return false;
                if (!eq(psi(n, on), on)) return false;
            }
            if (!eq(psi(2, psi(3, x)), psi(6, x))) return false;
            if (!eq(psi(3, psi(2, x)), psi(6, x))) return false;
            if (is_q_algebra()) {
                RElem q = *q_image();
                for (int n : {2, 3, 5})
                    if (!eq(psi(n, q), pow(q, static_cast<unsigned long>(n))))
                        return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Instances
// ---------------------------------------------------------------------------

namespace {

class ZRing final : public Ring {
public:
    ZRing() {
        torsion_free_ = true;
        q_algebra_ = false;
        rational_division_ = false;
        extension_name_ = "Q";
    }
    std::string name() const override { return "Z"; }
    RElem zero() const override { return Int(0); }
    RElem one() const override { return Int(1); }
    RElem from_int(const Int& n) const override { return n; }
    RElem add(const RElem& a, const RElem& b) const override {
        return Int(as<Int>(a, "Z") + as<Int>(b, "Z"));
    }
    RElem sub(const RElem& a, const RElem& b) const override {
        return Int(as<Int>(a, "Z") - as<Int>(b, "Z"));
    }
    RElem mul(const RElem& a, const RElem& b) const override {
        return Int(as<Int>(a, "Z") * as<Int>(b, "Z"));
    }
    RElem neg(const RElem& a) const override { return Int(-as<Int>(a, "Z")); }
    bool eq(const RElem& a, const RElem& b) const override {
        return as<Int>(a, "Z") == as<Int>(b, "Z");
    }
    bool is_unit(const RElem& a) const override {
        const Int& z = as<Int>(a, "Z");
        return z == 1 || z == -1;
    }
    RElem inv(const RElem& a) const override {
        if (!is_unit(a)) throw NotInvertible(to_string(a) + " in Z");
        return a;
    }
    std::optional<RElem> contract(const RElem& ext) const override {
        const Rat& r = as<Rat>(ext, "Q");
        if (!is_integer(r)) return std::nullopt;
        return RElem(Int(r.get_num()));
    }
    std::optional<RElem> from_qrat(const QRat& v) const override {
        if (!v.is_poly() || !v.num().is_constant()) return std::nullopt;
        Rat c = v.num().constant_value();
        if (!is_integer(c)) return std::nullopt;
        return RElem(Int(c.get_num()));
    }
    std::string to_string(const RElem& a) const override {
        return as<Int>(a, "Z").get_str();
    }
    RElem sample(std::mt19937_64& rng) const override {
        std::uniform_int_distribution<long> d(-9, 9);
        return Int(d(rng));
    }

protected:
    RElem psi_impl(int, const RElem& a) const override { return a; }
};

class QRing final : public Ring {
public:
    QRing() {
        torsion_free_ = true;
        rational_division_ = true;
        extension_name_ = "Q";
    }
    std::string name() const override { return "Q"; }
    RElem zero() const override { return Rat(0); }
    RElem one() const override { return Rat(1); }
    RElem from_int(const Int& n) const override { return Rat(n); }
    RElem add(const RElem& a, const RElem& b) const override {
        return Rat(as<Rat>(a, "Q") + as<Rat>(b, "Q"));
    }
    RElem sub(const RElem& a, const RElem& b) const override {
        return Rat(as<Rat>(a, "Q") - as<Rat>(b, "Q"));
    }
    RElem mul(const RElem& a, const RElem& b) const override {
        return Rat(as<Rat>(a, "Q") * as<Rat>(b, "Q"));
    }
    RElem neg(const RElem& a) const override { return Rat(-as<Rat>(a, "Q")); }
    bool eq(const RElem& a, const RElem& b) const override {
        return as<Rat>(a, "Q") == as<Rat>(b, "Q");
    }
    bool is_unit(const RElem& a) const override { return as<Rat>(a, "Q") != 0; }
    RElem inv(const RElem& a) const override {
        const Rat& r = as<Rat>(a, "Q");
        if (r == 0) throw NotInvertible("0 in Q");
        return Rat(Rat(1) / r);
    }
    std::optional<RElem> contract(const RElem& ext) const override {
        return RElem(as<Rat>(ext, "Q"));
    }
    std::optional<RElem> from_qrat(const QRat& v) const override {
        if (!v.is_poly() || !v.num().is_constant()) return std::nullopt;
        return RElem(v.num().constant_value());
    }
    std::string to_string(const RElem& a) const override {
        return as<Rat>(a, "Q").get_str();
    }
    RElem sample(std::mt19937_64& rng) const override {
        std::uniform_int_distribution<long> n(-9, 9), d(1, 9);
        return make_rat(Int(n(rng)), Int(d(rng)));
    }

protected:
    RElem psi_impl(int, const RElem& a) const override { return a; }
};

class QqRing final : public Ring {
public:
    QqRing() {
        torsion_free_ = true;
        q_algebra_ = true;
        rational_division_ = true;
        extension_name_ = "Qq";
    }
    std::string name() const override { return "Qq"; }
    RElem zero() const override { return QRat(); }
    RElem one() const override { return QRat(1); }
    RElem from_int(const Int& n) const override { return QRat(QPoly(n)); }
    RElem add(const RElem& a, const RElem& b) const override {
        return as<QRat>(a, "Qq") + as<QRat>(b, "Qq");
    }
    RElem sub(const RElem& a, const RElem& b) const override {
        return as<QRat>(a, "Qq") - as<QRat>(b, "Qq");
    }
    RElem mul(const RElem& a, const RElem& b) const override {
        return as<QRat>(a, "Qq") * as<QRat>(b, "Qq");
    }
    RElem neg(const RElem& a) const override { return -as<QRat>(a, "Qq"); }
    bool eq(const RElem& a, const RElem& b) const override {
        return as<QRat>(a, "Qq") == as<QRat>(b, "Qq");
    }
    bool is_unit(const RElem& a) const override {
        return !as<QRat>(a, "Qq").is_zero();
    }
    RElem inv(const RElem& a) const override {
        const QRat& r = as<QRat>(a, "Qq");
        if (r.is_zero()) throw NotInvertible("0 in Q(q)");
        return r.inv();
    }
    std::optional<RElem> contract(const RElem& ext) const override {
        return RElem(as<QRat>(ext, "Qq"));
    }
    std::optional<RElem> from_qrat(const QRat& v) const override {
        return RElem(v);
    }
    std::string to_string(const RElem& a) const override {
        return as<QRat>(a, "Qq").to_string();
    }
    RElem sample(std::mt19937_64& rng) const override {
        std::uniform_int_distribution<long> c(-3, 3);
        std::vector<Rat> num{Rat(c(rng)), Rat(c(rng)), Rat(c(rng))};
        std::vector<Rat> den{Rat(c(rng)), Rat(c(rng))};
        QPoly d(den);
        if (d.is_zero()) d = QPoly(1);
        return QRat(QPoly(num), d);
    }

protected:
    RElem psi_impl(int n, const RElem& a) const override {
        return as<QRat>(a, "Qq").subst_q_pow(n);
    }
};

class ZqRing final : public Ring {
public:
    ZqRing() {
        torsion_free_ = true;
        q_algebra_ = true;
        extension_name_ = "Qq";
    }
    std::string name() const override { return "Zq"; }
    RElem zero() const override { return QPoly(); }
    RElem one() const override { return QPoly(1); }
    RElem from_int(const Int& n) const override { return QPoly(n); }
    RElem add(const RElem& a, const RElem& b) const override {
        return as<QPoly>(a, "Zq") + as<QPoly>(b, "Zq");
    }
    RElem sub(const RElem& a, const RElem& b) const override {
        return as<QPoly>(a, "Zq") - as<QPoly>(b, "Zq");
    }
    RElem mul(const RElem& a, const RElem& b) const override {
        return as<QPoly>(a, "Zq") * as<QPoly>(b, "Zq");
    }
    RElem neg(const RElem& a) const override { return -as<QPoly>(a, "Zq"); }
    bool eq(const RElem& a, const RElem& b) const override {
        return as<QPoly>(a, "Zq") == as<QPoly>(b, "Zq");
    }
    bool is_unit(const RElem& a) const override {
        const QPoly& p = as<QPoly>(a, "Zq");
        return p.is_constant() &&
               (p.constant_value() == 1 || p.constant_value() == -1);
    }
    RElem inv(const RElem& a) const override {
        if (!is_unit(a)) throw NotInvertible(to_string(a) + " in Z[q]");
        return a;
    }
    std::optional<RElem> contract(const RElem& ext) const override {
        const QRat& r = as<QRat>(ext, "Qq");
        if (!r.is_poly()) return std::nullopt;
        QPoly p = r.poly();
        if (!p.has_integer_coeffs()) return std::nullopt;
        return RElem(p);
    }
    std::optional<RElem> from_qrat(const QRat& v) const override {
        if (!v.is_poly() || !v.num().has_integer_coeffs()) return std::nullopt;
        return RElem(v.poly());
    }
    std::string to_string(const RElem& a) const override {
        return as<QPoly>(a, "Zq").to_string();
    }
    RElem sample(std::mt19937_64& rng) const override {
        std::uniform_int_distribution<long> c(-3, 3);
        return QPoly(std::vector<Rat>{Rat(c(rng)), Rat(c(rng)), Rat(c(rng))});
    }

protected:
    RElem psi_impl(int n, const RElem& a) const override {
        return as<QPoly>(a, "Zq").subst_q_pow(n);
    }
};

class ZmodRing final : public Ring {
public:
    explicit ZmodRing(const Int& k) : k_(k) {
        torsion_free_ = false;
        q_algebra_ = false;
        rational_division_ = false;
        // no rational extension: the universal-polynomial path is forced
    }
    std::string name() const override { return "Zmod:" + k_.get_str(); }
    RElem zero() const override { return Int(0); }
    RElem one() const override { return mod_reduce(Int(1), k_); }
    RElem from_int(const Int& n) const override { return mod_reduce(n, k_); }
    RElem add(const RElem& a, const RElem& b) const override {
        return mod_reduce(Int(as<Int>(a, name()) + as<Int>(b, name())), k_);
    }
    RElem sub(const RElem& a, const RElem& b) const override {
        return mod_reduce(Int(as<Int>(a, name()) - as<Int>(b, name())), k_);
    }
    RElem mul(const RElem& a, const RElem& b) const override {
        return mod_reduce(Int(as<Int>(a, name()) * as<Int>(b, name())), k_);
    }
    RElem neg(const RElem& a) const override {
        return mod_reduce(Int(-as<Int>(a, name())), k_);
    }
    bool eq(const RElem& a, const RElem& b) const override {
        return as<Int>(a, name()) == as<Int>(b, name());
    }
    bool is_unit(const RElem& a) const override {
        return mod_inverse(as<Int>(a, name()), k_).has_value();
    }
    RElem inv(const RElem& a) const override {
        std::optional<Int> r = mod_inverse(as<Int>(a, name()), k_);
        if (!r) throw NotInvertible(to_string(a) + " in " + name());
        return *r;
    }
    std::optional<RElem> contract(const RElem&) const override {
        return std::nullopt; // no rational extension
    }
    std::optional<RElem> from_qrat(const QRat& v) const override {
        if (!v.is_poly() || !v.num().is_constant()) return std::nullopt;
        Rat c = v.num().constant_value();
        std::optional<Int> dinv = mod_inverse(c.get_den(), k_);
        if (!dinv) return std::nullopt;
        return RElem(mod_reduce(Int(c.get_num() * *dinv), k_));
    }
    std::string to_string(const RElem& a) const override {
        return as<Int>(a, name()).get_str();
    }
    RElem sample(std::mt19937_64& rng) const override {
        std::uniform_int_distribution<long> d(0, 1000000);
        return mod_reduce(Int(d(rng)), k_);
    }

protected:
    RElem psi_impl(int, const RElem& a) const override { return a; }

private:
    Int k_;
};

// Same carrier as `base` but without Psi-operations; used to exercise the
// NoPsiStructure error path.
class NoPsiRing final : public Ring {
public:
    explicit NoPsiRing(RingPtr base) : base_(std::move(base)) {
        has_psi_ = false;
        torsion_free_ = base_->is_torsion_free();
        q_algebra_ = base_->is_q_algebra();
        rational_division_ = base_->has_rational_division();
        if (base_->has_rational_extension())
            extension_name_ = base_->extension()->name();
    }
    std::string name() const override { return base_->name() + "#nopsi"; }
    RElem zero() const override { return base_->zero(); }
    RElem one() const override { return base_->one(); }
    RElem from_int(const Int& n) const override { return base_->from_int(n); }
    RElem add(const RElem& a, const RElem& b) const override { return base_->add(a, b); }
    RElem sub(const RElem& a, const RElem& b) const override { return base_->sub(a, b); }
    RElem mul(const RElem& a, const RElem& b) const override { return base_->mul(a, b); }
    RElem neg(const RElem& a) const override { return base_->neg(a); }
    bool eq(const RElem& a, const RElem& b) const override { return base_->eq(a, b); }
    bool is_unit(const RElem& a) const override { return base_->is_unit(a); }
    RElem inv(const RElem& a) const override { return base_->inv(a); }
    std::optional<RElem> contract(const RElem& e) const override { return base_->contract(e); }
    std::optional<RElem> from_qrat(const QRat& v) const override { return base_->from_qrat(v); }
    std::string to_string(const RElem& a) const override { return base_->to_string(a); }
    RElem sample(std::mt19937_64& rng) const override { return base_->sample(rng); }

protected:
    RElem psi_impl(int, const RElem& a) const override { return a; }

private:
    RingPtr base_;
};

std::mutex g_ring_mutex;
std::map<std::string, RingPtr>& ring_cache() {
    static std::map<std::string, RingPtr> cache;
    return cache;
}

} // namespace

RingPtr Ring::make(const std::string& selector) {
    std::lock_guard<std::mutex> lock(g_ring_mutex);
    auto& cache = ring_cache();
    auto it = cache.find(selector);
    if (it != cache.end()) return it->second;

    RingPtr r;
    if (selector == "Z") {
        r = std::make_shared<ZRing>();
    } else if (selector == "Q") {
        r = std::make_shared<QRing>();
    } else if (selector == "Qq") {
        r = std::make_shared<QqRing>();
    } else if (selector == "Zq") {
        r = std::make_shared<ZqRing>();
    } else if (selector.rfind("Zmod:", 0) == 0) {
        Int k;
        try {
            k = Int(selector.substr(5));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad modulus in ring selector \"" + selector + "\"");
        }
        if (k < 2) throw ParseError("modulus must be >= 2 in \"" + selector + "\"");
        r = std::make_shared<ZmodRing>(k);
    } else {
        throw ParseError("unknown ring selector \"" + selector + "\"");
    }
    cache.emplace(selector, r);
    return r;
}

RingPtr Ring::Z() { return make("Z"); }
RingPtr Ring::Q() { return make("Q"); }
RingPtr Ring::Zq() { return make("Zq"); }
RingPtr Ring::Qq() { return make("Qq"); }
RingPtr Ring::Zmod(const Int& k) { return make("Zmod:" + k.get_str()); }

RingPtr Ring::without_psi(const RingPtr& base) {
    return std::make_shared<NoPsiRing>(base);
}

} // namespace qwitt
