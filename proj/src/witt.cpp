#include "qwitt/witt.hpp"

#include <mutex>
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

// Consecutive powers of a fixed list of base elements; exponents are
// consumed in increasing order, so each new power is one multiplication.
class PowCache {
public:
    PowCache(const Ring& ring, const std::vector<RElem>& bases)
        : ring_(ring), pows_(bases.size()) {
        for (size_t i = 0; i < bases.size(); ++i)
            pows_[i] = {ring_.one(), bases[i]};
    }
    // bases are 1-indexed to match coordinate indices
    const RElem& get(int base_index, int e) {
        auto& p = pows_[static_cast<size_t>(base_index - 1)];
        while (static_cast<int>(p.size()) <= e)
            p.push_back(ring_.mul(p.back(), p[1]));
        return p[static_cast<size_t>(e)];
    }

private:
    const Ring& ring_;
    std::vector<std::vector<RElem>> pows_;
};

RElem int_scalar(const Ring& ring, const Rat& r) {
    std::optional<RElem> v = ring.from_qrat(QRat(r));
    if (!v)
        throw NotDivisible("ring " + ring.name() +
                           " cannot interpret the scalar " + r.get_str());
    return *v;
}

} // namespace

// ---------------------------------------------------------------------------
// WittContext
// ---------------------------------------------------------------------------

Deformation deformation_poly(const QPoly& g) { return Deformation(g); }
Deformation deformation_int(const Int& m) { return Deformation(m); }

WittContext::WittContext(Deformation d, int n, RingPtr r)
    : def(std::move(d)), trunc(n), ring(std::move(r)) {
    if (trunc < 1) throw Error("InvalidArgument", "truncation must be >= 1");
    if (is_polynomial()) {
        if (!g().has_integer_coeffs())
            throw Error("InvalidArgument",
                        "deformation polynomial must have integer coefficients");
        if (!ring->is_q_algebra())
            throw RingMismatch("polynomial deformation needs a Z[q]-algebra, got " +
                               ring->name());
    } else {
        if (ring->is_q_algebra())
            throw RingMismatch(
                "integer deformation is defined over plain rings, got " +
                ring->name());
    }
}

bool WittContext::is_degenerate() const {
    if (is_polynomial()) return g() == QPoly(1);
    return m() == 1;
}

RElem WittContext::g_elem() const {
    if (is_polynomial()) {
        std::optional<RElem> e = ring->from_qrat(QRat(g()));
        if (!e) throw RingMismatch("cannot interpret g(q) in " + ring->name());
        return *e;
    }
    return ring->from_int(m());
}

RElem WittContext::bracket(int k) const {
    if (is_polynomial()) {
        std::optional<RElem> e = ring->from_qrat(QRat(QPoly::bracket(k, g())));
        if (!e) throw RingMismatch("cannot interpret [k]_g in " + ring->name());
        return *e;
    }
    Int acc = 0, p = 1;
    for (int i = 0; i < k; ++i) {
        acc += p;
        p *= m();
    }
    return ring->from_int(acc);
}

RElem WittContext::one_minus_g_pow(int j) const {
    if (is_polynomial()) {
        QPoly v = QPoly(1) - g().pow(static_cast<unsigned long>(j));
        std::optional<RElem> e = ring->from_qrat(QRat(v));
        if (!e) throw RingMismatch("cannot interpret 1-g^j in " + ring->name());
        return *e;
    }
    return ring->from_int(Int(1) - int_pow(m(), static_cast<unsigned long>(j)));
}

Deformation WittContext::two_minus() const {
    if (is_polynomial()) return Deformation(QPoly(2) - g());
    return Deformation(Int(2 - m()));
}

WittContext WittContext::extension_ctx() const {
    RingPtr ext = ring->extension();
    if (!ext)
        throw NotDivisible("ring " + ring->name() +
                           " does not support the ghost path");
    return WittContext(def, trunc, ext);
}

WittContext WittContext::with_trunc(int n) const {
    return WittContext(def, n, ring);
}

WittContext WittContext::with_deformation(Deformation d) const {
    return WittContext(std::move(d), trunc, ring);
}

bool WittContext::same(const WittContext& o) const {
    if (trunc != o.trunc || !ring->same(*o.ring)) return false;
    if (is_polynomial() != o.is_polynomial()) return false;
    return is_polynomial() ? g() == o.g() : m() == o.m();
}

std::string WittContext::describe() const {
    std::ostringstream os;
    os << (is_polynomial() ? "g=" + g().to_string() : "m=" + m().get_str())
       << ", N=" << trunc << ", ring=" << ring->name();
    return os.str();
}

WittVector make_witt(const WittContext& ctx, std::vector<RElem> coords) {
    if (static_cast<int>(coords.size()) != ctx.trunc)
        throw Error("InvalidArgument", "coordinate count != truncation");
    return WittVector{ctx, std::move(coords)};
}

WittVector witt_zero(const WittContext& ctx) {
    return WittVector{ctx, std::vector<RElem>(static_cast<size_t>(ctx.trunc),
                                              ctx.ring->zero())};
}

bool witt_eq(const WittVector& a, const WittVector& b) {
    if (!a.ctx.same(b.ctx)) return false;
    for (int n = 1; n <= a.ctx.trunc; ++n)
        if (!a.ctx.ring->eq(a.at(n), b.at(n))) return false;
    return true;
}

bool ghost_eq(const GhostVector& a, const GhostVector& b) {
    if (!a.ctx.same(b.ctx)) return false;
    for (int n = 1; n <= a.ctx.trunc; ++n)
        if (!a.ctx.ring->eq(a.at(n), b.at(n))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Ghost maps
// ---------------------------------------------------------------------------

GhostVector ghost(const WittVector& a) {
    const Ring& R = *a.ctx.ring;
    const int N = a.ctx.trunc;
    PowCache pows(R, a.coords);
    GhostVector w{a.ctx, {}};
    w.coords.reserve(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) {
        RElem acc = R.zero();
        for (int d : divisors(n)) {
            RElem term = R.mul(R.from_long(d), a.ctx.one_minus_g_pow(n / d));
            term = R.mul(term, pows.get(d, n / d));
            acc = R.add(acc, term);
        }
        w.coords.push_back(acc);
    }
    return w;
}

GhostVector ghost_ab(const WittVector& a) {
    const Ring& R = *a.ctx.ring;
    const int N = a.ctx.trunc;
    PowCache pows(R, a.coords);
    GhostVector w{a.ctx, {}};
    w.coords.reserve(static_cast<size_t>(N));
    for (int n = 1; n <= N; ++n) {
        RElem acc = R.zero();
        for (int d : divisors(n)) {
            RElem term = R.mul(R.from_long(d), a.ctx.bracket(n / d));
            term = R.mul(term, pows.get(d, n / d));
            acc = R.add(acc, term);
        }
        w.coords.push_back(acc);
    }
    return w;
}

WittVector unghost(const GhostVector& w) {
    if (w.ctx.is_degenerate())
        throw DegenerateDeformation("ghost map is not injective at " +
                                    w.ctx.describe());
    WittContext ectx = w.ctx.extension_ctx();
    const Ring& E = *ectx.ring;
    const int N = w.ctx.trunc;

    std::vector<RElem> a;
    a.reserve(static_cast<size_t>(N));
    std::vector<std::vector<RElem>> apows(static_cast<size_t>(N));
    auto apow = [&](int d, int e) -> RElem {
        auto& p = apows[static_cast<size_t>(d - 1)];
        while (static_cast<int>(p.size()) <= e)
            p.push_back(p.size() == 0 ? E.one() : E.mul(p.back(), a[static_cast<size_t>(d - 1)]));
        return p[static_cast<size_t>(e)];
    };

    RElem inv_one_minus_g = E.inv(ectx.one_minus_g_pow(1));
    for (int n = 1; n <= N; ++n) {
        RElem acc = w.ctx.ring->embed(w.at(n));
        for (int d : divisors(n)) {
            if (d == n) continue;
            RElem term = E.mul(E.from_long(d), ectx.one_minus_g_pow(n / d));
            term = E.mul(term, apow(d, n / d));
            acc = E.sub(acc, term);
        }
        acc = E.mul(acc, int_scalar(E, make_rat(1, n)));
        acc = E.mul(acc, inv_one_minus_g);
        a.push_back(acc);
    }

    WittVector r = witt_zero(w.ctx);
    for (int n = 1; n <= N; ++n) {
        std::optional<RElem> back = w.ctx.ring->contract(a[static_cast<size_t>(n - 1)]);
        if (!back)
            throw NotDivisible("ghost vector is not in the image of the ghost map "
                               "(coordinate " + std::to_string(n) + ")");
        r.at(n) = *back;
    }
    return r;
}

GhostVector ghost_add(const GhostVector& a, const GhostVector& b) {
    if (!a.ctx.same(b.ctx)) throw ContextMismatch("ghost_add");
    GhostVector r{a.ctx, {}};
    for (int n = 1; n <= a.ctx.trunc; ++n)
        r.coords.push_back(a.ctx.ring->add(a.at(n), b.at(n)));
    return r;
}

GhostVector ghost_mul(const GhostVector& a, const GhostVector& b) {
    if (!a.ctx.same(b.ctx)) throw ContextMismatch("ghost_mul");
    GhostVector r{a.ctx, {}};
    for (int n = 1; n <= a.ctx.trunc; ++n)
        r.coords.push_back(a.ctx.ring->mul(a.at(n), b.at(n)));
    return r;
}

GhostVector ghost_neg(const GhostVector& a) {
    GhostVector r{a.ctx, {}};
    for (int n = 1; n <= a.ctx.trunc; ++n)
        r.coords.push_back(a.ctx.ring->neg(a.at(n)));
    return r;
}

// ---------------------------------------------------------------------------
// Ring operations
// ---------------------------------------------------------------------------

namespace {

enum class OpKind { Add, Mul, Neg };

// Solves n s_n = rhs_n - sum_{d|n, d<n} d [n/d] s_d^{n/d} in the rational
// extension and certifies the result back into the base ring. The [.]-form
// recursion divides by n only, so g = 1 stays fully supported.
WittVector ghost_path_op(OpKind kind, const WittVector& a, const WittVector* b) {
    const WittContext& ctx = a.ctx;
    WittContext ectx = ctx.extension_ctx();
    const Ring& E = *ectx.ring;
    const int N = ctx.trunc;

    std::vector<RElem> ea, eb;
    for (int n = 1; n <= N; ++n) ea.push_back(ctx.ring->embed(a.at(n)));
    if (b)
        for (int n = 1; n <= N; ++n) eb.push_back(ctx.ring->embed(b->at(n)));

    WittVector va{ectx, ea};
    GhostVector A = ghost_ab(va);
    GhostVector B = b ? ghost_ab(WittVector{ectx, eb}) : GhostVector{ectx, {}};
    RElem one_minus_g = ectx.one_minus_g_pow(1);

    std::vector<RElem> s;
    std::vector<std::vector<RElem>> spows(static_cast<size_t>(N));
    auto spow = [&](int d, int e) -> RElem {
        auto& p = spows[static_cast<size_t>(d - 1)];
        while (static_cast<int>(p.size()) <= e)
            p.push_back(p.size() == 0 ? E.one()
                                      : E.mul(p.back(), s[static_cast<size_t>(d - 1)]));
        return p[static_cast<size_t>(e)];
    };

    for (int n = 1; n <= N; ++n) {
        RElem rhs;
        switch (kind) {
        case OpKind::Add: rhs = E.add(A.at(n), B.at(n)); break;
        case OpKind::Mul: rhs = E.mul(one_minus_g, E.mul(A.at(n), B.at(n))); break;
        case OpKind::Neg: rhs = E.neg(A.at(n)); break;
        }
        for (int d : divisors(n)) {
            if (d == n) continue;
            RElem term = E.mul(E.from_long(d), ectx.bracket(n / d));
            term = E.mul(term, spow(d, n / d));
            rhs = E.sub(rhs, term);
        }
        s.push_back(E.mul(rhs, int_scalar(E, make_rat(1, n))));
    }

    WittVector r = witt_zero(ctx);
    for (int n = 1; n <= N; ++n) {
        std::optional<RElem> back = ctx.ring->contract(s[static_cast<size_t>(n - 1)]);
        if (!back)
            throw NotDivisible("universal integrality violated in coordinate " +
                               std::to_string(n) + " — implementation bug");
        r.at(n) = *back;
    }
    return r;
}

WittVector poly_path_op(OpKind kind, const WittVector& a, const WittVector* b) {
    const WittContext& ctx = a.ctx;
    const Ring& R = *ctx.ring;
    RElem g_image = ctx.g_elem();
    WittVector r = witt_zero(ctx);
    for (int n = 1; n <= ctx.trunc; ++n) {
        const DefiningPolys& dp = defining_polys(n);
        const MPoly* p = kind == OpKind::Add ? &dp.S
                        : kind == OpKind::Mul ? &dp.P
                                              : &dp.I;
        r.at(n) = p->evaluate(
            R,
            [&](const MVar& v) -> std::optional<RElem> {
                if (static_cast<int>(v.index) > ctx.trunc) return std::nullopt;
                if (v.family == 0) return a.at(static_cast<int>(v.index));
                if (!b) return std::nullopt;
                return b->at(static_cast<int>(v.index));
            },
            g_image);
    }
    return r;
}

WittVector binary_op(OpKind kind, const WittVector& a, const WittVector* b,
                     WittPath path) {
    if (b && !a.ctx.same(b->ctx))
        throw ContextMismatch("operands live in different Witt contexts: " +
                              a.ctx.describe() + " vs " + b->ctx.describe());
    if (path == WittPath::Auto)
        path = a.ctx.ring->has_rational_extension() ? WittPath::Ghost
                                                    : WittPath::Polynomials;
    return path == WittPath::Ghost ? ghost_path_op(kind, a, b)
                                   : poly_path_op(kind, a, b);
}

} // namespace

WittVector witt_add(const WittVector& a, const WittVector& b, WittPath path) {
    return binary_op(OpKind::Add, a, &b, path);
}

WittVector witt_mul(const WittVector& a, const WittVector& b, WittPath path) {
    return binary_op(OpKind::Mul, a, &b, path);
}

WittVector witt_neg(const WittVector& a, WittPath path) {
    return binary_op(OpKind::Neg, a, nullptr, path);
}

WittVector witt_sub(const WittVector& a, const WittVector& b, WittPath path) {
    return witt_add(a, witt_neg(b, path), path);
}

// ---------------------------------------------------------------------------
// Unity
// ---------------------------------------------------------------------------

std::vector<QRat> unity_coordinates(const Deformation& def, int trunc) {
    QRat g = std::holds_alternative<QPoly>(def)
                 ? QRat(std::get<QPoly>(def))
                 : QRat(Rat(std::get<Int>(def)));
    QRat one_minus_g = QRat(1) - g;
    if (one_minus_g.is_zero())
        throw DegenerateDeformation("unity is undefined at g = 1");
    std::vector<QRat> E;
    for (int n = 1; n <= trunc; ++n) {
        QRat acc(1);
        for (int d : divisors(n)) {
            if (d == n) continue;
            QRat term = QRat(Rat(d)) * (QRat(1) - g.pow(n / d)) *
                        E[static_cast<size_t>(d - 1)].pow(n / d);
            acc -= term;
        }
        acc = acc * QRat(make_rat(1, n)) * one_minus_g.inv();
        E.push_back(acc);
    }
    return E;
}

WittVector witt_unity(const WittContext& ctx) {
    RElem one_minus_g = ctx.one_minus_g_pow(1);
    if (!ctx.ring->is_unit(one_minus_g))
        throw NotUnital("1-g is not a unit in " + ctx.ring->name());
    std::vector<QRat> E = unity_coordinates(ctx.def, ctx.trunc);
    WittVector r = witt_zero(ctx);
    for (int n = 1; n <= ctx.trunc; ++n) {
        std::optional<RElem> e = ctx.ring->from_qrat(E[static_cast<size_t>(n - 1)]);
        if (!e)
            throw NotUnital("unity coordinate E_" + std::to_string(n) +
                            " does not lie in " + ctx.ring->name());
        r.at(n) = *e;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Universal polynomials
// ---------------------------------------------------------------------------

namespace {

// abelianized ghost of the generic vector (x_d) or (y_d) as an MPoly
MPoly generic_ghost_ab(int n, uint8_t family) {
    MPoly acc;
    for (int d : divisors(n)) {
        MPoly t = MPoly::variable(MVar{family, static_cast<uint32_t>(d)})
                      .pow(static_cast<unsigned long>(n / d));
        acc += t.scaled(QPoly(Rat(d)) * QPoly::bracket_q(n / d));
    }
    return acc;
}

std::mutex g_polys_mutex;
std::map<int, DefiningPolys>& polys_cache() {
    static std::map<int, DefiningPolys> cache;
    return cache;
}

} // namespace

const DefiningPolys& defining_polys(int n) {
    if (n < 1) throw Error("InvalidArgument", "defining_polys: n must be >= 1");
    std::lock_guard<std::mutex> lock(g_polys_mutex);
    auto& cache = polys_cache();
    for (int k = 1; k <= n; ++k) {
        if (cache.count(k)) continue;
        const QPoly G = QPoly::q(); // the symbolic deformation parameter
        MPoly AX = generic_ghost_ab(k, 0);
        MPoly AY = generic_ghost_ab(k, 1);
        MPoly s = AX + AY;
        MPoly p = (MPoly(QPoly(1) - G) * AX) * AY;
        MPoly i = -AX;
        for (int d : divisors(k)) {
            if (d == k) continue;
            QPoly c = QPoly(Rat(d)) * QPoly::bracket_q(k / d);
            const DefiningPolys& lower = cache.at(d);
            s -= lower.S.pow(static_cast<unsigned long>(k / d)).scaled(c);
            p -= lower.P.pow(static_cast<unsigned long>(k / d)).scaled(c);
            i -= lower.I.pow(static_cast<unsigned long>(k / d)).scaled(c);
        }
        Rat inv_k = make_rat(1, k);
        DefiningPolys dp{s.scaled(inv_k), p.scaled(inv_k), i.scaled(inv_k)};
        if (!dp.S.coefficients_integer_in(G) ||
            !dp.P.coefficients_integer_in(G) ||
            !dp.I.coefficients_integer_in(G))
            throw IntegralityViolation(
                "defining polynomials for n=" + std::to_string(k) +
                " fail the integrality certificate");
        cache.emplace(k, std::move(dp));
    }
    return cache.at(n);
}

DefiningPolys gen_defining_polys(int n, const QPoly& g) {
    const DefiningPolys& sym = defining_polys(n);
    auto specialize = [&](const MPoly& p) {
        MPoly r;
        for (const auto& [m, c] : p.terms()) {
            MPoly term;
            // rebuild term by term with composed coefficients
            MPoly mono(QPoly(1));
            for (const auto& [v, e] : m)
                mono *= MPoly::variable(v).pow(e);
            r += mono.scaled(c.compose(g));
        }
        return r;
    };
    DefiningPolys out{specialize(sym.S), specialize(sym.P), specialize(sym.I)};
    if (!out.S.coefficients_integer_in(g) || !out.P.coefficients_integer_in(g) ||
        !out.I.coefficients_integer_in(g))
        throw IntegralityViolation("specialized defining polynomials for n=" +
                                   std::to_string(n) +
                                   " fail the integrality certificate");
    return out;
}

// ---------------------------------------------------------------------------
// Transports
// ---------------------------------------------------------------------------

WittVector transport_two_minus_g(const WittVector& a) {
    const WittContext& ctx = a.ctx;
    if (ctx.is_degenerate())
        throw DegenerateDeformation("transport undefined at g = 1");
    WittContext tctx = ctx.with_deformation(ctx.two_minus());
    WittContext ectx = ctx.extension_ctx();
    WittContext etctx = tctx.extension_ctx();
    const Ring& E = *ectx.ring;
    const int N = ctx.trunc;

    std::vector<RElem> ea;
    for (int n = 1; n <= N; ++n) ea.push_back(ctx.ring->embed(a.at(n)));
    GhostVector W = ghost(WittVector{ectx, ea});

    RElem neg_inv = E.neg(E.inv(ectx.one_minus_g_pow(1)));
    std::vector<RElem> y;
    std::vector<std::vector<RElem>> ypows(static_cast<size_t>(N));
    auto ypow = [&](int d, int e) -> RElem {
        auto& p = ypows[static_cast<size_t>(d - 1)];
        while (static_cast<int>(p.size()) <= e)
            p.push_back(p.size() == 0 ? E.one()
                                      : E.mul(p.back(), y[static_cast<size_t>(d - 1)]));
        return p[static_cast<size_t>(e)];
    };

    for (int n = 1; n <= N; ++n) {
        RElem acc = W.at(n);
        for (int d : divisors(n)) {
            if (d == n) continue;
            RElem term = E.mul(E.from_long(d), etctx.one_minus_g_pow(n / d));
            term = E.mul(term, ypow(d, n / d));
            acc = E.sub(acc, term);
        }
        acc = E.mul(acc, int_scalar(E, make_rat(1, n)));
        acc = E.mul(acc, neg_inv);
        y.push_back(acc);
    }

    WittVector r = witt_zero(tctx);
    for (int n = 1; n <= N; ++n) {
        std::optional<RElem> back = ctx.ring->contract(y[static_cast<size_t>(n - 1)]);
        if (!back)
            throw NotDivisible("transport coordinate " + std::to_string(n) +
                               " not integral — implementation bug");
        r.at(n) = *back;
    }
    return r;
}

WittVector transport_to_h(const WittVector& a, int h) {
    if (h != 0 && h != 2)
        throw Error("InvalidArgument", "transport target must be 0 or 2");
    const WittContext& ctx = a.ctx;
    if (ctx.is_degenerate())
        throw DegenerateDeformation("transport undefined at g = 1");
    Deformation tdef = ctx.is_polynomial() ? Deformation(QPoly(h))
                                           : Deformation(Int(h));
    WittContext tctx = ctx.with_deformation(tdef);
    WittContext ectx = ctx.extension_ctx();
    WittContext etctx = tctx.extension_ctx();
    const Ring& E = *ectx.ring;
    const int N = ctx.trunc;

    std::vector<RElem> ea;
    for (int n = 1; n <= N; ++n) ea.push_back(ctx.ring->embed(a.at(n)));
    GhostVector W = ghost(WittVector{ectx, ea});

    // the coefficient of T_n in the defining system is n(1-h) = ±n
    std::vector<RElem> t;
    std::vector<std::vector<RElem>> tpows(static_cast<size_t>(N));
    auto tpow = [&](int d, int e) -> RElem {
        auto& p = tpows[static_cast<size_t>(d - 1)];
        while (static_cast<int>(p.size()) <= e)
            p.push_back(p.size() == 0 ? E.one()
                                      : E.mul(p.back(), t[static_cast<size_t>(d - 1)]));
        return p[static_cast<size_t>(e)];
    };

    for (int n = 1; n <= N; ++n) {
        RElem acc = W.at(n);
        for (int d : divisors(n)) {
            if (d == n) continue;
            RElem term = E.mul(E.from_long(d), etctx.one_minus_g_pow(n / d));
            term = E.mul(term, tpow(d, n / d));
            acc = E.sub(acc, term);
        }
        Rat scale = make_rat(1, n * (1 - h)); // h in {0,2} so this is ±1/n
        t.push_back(E.mul(acc, int_scalar(E, scale)));
    }

    WittVector r = witt_zero(tctx);
    for (int n = 1; n <= N; ++n) {
        std::optional<RElem> back = ctx.ring->contract(t[static_cast<size_t>(n - 1)]);
        if (!back)
            throw NotDivisible("transport coordinate " + std::to_string(n) +
                               " not integral — implementation bug");
        r.at(n) = *back;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Induction / restriction
// ---------------------------------------------------------------------------

WittVector induce(int r, const WittVector& a) {
    if (r < 1) throw Error("InvalidArgument", "induction index must be >= 1");
    WittVector out = witt_zero(a.ctx);
    for (int n = 1; n <= a.ctx.trunc; ++n)
        if (n % r == 0) out.at(n) = a.at(n / r);
    return out;
}

WittVector witt_restrict(int r, const WittVector& a) {
    if (r < 1) throw Error("InvalidArgument", "restriction index must be >= 1");
    if (r == 1) return a;
    const WittContext& ctx = a.ctx;
    const int No = ctx.trunc / r;
    if (No < 1)
        throw TruncationTooShort("restriction by " + std::to_string(r) +
                                 " needs truncation >= " + std::to_string(r));
    WittContext octx = ctx.with_trunc(No);
    WittContext ectx = ctx.extension_ctx();
    const Ring& E = *ectx.ring;

    std::vector<RElem> ea;
    for (int n = 1; n <= ctx.trunc; ++n) ea.push_back(ctx.ring->embed(a.at(n)));
    PowCache apows(E, ea);

    std::vector<RElem> R;
    std::vector<std::vector<RElem>> rpows(static_cast<size_t>(No));
    auto rpow = [&](int d, int e) -> RElem {
        auto& p = rpows[static_cast<size_t>(d - 1)];
        while (static_cast<int>(p.size()) <= e)
            p.push_back(p.size() == 0 ? E.one()
                                      : E.mul(p.back(), R[static_cast<size_t>(d - 1)]));
        return p[static_cast<size_t>(e)];
    };

    for (int n = 1; n <= No; ++n) {
        RElem acc = E.zero();
        for (int e : divisors(n * r)) {
            RElem term = E.mul(E.from_long(e), ectx.bracket(n * r / e));
            term = E.mul(term, apows.get(e, n * r / e));
            acc = E.add(acc, term);
        }
        for (int d : divisors(n)) {
            if (d == n) continue;
            RElem term = E.mul(E.from_long(d), ectx.bracket(n / d));
            term = E.mul(term, rpow(d, n / d));
            acc = E.sub(acc, term);
        }
        R.push_back(E.mul(acc, int_scalar(E, make_rat(1, n))));
    }

    WittVector out = witt_zero(octx);
    for (int n = 1; n <= No; ++n) {
        std::optional<RElem> back = ctx.ring->contract(R[static_cast<size_t>(n - 1)]);
        if (!back)
            throw NotDivisible("restriction coordinate " + std::to_string(n) +
                               " not integral — implementation bug");
        out.at(n) = *back;
    }
    return out;
}

} // namespace qwitt
