#include "qwitt/necklace.hpp"

#include <map>
#include <mutex>
#include <numeric>

#include "qwitt/errors.hpp"

namespace qwitt {

namespace {

std::vector<int> divisors(int n) {
    std::vector<int> d;
    for (int i = 1; i <= n; ++i)
        if (n % i == 0) d.push_back(i);
    return d;
}

Int bracket_int(int k, const Int& m) {
    Int acc = 0, p = 1;
    for (int i = 0; i < k; ++i) {
        acc += p;
        p *= m;
    }
    return acc;
}

void require_psi(const WittContext& ctx) {
    if (!ctx.ring->has_psi())
        throw NoPsiStructure("necklace operations need Psi-operations on " +
                             ctx.ring->name());
}

RElem rat_scalar(const Ring& ring, const Rat& r) {
    std::optional<RElem> v = ring.from_qrat(QRat(r));
    if (!v)
        throw NotDivisible("ring " + ring.name() +
                           " cannot interpret the scalar " + r.get_str());
    return *v;
}

} // namespace

NecklaceVector make_necklace(const WittContext& ctx, std::vector<RElem> coords) {
    require_psi(ctx);
    if (static_cast<int>(coords.size()) != ctx.trunc)
        throw Error("InvalidArgument", "coordinate count != truncation");
    return NecklaceVector{ctx, std::move(coords)};
}

NecklaceVector necklace_zero(const WittContext& ctx) {
    require_psi(ctx);
    return NecklaceVector{ctx, std::vector<RElem>(static_cast<size_t>(ctx.trunc),
                                                  ctx.ring->zero())};
}

bool necklace_eq(const NecklaceVector& a, const NecklaceVector& b) {
    if (!a.ctx.same(b.ctx)) return false;
    for (int n = 1; n <= a.ctx.trunc; ++n)
        if (!a.ctx.ring->eq(a.at(n), b.at(n))) return false;
    return true;
}

GhostVector neck_ghost(const NecklaceVector& a) {
    require_psi(a.ctx);
    const Ring& R = *a.ctx.ring;
    GhostVector w{a.ctx, {}};
    for (int n = 1; n <= a.ctx.trunc; ++n) {
        RElem acc = R.zero();
        for (int d : divisors(n)) {
            RElem term = R.mul(R.from_long(d), a.ctx.one_minus_g_pow(n / d));
            term = R.mul(term, R.psi(n / d, a.at(d)));
            acc = R.add(acc, term);
        }
        w.coords.push_back(acc);
    }
    return w;
}

NecklaceVector neck_add(const NecklaceVector& a, const NecklaceVector& b) {
    if (!a.ctx.same(b.ctx)) throw ContextMismatch("neck_add");
    NecklaceVector r{a.ctx, {}};
    for (int n = 1; n <= a.ctx.trunc; ++n)
        r.coords.push_back(a.ctx.ring->add(a.at(n), b.at(n)));
    return r;
}

NecklaceVector neck_neg(const NecklaceVector& a) {
    NecklaceVector r{a.ctx, {}};
    for (int n = 1; n <= a.ctx.trunc; ++n)
        r.coords.push_back(a.ctx.ring->neg(a.at(n)));
    return r;
}

namespace {

// abelianized Psi-ghost: sum_{d|n} d [n/d] Psi^{n/d}(a_d)
RElem psi_ghost_ab_at(const WittContext& ctx, const std::vector<RElem>& coords,
                      int n) {
    const Ring& R = *ctx.ring;
    RElem acc = R.zero();
    for (int d : divisors(n)) {
        RElem term = R.mul(R.from_long(d), ctx.bracket(n / d));
        term = R.mul(term, R.psi(n / d, coords[static_cast<size_t>(d - 1)]));
        acc = R.add(acc, term);
    }
    return acc;
}

} // namespace

NecklaceVector neck_mul(const NecklaceVector& a, const NecklaceVector& b) {
    if (!a.ctx.same(b.ctx)) throw ContextMismatch("neck_mul");
    require_psi(a.ctx);
    const WittContext& ctx = a.ctx;
    if (!ctx.ring->has_rational_extension())
        return neck_mul_via_constants(a, b);

    WittContext ectx = ctx.extension_ctx();
    const Ring& E = *ectx.ring;
    const int N = ctx.trunc;
    std::vector<RElem> ea, eb;
    for (int n = 1; n <= N; ++n) {
        ea.push_back(ctx.ring->embed(a.at(n)));
        eb.push_back(ctx.ring->embed(b.at(n)));
    }
    RElem one_minus_g = ectx.one_minus_g_pow(1);

    std::vector<RElem> c;
    for (int n = 1; n <= N; ++n) {
        RElem rhs = E.mul(one_minus_g, E.mul(psi_ghost_ab_at(ectx, ea, n),
                                             psi_ghost_ab_at(ectx, eb, n)));
        for (int d : divisors(n)) {
            if (d == n) continue;
            RElem term = E.mul(E.from_long(d), ectx.bracket(n / d));
            term = E.mul(term, E.psi(n / d, c[static_cast<size_t>(d - 1)]));
            rhs = E.sub(rhs, term);
        }
        c.push_back(E.mul(rhs, rat_scalar(E, make_rat(1, n))));
    }

    NecklaceVector r = necklace_zero(ctx);
    for (int n = 1; n <= N; ++n) {
        std::optional<RElem> back = ctx.ring->contract(c[static_cast<size_t>(n - 1)]);
        if (!back)
            throw NotDivisible("necklace product coordinate " +
                               std::to_string(n) +
                               " not integral — implementation bug");
        r.at(n) = *back;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Moebius-like functions
// ---------------------------------------------------------------------------

int mobius_classical(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

namespace {

std::mutex g_mobius_mutex;
std::map<std::pair<std::string, int>, Int>& mobius_cache() {
    static std::map<std::pair<std::string, int>, Int> cache;
    return cache;
}

} // namespace

Int mobius_m(const Int& m, int n) {
    if (n < 1) throw Error("InvalidArgument", "mobius: n must be >= 1");
    std::lock_guard<std::mutex> lock(g_mobius_mutex);
    auto& cache = mobius_cache();
    std::string key = m.get_str();
    for (int k = 1; k <= n; ++k) {
        if (cache.count({key, k})) continue;
        if (k == 1) {
            cache[{key, 1}] = 1;
            continue;
        }
        Int acc = 0;
        for (int d : divisors(k)) {
            if (d == k) continue;
            acc += bracket_int(k / d, m) * cache.at({key, d});
        }
        cache[{key, k}] = -acc;
    }
    return cache.at({key, n});
}

Int mobius_m_chains(const Int& m, int n) {
    // multiplicative compositions of n with all parts >= 2; each chain
    // 1 = x_r < ... < x_0 = n contributes (-1)^r prod [x_i/x_{i+1}]_m
    if (n == 1) return 1;
    Int acc = 0;
    for (int first = 2; first <= n; ++first) {
        if (n % first != 0) continue;
        acc -= bracket_int(first, m) * mobius_m_chains(m, n / first);
    }
    return acc;
}

QPoly mobius_hat(const QPoly& g, int n) {
    // same chain weights, with the base polynomial twisted by q -> q^{x_0/x_1}
    // along the chain (Wt_{g(q)} of the divisor lattice)
    if (n < 1) throw Error("InvalidArgument", "mobius_hat: n must be >= 1");
    if (n == 1) return QPoly(1);
    QPoly acc;
    for (int first = 2; first <= n; ++first) {
        if (n % first != 0) continue;
        acc -= QPoly::bracket(first, g) * mobius_hat(g.subst_q_pow(first), n / first);
    }
    return acc;
}

Int zeta_mu_convolution(const Int& m, int n) {
    Int acc = 0;
    for (int d : divisors(n)) acc += bracket_int(n / d, m) * mobius_m(m, d);
    return acc;
}

// ---------------------------------------------------------------------------
// Structure constants
// ---------------------------------------------------------------------------

QRat struct_const_qrat(const Deformation& def, int n, int i, int j) {
    if (n < 1 || i < 1 || j < 1 || n % i != 0 || n % j != 0)
        throw Error("InvalidArgument", "struct_const needs i | n and j | n");
    const int lcm_ij = i / std::gcd(i, j) * j;
    if (std::holds_alternative<Int>(def)) {
        const Int& m = std::get<Int>(def);
        Int sum = 0;
        for (int e : divisors(n / lcm_ij))
            sum += bracket_int(n / (e * i), m) * bracket_int(n / (e * j), m) *
                   mobius_m(m, e);
        Int num = (Int(1) - m) * Int(i) * Int(j) * sum;
        return QRat(make_rat(num, Int(n)));
    }
    const QPoly& g = std::get<QPoly>(def);
    QPoly sum;
    for (int e : divisors(n / lcm_ij)) {
        QPoly ge = g.subst_q_pow(e);
        QPoly term = (QPoly(1) - ge) * QPoly::bracket(n / (e * i), ge) *
                     QPoly::bracket(n / (e * j), ge) * mobius_hat(g, e);
        sum += term;
    }
    return QRat(sum.scaled(make_rat(Int(i) * Int(j), Int(n))));
}

RElem struct_const(const WittContext& ctx, int n, int i, int j) {
    QRat v = struct_const_qrat(ctx.def, n, i, j);
    // divisibility by n must be exact (remark after Prop 5.15)
    bool integral = v.is_poly() && v.poly().has_integer_coeffs();
    if (!integral)
        throw NotDivisible("structure constant c(" + std::to_string(i) + "," +
                           std::to_string(j) + ") at n=" + std::to_string(n) +
                           " not integral — implementation bug");
    std::optional<RElem> e = ctx.ring->from_qrat(v);
    if (!e) throw RingMismatch("structure constant not expressible in " +
                               ctx.ring->name());
    return *e;
}

NecklaceVector neck_mul_via_constants(const NecklaceVector& a,
                                      const NecklaceVector& b) {
    if (!a.ctx.same(b.ctx)) throw ContextMismatch("neck_mul_via_constants");
    require_psi(a.ctx);
    const WittContext& ctx = a.ctx;
    const Ring& R = *ctx.ring;
    NecklaceVector r = necklace_zero(ctx);
    for (int n = 1; n <= ctx.trunc; ++n) {
        RElem acc = R.zero();
        for (int i : divisors(n)) {
            RElem pa = R.psi(n / i, a.at(i));
            for (int j : divisors(n)) {
                RElem c = struct_const(ctx, n, i, j);
                if (R.is_zero(c)) continue;
                acc = R.add(acc, R.mul(c, R.mul(pa, R.psi(n / j, b.at(j)))));
            }
        }
        r.at(n) = acc;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Inverse ghost
// ---------------------------------------------------------------------------

std::vector<QRat> f_coeffs(const QPoly& g, int trunc) {
    if (g == QPoly(1))
        throw DegenerateDeformation("f_n(q) undefined at g = 1");
    QRat one_minus_g = QRat(QPoly(1) - g);
    std::vector<QRat> f;
    for (int n = 1; n <= trunc; ++n) {
        QRat acc = (n == 1) ? QRat(1) : QRat();
        for (int d : divisors(n)) {
            if (d == n) continue;
            QRat coef = QRat(QPoly(1) - g.pow(static_cast<unsigned long>(n / d)));
            acc -= coef * f[static_cast<size_t>(d - 1)].subst_q_pow(n / d);
        }
        f.push_back(acc * one_minus_g.inv());
    }
    return f;
}

NecklaceVector eta_inverse(const GhostVector& w) {
    const WittContext& ctx = w.ctx;
    require_psi(ctx);
    if (!ctx.is_polynomial())
        throw Error("InvalidArgument",
                    "eta is defined for polynomial deformations");
    if (ctx.is_degenerate())
        throw DegenerateDeformation("eta undefined at g = 1");
    if (!ctx.ring->has_rational_division() || !ctx.ring->is_q_algebra())
        throw RingLacksRationalDivision(
            "eta needs a Q[q]-algebra with Psi, got " + ctx.ring->name());
    const Ring& R = *ctx.ring;
    std::vector<QRat> f = f_coeffs(ctx.g(), ctx.trunc);
    NecklaceVector r = necklace_zero(ctx);
    for (int n = 1; n <= ctx.trunc; ++n) {
        RElem acc = R.zero();
        for (int d : divisors(n)) {
            std::optional<RElem> fd = R.from_qrat(f[static_cast<size_t>(d - 1)]);
            if (!fd) throw RingMismatch("f_d(q) not expressible in " + R.name());
            acc = R.add(acc, R.mul(*fd, R.psi(d, w.at(n / d))));
        }
        r.at(n) = R.mul(acc, rat_scalar(R, make_rat(1, n)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Unity
// ---------------------------------------------------------------------------

std::vector<QRat> neck_unity_coordinates(const Deformation& def, int trunc) {
    if (std::holds_alternative<QPoly>(def)) {
        const QPoly& g = std::get<QPoly>(def);
        if (g == QPoly(1)) throw DegenerateDeformation("unity undefined at g = 1");
        std::vector<QRat> E(static_cast<size_t>(trunc), QRat());
        E[0] = QRat(QPoly(1) - g).inv();
        return E;
    }
    const Int& m = std::get<Int>(def);
    if (m == 1) throw DegenerateDeformation("unity undefined at m = 1");
    // linear recursion: sum_{d|n} d (1 - m^{n/d}) E_d = 1
    QRat one_minus_m = QRat(Rat(Int(1) - m));
    std::vector<QRat> E;
    for (int n = 1; n <= trunc; ++n) {
        QRat acc(1);
        for (int d : divisors(n)) {
            if (d == n) continue;
            Rat coef(Int(d) * (Int(1) - int_pow(m, static_cast<unsigned long>(n / d))));
            acc -= QRat(coef) * E[static_cast<size_t>(d - 1)];
        }
        E.push_back(acc * QRat(make_rat(1, n)) * one_minus_m.inv());
    }
    return E;
}

NecklaceVector neck_unity(const WittContext& ctx) {
    require_psi(ctx);
    RElem one_minus_g = ctx.one_minus_g_pow(1);
    if (!ctx.ring->is_unit(one_minus_g))
        throw NotUnital("1-g is not a unit in " + ctx.ring->name());
    std::vector<QRat> E = neck_unity_coordinates(ctx.def, ctx.trunc);
    NecklaceVector r = necklace_zero(ctx);
    for (int n = 1; n <= ctx.trunc; ++n) {
        std::optional<RElem> e = ctx.ring->from_qrat(E[static_cast<size_t>(n - 1)]);
        if (!e)
            throw NotUnital("unity coordinate e_" + std::to_string(n) +
                            " does not lie in " + ctx.ring->name());
        r.at(n) = *e;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Transport
// ---------------------------------------------------------------------------

NecklaceVector neck_transport_two_minus(const NecklaceVector& a) {
    const WittContext& ctx = a.ctx;
    require_psi(ctx);
    if (ctx.is_degenerate())
        throw DegenerateDeformation("transport undefined at deformation 1");
    WittContext tctx = ctx.with_deformation(ctx.two_minus());
    WittContext ectx = ctx.extension_ctx();
    WittContext etctx = tctx.extension_ctx();
    const Ring& E = *ectx.ring;
    const int N = ctx.trunc;

    std::vector<RElem> ea;
    for (int n = 1; n <= N; ++n) ea.push_back(ctx.ring->embed(a.at(n)));
    GhostVector W = neck_ghost(NecklaceVector{ectx, ea});

    RElem neg_inv = E.neg(E.inv(ectx.one_minus_g_pow(1)));
    std::vector<RElem> y;
    for (int n = 1; n <= N; ++n) {
        RElem acc = W.at(n);
        for (int d : divisors(n)) {
            if (d == n) continue;
            RElem term = E.mul(E.from_long(d), etctx.one_minus_g_pow(n / d));
            term = E.mul(term, E.psi(n / d, y[static_cast<size_t>(d - 1)]));
            acc = E.sub(acc, term);
        }
        acc = E.mul(acc, rat_scalar(E, make_rat(1, n)));
        y.push_back(E.mul(acc, neg_inv));
    }

    NecklaceVector r = necklace_zero(tctx);
    for (int n = 1; n <= N; ++n) {
        std::optional<RElem> back = ctx.ring->contract(y[static_cast<size_t>(n - 1)]);
        if (!back)
            throw NotDivisible("necklace transport coordinate " +
                               std::to_string(n) +
                               " not integral — implementation bug");
        r.at(n) = *back;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Induction / restriction
// ---------------------------------------------------------------------------

NecklaceVector neck_induce(int r, const NecklaceVector& a) {
    if (r < 1) throw Error("InvalidArgument", "induction index must be >= 1");
    NecklaceVector out = necklace_zero(a.ctx);
    for (int n = 1; n <= a.ctx.trunc; ++n)
        if (n % r == 0) out.at(n) = a.at(n / r);
    return out;
}

NecklaceVector neck_restrict(int r, const NecklaceVector& a) {
    if (r < 1) throw Error("InvalidArgument", "restriction index must be >= 1");
    if (r == 1) return a;
    const WittContext& ctx = a.ctx;
    require_psi(ctx);
    const int No = ctx.trunc / r;
    if (No < 1)
        throw TruncationTooShort("restriction by " + std::to_string(r) +
                                 " needs truncation >= " + std::to_string(r));
    WittContext octx = ctx.with_trunc(No);
    WittContext ectx = ctx.extension_ctx();
    const Ring& E = *ectx.ring;

    std::vector<RElem> ea;
    for (int n = 1; n <= ctx.trunc; ++n) ea.push_back(ctx.ring->embed(a.at(n)));

    std::vector<RElem> R;
    for (int n = 1; n <= No; ++n) {
        RElem acc = E.zero();
        for (int e : divisors(n * r)) {
            RElem term = E.mul(E.from_long(e), ectx.bracket(n * r / e));
            term = E.mul(term, E.psi(n * r / e, ea[static_cast<size_t>(e - 1)]));
            acc = E.add(acc, term);
        }
        for (int d : divisors(n)) {
            if (d == n) continue;
            RElem term = E.mul(E.from_long(d), ectx.bracket(n / d));
            term = E.mul(term, E.psi(n / d, R[static_cast<size_t>(d - 1)]));
            acc = E.sub(acc, term);
        }
        R.push_back(E.mul(acc, rat_scalar(E, make_rat(1, n))));
    }

    NecklaceVector out = necklace_zero(octx);
    for (int n = 1; n <= No; ++n) {
        std::optional<RElem> back = ctx.ring->contract(R[static_cast<size_t>(n - 1)]);
        if (!back)
            throw NotDivisible("necklace restriction coordinate " +
                               std::to_string(n) +
                               " not integral — implementation bug");
        out.at(n) = *back;
    }
    return out;
}

NecklaceVector neck_restrict_closed_form(int r, const NecklaceVector& a) {
    if (r < 1) throw Error("InvalidArgument", "restriction index must be >= 1");
    const WittContext& ctx = a.ctx;
    require_psi(ctx);
    if (ctx.is_polynomial())
        throw Error("InvalidArgument",
                    "closed form is available for integer deformations only");
    if (r == 1) return a;
    const int No = ctx.trunc / r;
    if (No < 1)
        throw TruncationTooShort("restriction by " + std::to_string(r) +
                                 " needs truncation >= " + std::to_string(r));
    const Int& m = ctx.m();
    WittContext octx = ctx.with_trunc(No);
    WittContext ectx = ctx.extension_ctx();
    const Ring& E = *ectx.ring;

    NecklaceVector out = necklace_zero(octx);
    for (int n = 1; n <= No; ++n) {
        RElem acc = E.zero();
        for (int e : divisors(n * r)) {
            Int inner = 0;
            int lim = std::gcd(n, n * r / e);
            for (int d : divisors(lim))
                inner += mobius_m(m, d) * bracket_int(n * r / (d * e), m);
            Rat coef = make_rat(Int(e) * inner, Int(n));
            RElem term = E.mul(rat_scalar(E, coef),
                               E.psi(n * r / e, ctx.ring->embed(a.at(e))));
            acc = E.add(acc, term);
        }
        std::optional<RElem> back = ctx.ring->contract(acc);
        if (!back)
            throw NotDivisible("closed-form restriction coordinate " +
                               std::to_string(n) +
                               " not integral — implementation bug");
        out.at(n) = *back;
    }
    return out;
}

} // namespace qwitt
