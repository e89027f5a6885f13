#include "qwitt/bridges.hpp"

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

RElem rat_scalar(const Ring& ring, const Rat& r) {
    std::optional<RElem> v = ring.from_qrat(QRat(r));
    if (!v)
        throw NotDivisible("ring " + ring.name() +
                           " cannot interpret the scalar " + r.get_str());
    return *v;
}

void require_lambda_instance(const Ring& ring) {
    if (!ring.has_psi())
        throw NoPsiStructure("Teichmuller maps need Psi-operations on " +
                             ring.name());
    if (!ring.is_torsion_free() || !ring.has_rational_extension())
        throw NotDivisible("Teichmuller maps need a torsion-free ring with a "
                           "rational extension, got " + ring.name());
}

RElem contract_or_congruence_failure(const Ring& ring, const RElem& value,
                                     int n) {
    std::optional<RElem> back = ring.contract(value);
    if (!back)
        throw NotDivisible(
            "M(x," + std::to_string(n) + ") is not integral; the ring " +
            ring.name() + " violates the lambda-ring congruences");
    return *back;
}

} // namespace

RElem teich_classical(const Ring& ring, const RElem& x, int n) {
    require_lambda_instance(ring);
    RingPtr ext = ring.extension();
    const Ring& E = *ext;
    RElem ex = ring.embed(x);
    RElem acc = E.zero();
    for (int d : divisors(n)) {
        int mu = mobius_classical(d);
        if (mu == 0) continue;
        RElem term = E.psi(d, E.pow(ex, static_cast<unsigned long>(n / d)));
        acc = E.add(acc, E.mul(E.from_long(mu), term));
    }
    acc = E.mul(acc, rat_scalar(E, make_rat(1, n)));
    return contract_or_congruence_failure(ring, acc, n);
}

RElem teich_m(const Ring& ring, const RElem& x, int n, const Int& m) {
    require_lambda_instance(ring);
    RingPtr ext = ring.extension();
    const Ring& E = *ext;
    RElem ex = ring.embed(x);
    RElem acc = E.zero();
    for (int d : divisors(n)) {
        Int c = mobius_m(m, d) * bracket_int(n / d, m);
        if (c == 0) continue;
        RElem term = E.psi(d, E.pow(ex, static_cast<unsigned long>(n / d)));
        acc = E.add(acc, E.mul(E.from_int(c), term));
    }
    acc = E.mul(acc, rat_scalar(E, make_rat(1, n)));
    return contract_or_congruence_failure(ring, acc, n);
}

RElem teich_g(const Ring& ring, const RElem& x, int n, const QPoly& g) {
    require_lambda_instance(ring);
    if (!ring.is_q_algebra())
        throw RingMismatch("polynomial Teichmuller map needs a Z[q]-algebra");
    if (g == QPoly(1))
        throw DegenerateDeformation("M^{g} undefined at g = 1");
    RingPtr ext = ring.extension();
    const Ring& E = *ext;
    RElem ex = ring.embed(x);

    auto one_minus_g_pow = [&](int j) {
        return *E.from_qrat(QRat(QPoly(1) - g.pow(static_cast<unsigned long>(j))));
    };
    RElem inv_one_minus_g = E.inv(one_minus_g_pow(1));

    std::vector<RElem> M; // M^{g}(x, d) for d = 1..n in the extension
    for (int k = 1; k <= n; ++k) {
        RElem acc = E.mul(one_minus_g_pow(k), E.pow(ex, static_cast<unsigned long>(k)));
        for (int d : divisors(k)) {
            if (d == k) continue;
            RElem term = E.mul(E.from_long(d), one_minus_g_pow(k / d));
            term = E.mul(term, E.psi(k / d, M[static_cast<size_t>(d - 1)]));
            acc = E.sub(acc, term);
        }
        acc = E.mul(acc, rat_scalar(E, make_rat(1, k)));
        M.push_back(E.mul(acc, inv_one_minus_g));
    }
    return contract_or_congruence_failure(ring, M.back(), n);
}

RElem teich_g_closed_form(const Ring& ring, const RElem& x, int n,
                          const QPoly& g) {
    require_lambda_instance(ring);
    if (!ring.is_q_algebra())
        throw RingMismatch("polynomial Teichmuller map needs a Z[q]-algebra");
    if (g == QPoly(1))
        throw DegenerateDeformation("M^{g} undefined at g = 1");
    RingPtr ext = ring.extension();
    const Ring& E = *ext;
    RElem ex = ring.embed(x);
    std::vector<QRat> f = f_coeffs(g, n);
    RElem acc = E.zero();
    for (int d : divisors(n)) {
        QRat coef = f[static_cast<size_t>(d - 1)] *
                    QRat(QPoly(1) -
                         g.subst_q_pow(d).pow(static_cast<unsigned long>(n / d)));
        RElem term = E.mul(*E.from_qrat(coef),
                           E.psi(d, E.pow(ex, static_cast<unsigned long>(n / d))));
        acc = E.add(acc, term);
    }
    acc = E.mul(acc, rat_scalar(E, make_rat(1, n)));
    return contract_or_congruence_failure(ring, acc, n);
}

RElem teich(const WittContext& ctx, const RElem& x, int n) {
    if (ctx.is_polynomial()) return teich_g(*ctx.ring, x, n, ctx.g());
    return teich_m(*ctx.ring, x, n, ctx.m());
}

NecklaceVector tau(const WittVector& a) {
    const WittContext& ctx = a.ctx;
    require_lambda_instance(*ctx.ring);
    NecklaceVector r = necklace_zero(ctx);
    const Ring& R = *ctx.ring;
    for (int n = 1; n <= ctx.trunc; ++n) {
        RElem acc = R.zero();
        for (int d : divisors(n)) acc = R.add(acc, teich(ctx, a.at(d), n / d));
        r.at(n) = acc;
    }
    return r;
}

WittVector tau_inv(const NecklaceVector& b) {
    const WittContext& ctx = b.ctx;
    require_lambda_instance(*ctx.ring);
    // tau(a)_n = a_n + sum_{d|n, d<n} M(a_d, n/d): unitriangular in a
    WittVector a = witt_zero(ctx);
    const Ring& R = *ctx.ring;
    for (int n = 1; n <= ctx.trunc; ++n) {
        RElem acc = b.at(n);
        for (int d : divisors(n)) {
            if (d == n) continue;
            acc = R.sub(acc, teich(ctx, a.at(d), n / d));
        }
        a.at(n) = acc;
    }
    return a;
}

} // namespace qwitt
