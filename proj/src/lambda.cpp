#include "qwitt/lambda.hpp"

#include "qwitt/errors.hpp"

namespace qwitt {

namespace {

std::optional<Int> as_integer(const RElem& e) {
    if (const Int* z = std::get_if<Int>(&e)) return *z;
    if (const Rat* r = std::get_if<Rat>(&e)) {
        if (is_integer(*r)) return Int(r->get_num());
        return std::nullopt;
    }
    if (const QPoly* p = std::get_if<QPoly>(&e)) {
        if (p->is_constant() && is_integer(p->constant_value()))
            return Int(p->constant_value().get_num());
        return std::nullopt;
    }
    const QRat& v = std::get<QRat>(e);
    if (v.is_poly() && v.num().is_constant() &&
        is_integer(v.num().constant_value()))
        return Int(v.num().constant_value().get_num());
    return std::nullopt;
}

} // namespace

LambdaElement make_lambda(const WittContext& ctx, Series s) {
    if (!s.ring()->same(*ctx.ring) || s.order() != ctx.trunc)
        throw ContextMismatch("series does not fit the deformation context");
    if (!ctx.ring->eq(s.coeff(0), ctx.ring->one()))
        throw ConstantTermNotOne("lambda elements have constant term 1");
    return LambdaElement{ctx, std::move(s)};
}

LambdaElement theta(const WittVector& a) {
    const WittContext& ctx = a.ctx;
    const int N = ctx.trunc;
    Series denom = Series::one(ctx.ring, N);
    for (int n = 1; n <= N; ++n)
        denom = denom * Series::one_plus(ctx.ring, N, ctx.ring->neg(a.at(n)), n);
    return LambdaElement{ctx, denom.inverse()};
}

WittVector theta_inv(const LambdaElement& s) {
    const WittContext& ctx = s.ctx;
    const int N = ctx.trunc;
    WittVector a = witt_zero(ctx);
    Series rem = s.series;
    for (int n = 1; n <= N; ++n) {
        a.at(n) = rem.coeff(n);
        rem = rem * Series::one_plus(ctx.ring, N, ctx.ring->neg(a.at(n)), n);
    }
    return a;
}

LambdaElement lam_add(const LambdaElement& s, const LambdaElement& u) {
    if (!s.ctx.same(u.ctx)) throw ContextMismatch("lam_add");
    return theta(witt_add(theta_inv(s), theta_inv(u)));
}

LambdaElement lam_mul(const LambdaElement& s, const LambdaElement& u) {
    if (!s.ctx.same(u.ctx)) throw ContextMismatch("lam_mul");
    return theta(witt_mul(theta_inv(s), theta_inv(u)));
}

GhostVector upsilon(const LambdaElement& s) {
    return ghost(theta_inv(s));
}

GhostVector upsilon_via_log_derivative(const LambdaElement& s) {
    const WittContext& ctx = s.ctx;
    if (!ctx.ring->has_rational_division())
        throw RingLacksRationalDivision("log-derivative route over " +
                                        ctx.ring->name());
    const int N = ctx.trunc;
    WittVector a = theta_inv(s);
    RElem g = ctx.g_elem();
    Series prod = Series::one(ctx.ring, N);
    for (int n = 1; n <= N; ++n) {
        Series numf = Series::one_plus(ctx.ring, N,
                                       ctx.ring->neg(ctx.ring->mul(g, a.at(n))), n);
        Series denf = Series::one_plus(ctx.ring, N, ctx.ring->neg(a.at(n)), n);
        prod = prod * numf * denf.inverse();
    }
    Series L = prod.log();
    // coefficient of t^{n-1} in dL/dt is n * L_n
    GhostVector w{ctx, {}};
    for (int n = 1; n <= N; ++n)
        w.coords.push_back(ctx.ring->mul(ctx.ring->from_long(n), L.coeff(n)));
    return w;
}

std::vector<QPoly> kimlee_expand(const std::vector<long>& a, int trunc) {
    RingPtr Qq = Ring::Qq();
    Series s = Series::one(Qq, trunc);
    RElem minus_one = Qq->from_long(-1);
    RElem minus_q = Qq->neg(*Qq->from_qrat(QRat::q()));
    for (int n = 1; n <= trunc && n <= static_cast<int>(a.size()); ++n) {
        long e = a[static_cast<size_t>(n - 1)];
        if (e == 0) continue;
        Series numf = Series::one_plus(Qq, trunc, minus_one, n);
        Series denf = Series::one_plus(Qq, trunc, minus_q, n);
        s = s * (numf * denf.inverse()).int_pow(e);
    }
    std::vector<QPoly> b;
    for (int n = 1; n <= trunc; ++n) {
        const QRat& c = std::get<QRat>(s.coeff(n));
        if (!c.is_poly() || !c.num().has_integer_coeffs())
            throw IntegralityViolation("Kim-Lee coefficient b_" +
                                       std::to_string(n) + " = " +
                                       c.to_string() + " is not in Z[q]");
        b.push_back(c.poly());
    }
    return b;
}

LambdaElement symmetric_product(const NecklaceVector& a) {
    const WittContext& ctx = a.ctx;
    const Ring& R = *ctx.ring;
    const int N = ctx.trunc;
    RElem g = ctx.g_elem();
    Series s = Series::one(ctx.ring, N);
    for (int n = 1; n <= N; ++n) {
        if (R.is_zero(a.at(n))) continue;
        std::optional<Int> k = as_integer(a.at(n));
        if (k && mpz_fits_slong_p(k->get_mpz_t())) {
            // Psi-fixed integer coordinate: ((1-g t^n)/(1-t^n))^{a_n}
            Series numf = Series::one_plus(ctx.ring, N, R.neg(g), n);
            Series denf = Series::one_plus(ctx.ring, N, R.from_long(-1), n);
            s = s * (numf * denf.inverse()).int_pow(k->get_si());
            continue;
        }
        // general coordinate: exp(sum_r (1/r)(1-g^r) psi^r(a_n) t^{nr})
        if (!R.has_rational_division())
            throw RingLacksRationalDivision(
                "non-integer necklace coordinate needs the exp route, "
                "unavailable over " + R.name());
        Series arg(ctx.ring, N);
        for (int r = 1; n * r <= N; ++r) {
            RElem c = R.mul(*R.from_qrat(QRat(make_rat(1, r))),
                            R.mul(ctx.one_minus_g_pow(r), R.psi(r, a.at(n))));
            arg.set_coeff(n * r, c);
        }
        s = s * arg.exp();
    }
    return LambdaElement{ctx, std::move(s)};
}

} // namespace qwitt
