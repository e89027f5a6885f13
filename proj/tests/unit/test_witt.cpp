#include <doctest.h>

#include <thread>

#include "helpers.hpp"
#include "qwitt/errors.hpp"

using namespace qwitt;
using namespace qwitt::testutil;

TEST_CASE("ghost map") {
    WittContext c = ctx_g("q", 2);
    GhostVector w = ghost(wv(c, {"1", "0"}));
    CHECK(c.ring->eq(w.at(1), c.ring->parse("1-q")));
    CHECK(c.ring->eq(w.at(2), c.ring->parse("1-q^2")));

    CHECK(ghost_eq(ghost(witt_zero(ctx_g("q^2", 6))),
                   GhostVector{ctx_g("q^2", 6), witt_zero(ctx_g("q^2", 6)).coords}));

    // m=0 gives the classical ghost components
    WittContext cm = ctx_m(0, 2);
    WittVector a = wv(cm, {"3", "5"});
    GhostVector wm = ghost(a);
    CHECK(cm.ring->eq(wm.at(1), cm.ring->from_long(3)));
    CHECK(cm.ring->eq(wm.at(2), cm.ring->from_long(3 * 3 + 2 * 5)));
}

TEST_CASE("abelianized ghost") {
    WittContext c = ctx_g("q", 2);
    GhostVector w = ghost_ab(wv(c, {"1", "0"}));
    CHECK(c.ring->eq(w.at(1), c.ring->one()));
    CHECK(c.ring->eq(w.at(2), c.ring->parse("1+q")));

    // stays well-defined at g=1 where the plain ghost degenerates
    WittContext c1 = ctx_g("1", 2);
    GhostVector w1 = ghost_ab(wv(c1, {"1", "1"}));
    CHECK(c1.ring->eq(w1.at(1), c1.ring->one()));
    CHECK(c1.ring->eq(w1.at(2), c1.ring->from_long(4)));

    // n = 1 component is a_1
    std::mt19937_64 rng(2);
    WittContext c3 = ctx_g("q^3", 5);
    WittVector r = random_witt(c3, rng);
    CHECK(c3.ring->eq(ghost_ab(r).at(1), r.at(1)));
}

TEST_CASE("unghost") {
    // hand example: w = ((1-q)^2, (1-q^2)^2) -> a = (1-q, q-q^3)
    WittContext c = ctx_g("q", 2);
    GhostVector w{c, {c.ring->parse("(1-q)^2"), c.ring->parse("(1-q^2)^2")}};
    WittVector a = unghost(w);
    CHECK(c.ring->eq(a.at(1), c.ring->parse("1-q")));
    CHECK(c.ring->eq(a.at(2), c.ring->parse("q-q^3")));

    // round trip on random vectors
    std::mt19937_64 rng(17);
    WittContext c12 = ctx_g("q", 12);
    for (int it = 0; it < 10; ++it) {
        WittVector r = random_witt(c12, rng);
        CHECK(witt_eq(unghost(ghost(r)), r));
    }

    WittContext deg = ctx_m(1, 3);
    GhostVector wd{deg, witt_zero(deg).coords};
    CHECK_THROWS_AS(unghost(wd), DegenerateDeformation);
}

TEST_CASE("witt ring operations, hand values") {
    WittContext c = ctx_g("q", 2);
    WittVector x = wv(c, {"1", "0"});
    WittVector minus_x = wv(c, {"-1", "0"});

    WittVector s = witt_add(x, minus_x);
    CHECK(c.ring->eq(s.at(1), c.ring->zero()));
    CHECK(c.ring->eq(s.at(2), c.ring->parse("1+q")));

    WittVector p = witt_mul(x, x);
    CHECK(c.ring->eq(p.at(1), c.ring->parse("1-q")));
    CHECK(c.ring->eq(p.at(2), c.ring->parse("q-q^3")));

    WittVector n = witt_neg(x);
    CHECK(c.ring->eq(n.at(1), c.ring->from_long(-1)));
    CHECK(c.ring->eq(n.at(2), c.ring->parse("-1-q")));

    // m=1: every product vanishes
    std::mt19937_64 rng(23);
    WittContext c1 = ctx_m(1, 8);
    for (int it = 0; it < 5; ++it) {
        WittVector a = random_witt(c1, rng), b = random_witt(c1, rng);
        CHECK(witt_eq(witt_mul(a, b), witt_zero(c1)));
    }

    WittContext other = ctx_g("q", 3);
    CHECK_THROWS_AS(witt_add(x, wv(other, {"1", "0", "0"})), ContextMismatch);
}

TEST_CASE("defining polynomials match the prime formulas") {
    // n=1 base case
    const DefiningPolys& d1 = defining_polys(1);
    CHECK(d1.S == MPoly::variable(xvar(1)) + MPoly::variable(yvar(1)));
    CHECK(d1.P == (MPoly::variable(xvar(1)) * MPoly::variable(yvar(1)))
                      .scaled(P("1-q")));
    CHECK(d1.I == -MPoly::variable(xvar(1)));

    // P_2 = 2(1-g)x_2y_2 + (1-g^2)(x_1^2 y_2 + x_2 y_1^2) + (g-g^3)x_1^2 y_1^2
    const DefiningPolys& d2 = defining_polys(2);
    MPoly x1 = MPoly::variable(xvar(1)), x2 = MPoly::variable(xvar(2));
    MPoly y1 = MPoly::variable(yvar(1)), y2 = MPoly::variable(yvar(2));
    MPoly expect_p2 = (x2 * y2).scaled(P("2-2*q")) +
                      (x1.pow(2) * y2 + x2 * y1.pow(2)).scaled(P("1-q^2")) +
                      (x1.pow(2) * y1.pow(2)).scaled(P("q-q^3"));
    CHECK(d2.P == expect_p2);

    // S_3 = x_3 + y_3 - [3]_g (x_1^2 y_1 + x_1 y_1^2)
    const DefiningPolys& d3 = defining_polys(3);
    MPoly x3 = MPoly::variable(xvar(3)), y3 = MPoly::variable(yvar(3));
    MPoly expect_s3 =
        x3 + y3 - (x1.pow(2) * y1 + x1 * y1.pow(2)).scaled(P("1+q+q^2"));
    CHECK(d3.S == expect_s3);

    // integrality certificate for moderate n (acceptance re-runs to 16)
    for (int n = 1; n <= 10; ++n) {
        const DefiningPolys& dp = defining_polys(n);
        CHECK(dp.S.coefficients_integer_in(QPoly::q()));
        CHECK(dp.P.coefficients_integer_in(QPoly::q()));
        CHECK(dp.I.coefficients_integer_in(QPoly::q()));
    }

    // specialization respects Z[g] membership
    DefiningPolys spec = gen_defining_polys(4, P("1-2*q"));
    CHECK(spec.S.coefficients_integer_in(P("1-2*q")));
    CHECK(spec.P.coefficients_integer_in(P("1-2*q")));
}

TEST_CASE("defining polynomial cache is safe to race") {
    std::vector<std::thread> ts;
    std::vector<MPoly> results(4);
    for (int i = 0; i < 4; ++i)
        ts.emplace_back([i, &results] { results[static_cast<size_t>(i)] = defining_polys(9).P; });
    for (auto& t : ts) t.join();
    for (int i = 1; i < 4; ++i) CHECK(results[0] == results[static_cast<size_t>(i)]);
}

TEST_CASE("ghost and polynomial paths agree") {
    std::mt19937_64 rng(31);
    WittContext c = ctx_g("q", 10);
    for (int it = 0; it < 6; ++it) {
        WittVector a = random_witt(c, rng), b = random_witt(c, rng);
        CHECK(witt_eq(witt_add(a, b, WittPath::Ghost),
                      witt_add(a, b, WittPath::Polynomials)));
        CHECK(witt_eq(witt_mul(a, b, WittPath::Ghost),
                      witt_mul(a, b, WittPath::Polynomials)));
        CHECK(witt_eq(witt_neg(a, WittPath::Ghost),
                      witt_neg(a, WittPath::Polynomials)));
    }
}

TEST_CASE("ring axioms on Z/k via the universal-polynomial path") {
    std::mt19937_64 rng(37);
    for (long k : {4, 6, 9}) {
        WittContext c = ctx_m(3, 8, "Zmod:" + std::to_string(k));
        WittVector a = random_witt(c, rng), b = random_witt(c, rng),
                   d = random_witt(c, rng);
        CHECK(witt_eq(witt_add(a, b), witt_add(b, a)));
        CHECK(witt_eq(witt_add(witt_add(a, b), d), witt_add(a, witt_add(b, d))));
        CHECK(witt_eq(witt_mul(a, b), witt_mul(b, a)));
        CHECK(witt_eq(witt_mul(witt_mul(a, b), d), witt_mul(a, witt_mul(b, d))));
        CHECK(witt_eq(witt_mul(a, witt_add(b, d)),
                      witt_add(witt_mul(a, b), witt_mul(a, d))));
        CHECK(witt_eq(witt_add(a, witt_neg(a)), witt_zero(c)));
    }
}

TEST_CASE("functoriality under q -> m evaluation") {
    // coordinatewise q -> m commutes with the ring operations
    std::mt19937_64 rng(41);
    for (long m : {0, 2, -1}) {
        WittContext cq = ctx_g("q", 10);
        WittContext cm = ctx_m(m, 10);
        auto push = [&](const WittVector& v) {
            std::vector<RElem> out;
            for (int n = 1; n <= cq.trunc; ++n)
                out.push_back(Int(std::get<QPoly>(v.at(n)).eval(Rat(m)).get_num()));
            return make_witt(cm, std::move(out));
        };
        WittVector a = random_witt(cq, rng), b = random_witt(cq, rng);
        CHECK(witt_eq(push(witt_add(a, b)), witt_add(push(a), push(b))));
        CHECK(witt_eq(push(witt_mul(a, b)), witt_mul(push(a), push(b))));
    }
}

TEST_CASE("unity") {
    // m=0 over Z: (1, 0, 0, ...)
    WittContext cm = ctx_m(0, 6);
    WittVector u = witt_unity(cm);
    CHECK(cm.ring->eq(u.at(1), cm.ring->one()));
    for (int n = 2; n <= 6; ++n) CHECK(cm.ring->eq(u.at(n), cm.ring->zero()));
    std::mt19937_64 rng(43);
    for (int it = 0; it < 5; ++it) {
        WittVector a = random_witt(cm, rng);
        CHECK(witt_eq(witt_mul(u, a), a));
    }

    // g=q over Q(q): E_1 = 1/(1-q), E_2 = -q/(1-q)^2
    WittContext cq = ctx_g("q", 4, "Qq");
    WittVector uq = witt_unity(cq);
    CHECK(cq.ring->eq(uq.at(1), cq.ring->parse("1/(1-q)")));
    CHECK(cq.ring->eq(uq.at(2), cq.ring->parse("-q/((1-q)^2)")));
    // the proof's integrality claim: (1-g)^n E_n lies in Z[q]
    std::vector<QRat> E = unity_coordinates(cq.def, 12);
    for (int n = 1; n <= 12; ++n) {
        QRat scaled = QRat(P("1-q")).pow(n) * E[static_cast<size_t>(n - 1)];
        CHECK(scaled.is_poly());
        CHECK(scaled.poly().has_integer_coeffs());
    }
    WittVector x = wv(cq, {"q", "1-q", "0", "3"});
    CHECK(witt_eq(witt_mul(uq, x), x));

    // g=q over Z[q]: 1-q is not a unit
    CHECK_THROWS_AS(witt_unity(ctx_g("q", 3)), NotUnital);
}

TEST_CASE("transport to the 2-g partner") {
    // y_1 = -a_1 in every deformation
    std::mt19937_64 rng(47);
    WittContext c = ctx_g("q", 8);
    WittVector a = random_witt(c, rng);
    WittVector y = transport_two_minus_g(a);
    CHECK(c.ring->eq(y.at(1), c.ring->neg(a.at(1))));
    CHECK(y.ctx.g() == P("2-q"));

    // round trip: transport from 2-g recovers a
    WittContext c12 = ctx_g("q", 12);
    for (int it = 0; it < 4; ++it) {
        WittVector r = random_witt(c12, rng);
        CHECK(witt_eq(transport_two_minus_g(transport_two_minus_g(r)), r));
    }

    // ghost equality at m=0 -> 2
    WittContext cm = ctx_m(0, 8);
    for (int it = 0; it < 6; ++it) {
        WittVector r = random_witt(cm, rng);
        WittVector t = transport_two_minus_g(r);
        CHECK(t.ctx.m() == 2);
        GhostVector lhs = ghost(r), rhs = ghost(t);
        for (int n = 1; n <= 8; ++n) CHECK(cm.ring->eq(lhs.at(n), rhs.at(n)));
    }

    // strict isomorphism is multiplicative
    for (int it = 0; it < 4; ++it) {
        WittVector u = random_witt(cm, rng), v = random_witt(cm, rng);
        CHECK(witt_eq(transport_two_minus_g(witt_mul(u, v)),
                      witt_mul(transport_two_minus_g(u),
                               transport_two_minus_g(v))));
    }

    CHECK_THROWS_AS(transport_two_minus_g(random_witt(ctx_m(1, 4), rng)),
                    DegenerateDeformation);
}

TEST_CASE("transport to h in {0,2}") {
    std::mt19937_64 rng(53);
    WittContext c = ctx_g("q", 6);
    WittVector a = random_witt(c, rng);

    WittVector t0 = transport_to_h(a, 0);
    CHECK(c.ring->eq(t0.at(1), c.ring->mul(c.ring->parse("1-q"), a.at(1))));
    WittVector t2 = transport_to_h(a, 2);
    CHECK(c.ring->eq(t2.at(1),
                     c.ring->neg(c.ring->mul(c.ring->parse("1-q"), a.at(1)))));

    // defining ghost equation
    GhostVector w = ghost(a);
    GhostVector w0 = ghost(t0);
    GhostVector w2 = ghost(t2);
    for (int n = 1; n <= 6; ++n) {
        CHECK(c.ring->eq(w.at(n), w0.at(n)));
        CHECK(c.ring->eq(w.at(n), w2.at(n)));
    }

    CHECK_THROWS_AS(transport_to_h(random_witt(ctx_m(1, 4), rng), 0),
                    DegenerateDeformation);
}

TEST_CASE("induction") {
    WittContext c = ctx_g("q", 4);
    WittVector a = wv(c, {"q", "1+q", "0", "0"});
    CHECK(witt_eq(induce(1, a), a));
    WittVector b = induce(2, a);
    CHECK(c.ring->eq(b.at(1), c.ring->zero()));
    CHECK(c.ring->eq(b.at(2), a.at(1)));
    CHECK(c.ring->eq(b.at(3), c.ring->zero()));
    CHECK(c.ring->eq(b.at(4), a.at(2)));

    // ghost(induce(r,a))_n = r * ghost(a)_{n/r} when r | n, else 0
    WittVector e = wv(c, {"1", "0", "0", "0"});
    GhostVector w = ghost(induce(2, e));
    CHECK(c.ring->eq(w.at(1), c.ring->zero()));
    CHECK(c.ring->eq(w.at(2), c.ring->parse("2-2*q")));
    CHECK(c.ring->eq(w.at(3), c.ring->zero()));
    CHECK(c.ring->eq(w.at(4), c.ring->parse("2-2*q^2")));

    // additivity
    std::mt19937_64 rng(59);
    WittContext c8 = ctx_m(2, 8);
    for (int it = 0; it < 5; ++it) {
        WittVector u = random_witt(c8, rng), v = random_witt(c8, rng);
        CHECK(witt_eq(induce(2, witt_add(u, v)),
                      witt_add(induce(2, u), induce(2, v))));
    }
}

TEST_CASE("restriction") {
    // r=1 is the identity
    std::mt19937_64 rng(61);
    WittContext c = ctx_g("q", 6);
    WittVector a = random_witt(c, rng);
    CHECK(witt_eq(witt_restrict(1, a), a));

    // m=0, r=2: R_1 = a_1^2 + 2 a_2 (classical Frobenius)
    WittContext cm = ctx_m(0, 2);
    WittVector am = wv(cm, {"3", "4"});
    WittVector R = witt_restrict(2, am);
    CHECK(R.ctx.trunc == 1);
    CHECK(cm.ring->eq(R.at(1), cm.ring->from_long(3 * 3 + 2 * 4)));

    // ghost(restrict(r,a))_n = ghost(a)_{rn}
    WittContext c6 = ctx_g("q", 6);
    for (int r : {2, 3}) {
        for (int it = 0; it < 4; ++it) {
            WittVector x = random_witt(c6, rng);
            WittVector rx = witt_restrict(r, x);
            GhostVector w = ghost(x), wr = ghost(rx);
            for (int n = 1; n <= rx.ctx.trunc; ++n)
                CHECK(c6.ring->eq(wr.at(n), w.at(n * r)));
        }
    }

    // restriction is a ring homomorphism
    WittContext c8 = ctx_m(-1, 8);
    for (int it = 0; it < 4; ++it) {
        WittVector u = random_witt(c8, rng), v = random_witt(c8, rng);
        CHECK(witt_eq(witt_restrict(2, witt_mul(u, v)),
                      witt_mul(witt_restrict(2, u), witt_restrict(2, v))));
        CHECK(witt_eq(witt_restrict(2, witt_add(u, v)),
                      witt_add(witt_restrict(2, u), witt_restrict(2, v))));
    }

    // restrict(r, induce(r, a)) has ghost coordinates r * ghost(a)_n
    WittContext c12 = ctx_g("q", 12);
    WittVector x = random_witt(c12, rng);
    WittVector ri = witt_restrict(3, induce(3, x));
    GhostVector w = ghost(x), wri = ghost(ri);
    for (int n = 1; n <= ri.ctx.trunc; ++n)
        CHECK(c12.ring->eq(wri.at(n),
                           c12.ring->mul(c12.ring->from_long(3), w.at(n))));

    CHECK_THROWS_AS(witt_restrict(5, random_witt(ctx_m(0, 4), rng)),
                    TruncationTooShort);
}

TEST_CASE("ghost homomorphism on random vectors") {
    std::mt19937_64 rng(67);
    std::vector<WittContext> ctxs;
    for (const char* g : {"q", "1-2*q", "q^3"}) ctxs.push_back(ctx_g(g, 12));
    for (long m : {-2, -1, 0, 2, 3}) ctxs.push_back(ctx_m(m, 16));
    for (const WittContext& c : ctxs) {
        for (int it = 0; it < 3; ++it) {
            WittVector a = random_witt(c, rng), b = random_witt(c, rng);
            CHECK(ghost_eq(ghost(witt_add(a, b)), ghost_add(ghost(a), ghost(b))));
            CHECK(ghost_eq(ghost(witt_mul(a, b)), ghost_mul(ghost(a), ghost(b))));
            CHECK(ghost_eq(ghost(witt_neg(a)), ghost_neg(ghost(a))));
        }
    }
}
