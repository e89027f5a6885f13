#include <doctest.h>

#include "helpers.hpp"
#include "qwitt/bridges.hpp"
#include "qwitt/errors.hpp"
#include "qwitt/lambda.hpp"

using namespace qwitt;
using namespace qwitt::testutil;

TEST_CASE("theta") {
    WittContext c = ctx_g("q", 2);
    WittVector a = wv(c, {"q", "1+q"});
    LambdaElement s = theta(a);
    // 1/(1-a_1 t) * 1/(1-a_2 t^2) = 1 + a_1 t + (a_1^2 + a_2) t^2
    CHECK(c.ring->eq(s.series.coeff(1), a.at(1)));
    CHECK(c.ring->eq(s.series.coeff(2),
                     c.ring->add(c.ring->mul(a.at(1), a.at(1)), a.at(2))));

    CHECK(theta(witt_zero(c)).series == Series::one(c.ring, 2));

    // theta of the W^0 unity is the geometric series
    WittContext cm = ctx_m(0, 5);
    LambdaElement u = theta(witt_unity(cm));
    for (int k = 0; k <= 5; ++k)
        CHECK(cm.ring->eq(u.series.coeff(k), cm.ring->one()));
}

TEST_CASE("theta_inv") {
    // 1 + t has coordinates (1, -1, ...)
    WittContext c = ctx_m(0, 4);
    Series s = Series::one_plus(c.ring, 4, c.ring->one(), 1);
    WittVector a = theta_inv(make_lambda(c, s));
    CHECK(std::get<Int>(a.at(1)) == 1);
    CHECK(std::get<Int>(a.at(2)) == -1);

    CHECK(witt_eq(theta_inv(make_lambda(c, Series::one(c.ring, 4))),
                  witt_zero(c)));

    // round trip on random vectors
    std::mt19937_64 rng(29);
    WittContext c16 = ctx_g("q", 16);
    for (int it = 0; it < 5; ++it) {
        WittVector r = random_witt(c16, rng);
        CHECK(witt_eq(theta_inv(theta(r)), r));
    }
}

TEST_CASE("transported ring operations") {
    WittContext c = ctx_g("q", 2);
    LambdaElement sx = theta(wv(c, {"1", "0"}));
    LambdaElement sy = theta(wv(c, {"-1", "0"}));
    CHECK(witt_eq(theta_inv(lam_add(sx, sy)), wv(c, {"0", "1+q"})));

    // multiplying by theta(0) = 1 annihilates
    LambdaElement zero = theta(witt_zero(c));
    CHECK(lam_mul(sx, zero).series == zero.series);
    // adding theta(0) = 1 is the identity
    CHECK(lam_add(sx, zero).series == sx.series);

    // ring axioms directly on series
    std::mt19937_64 rng(31);
    WittContext c8 = ctx_m(2, 8);
    for (int it = 0; it < 3; ++it) {
        LambdaElement x = theta(random_witt(c8, rng));
        LambdaElement y = theta(random_witt(c8, rng));
        LambdaElement z = theta(random_witt(c8, rng));
        CHECK(lam_add(x, y).series == lam_add(y, x).series);
        CHECK(lam_mul(x, lam_mul(y, z)).series ==
              lam_mul(lam_mul(x, y), z).series);
        CHECK(lam_mul(x, lam_add(y, z)).series ==
              lam_add(lam_mul(x, y), lam_mul(x, z)).series);
    }
}

TEST_CASE("upsilon") {
    // single coordinate a_1 = 1, g=q: coefficients 1 - q^n
    WittContext c = ctx_g("q", 6);
    LambdaElement s = theta(wv(c, {"1", "0", "0", "0", "0", "0"}));
    GhostVector w = upsilon(s);
    for (int n = 1; n <= 6; ++n)
        CHECK(c.ring->eq(w.at(n), c.ring->parse("1-q^" + std::to_string(n))));

    // s = 1 -> 0
    GhostVector wz = upsilon(make_lambda(c, Series::one(c.ring, 6)));
    for (int n = 1; n <= 6; ++n) CHECK(c.ring->eq(wz.at(n), c.ring->zero()));

    // Upsilon . Theta = int . Phi
    std::mt19937_64 rng(37);
    WittContext c12 = ctx_g("q", 12);
    for (int it = 0; it < 5; ++it) {
        WittVector a = random_witt(c12, rng);
        CHECK(ghost_eq(upsilon(theta(a)), ghost(a)));
    }

    // the formal log-derivative route agrees over Q(q)
    WittContext cq = ctx_g("q", 10, "Qq");
    for (int it = 0; it < 3; ++it) {
        LambdaElement t = theta(random_witt(cq, rng));
        CHECK(ghost_eq(upsilon(t), upsilon_via_log_derivative(t)));
    }
}

TEST_CASE("kimlee expansion") {
    // a = (1, 0, 0, ...): b_n = q^n - q^{n-1} = -q^{n-1}(1-q)
    std::vector<QPoly> b = kimlee_expand({1}, 8);
    for (int n = 1; n <= 8; ++n) {
        QPoly expect = QPoly::monomial(Rat(1), n) - QPoly::monomial(Rat(1), n - 1);
        CHECK(b[static_cast<size_t>(n - 1)] == expect);
    }

    // a = 0 -> b = 0
    for (const QPoly& p : kimlee_expand({0, 0}, 5)) CHECK(p.is_zero());

    // random integer exponents: all coefficients land in Z[q]
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<long> c(-5, 5);
    for (int it = 0; it < 10; ++it) {
        std::vector<long> a;
        for (int k = 0; k < 20; ++k) a.push_back(c(rng));
        CHECK_NOTHROW(kimlee_expand(a, 20));
    }

    // group property: kimlee(a) * kimlee(-a) = 1
    std::vector<long> a{2, -1, 3, 0, -2};
    std::vector<long> na{-2, 1, -3, 0, 2};
    std::vector<QPoly> ba = kimlee_expand(a, 12), bna = kimlee_expand(na, 12);
    RingPtr Zq = Ring::Zq();
    Series sa = Series::one(Zq, 12), sna = Series::one(Zq, 12);
    for (int n = 1; n <= 12; ++n) {
        sa.set_coeff(n, ba[static_cast<size_t>(n - 1)]);
        sna.set_coeff(n, bna[static_cast<size_t>(n - 1)]);
    }
    CHECK(sa * sna == Series::one(Zq, 12));
}

TEST_CASE("symmetric product") {
    // g=q, a=(1,0,...): (1-qt)/(1-t)
    WittContext c = ctx_g("q", 6);
    LambdaElement s = symmetric_product(nv(c, {"1", "0", "0", "0", "0", "0"}));
    RElem q = c.ring->parse("q");
    Series expect = Series::one_plus(c.ring, 6, c.ring->neg(q), 1) *
                    Series::one_plus(c.ring, 6, c.ring->from_long(-1), 1).inverse();
    CHECK(s.series == expect);

    // a = 0 -> 1
    CHECK(symmetric_product(necklace_zero(c)).series == Series::one(c.ring, 6));

    // cross-check against the transported tau_inv route
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<long> coef(-4, 4);
    WittContext c10 = ctx_g("q", 10);
    for (int it = 0; it < 4; ++it) {
        std::vector<RElem> coords;
        for (int n = 0; n < 10; ++n) coords.push_back(c10.ring->from_long(coef(rng)));
        NecklaceVector a = make_necklace(c10, coords);
        CHECK(symmetric_product(a).series ==
              theta(transport_to_h(tau_inv(a), 0)).series);
    }

    // exp route over Q(q): polynomial but non-integer coordinates
    WittContext cq = ctx_g("q", 8, "Qq");
    RingPtr polyring = Ring::Zq();
    for (int it = 0; it < 3; ++it) {
        std::vector<RElem> coords;
        for (int n = 0; n < 8; ++n)
            coords.push_back(QRat(std::get<QPoly>(polyring->sample(rng))));
        NecklaceVector a = make_necklace(cq, coords);
        CHECK(symmetric_product(a).series ==
              theta(transport_to_h(tau_inv(a), 0)).series);
    }

    // non-integer coordinates over Z[q] cannot take the exp route
    WittContext czq = ctx_g("q", 4);
    CHECK_THROWS_AS(symmetric_product(nv(czq, {"q", "0", "0", "0"})),
                    RingLacksRationalDivision);
}
