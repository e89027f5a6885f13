#include <doctest.h>

#include "helpers.hpp"
#include "qwitt/bridges.hpp"
#include "qwitt/errors.hpp"
#include "qwitt/lambda.hpp"

using namespace qwitt;
using namespace qwitt::testutil;

namespace {

// independent oracle: count aperiodic binary necklaces of length n by
// brute-force enumeration of all strings
long necklace_count_bruteforce(int n) {
    long aperiodic = 0;
    for (long s = 0; s < (1L << n); ++s) {
        bool periodic = false;
        for (int d = 1; d < n; ++d) {
            if (n % d) continue;
            bool rep = true;
            for (int i = 0; i < n && rep; ++i)
                if (((s >> i) & 1) != ((s >> ((i + d) % n)) & 1)) rep = false;
            if (rep) {
                periodic = true;
                break;
            }
        }
        if (!periodic) ++aperiodic;
    }
    return aperiodic / n;
}

} // namespace

TEST_CASE("classical necklace polynomial values") {
    RingPtr Z = Ring::Z();
    long expect[] = {2, 1, 2, 3, 6, 9, 18, 30};
    for (int n = 1; n <= 8; ++n) {
        RElem v = teich_classical(*Z, Z->from_long(2), n);
        CHECK(std::get<Int>(v) == expect[n - 1]);
        CHECK(std::get<Int>(v) == necklace_count_bruteforce(n));
    }
    // M(x, 1) = x
    std::mt19937_64 rng(3);
    RElem x = Z->sample(rng);
    CHECK(Z->eq(teich_classical(*Z, x, 1), x));
    // M(1, n) = 0 for n >= 2
    for (int n = 2; n <= 10; ++n)
        CHECK(Z->eq(teich_classical(*Z, Z->one(), n), Z->zero()));
}

TEST_CASE("integer-deformed Teichmuller values") {
    RingPtr Z = Ring::Z();
    std::mt19937_64 rng(5);
    // n = 1 is the identity
    for (long m : {-2, 0, 1, 3}) {
        RElem x = Z->sample(rng);
        CHECK(Z->eq(teich_m(*Z, x, 1, Int(m)), x));
    }
    // prime index: ([p]_m / p)(x^p - x)
    for (int p : {2, 3, 5, 7}) {
        for (long m : {-2, -1, 0, 2, 3}) {
            Int bracket = 0, pw = 1;
            for (int i = 0; i < p; ++i) {
                bracket += pw;
                pw *= m;
            }
            for (int it = 0; it < 5; ++it) {
                Int x(static_cast<long>(it) - 2);
                Int expect = bracket * (int_pow(x, p) - x) / p;
                CHECK(std::get<Int>(teich_m(*Z, RElem(x), p, Int(m))) == expect);
            }
        }
    }
    // m = 0 recovers the classical map
    for (int n = 1; n <= 10; ++n) {
        RElem x = Z->from_long(3);
        CHECK(Z->eq(teich_m(*Z, x, n, Int(0)), teich_classical(*Z, x, n)));
    }
    // the defining recursion re-substitutes exactly:
    //   sum_{d|n} d [n/d]_m psi^{n/d}(M^m(x,d)) = [n]_m x^n
    for (long m : {-1, 2}) {
        RElem x = Z->from_long(2);
        for (int n = 1; n <= 16; ++n) {
            Int acc = 0;
            for (int d = 1; d <= n; ++d) {
                if (n % d) continue;
                Int bracket = 0, pw = 1;
                for (int i = 0; i < n / d; ++i) {
                    bracket += pw;
                    pw *= m;
                }
                acc += Int(d) * bracket *
                       std::get<Int>(teich_m(*Z, x, d, Int(m)));
            }
            Int bn = 0, pw = 1;
            for (int i = 0; i < n; ++i) {
                bn += pw;
                pw *= m;
            }
            CHECK(acc == bn * int_pow(Int(2), n));
        }
    }
}

TEST_CASE("polynomial-deformed Teichmuller values") {
    RingPtr Zq = Ring::Zq();
    // M^q(x, n) = [n]_q M(x, n)
    std::mt19937_64 rng(7);
    for (int it = 0; it < 3; ++it) {
        RElem x = Zq->sample(rng);
        for (int n = 1; n <= 12; ++n) {
            RElem lhs = teich_g(*Zq, x, n, P("q"));
            RElem classical = teich_classical(*Zq, x, n);
            RElem rhs = Zq->mul(*Zq->from_qrat(QRat(QPoly::bracket_q(n))), classical);
            CHECK(Zq->eq(lhs, rhs));
        }
    }
    // n = 1 is the identity
    RElem x = Zq->parse("1+2*q");
    CHECK(Zq->eq(teich_g(*Zq, x, 1, P("q^2+1")), x));
    // recursion == closed form
    for (int n = 1; n <= 8; ++n)
        CHECK(Zq->eq(teich_g(*Zq, x, n, P("q^2+1")),
                     teich_g_closed_form(*Zq, x, n, P("q^2+1"))));
    // the defining recursion re-substitutes exactly
    QPoly g = P("q^2+1");
    for (int n = 1; n <= 10; ++n) {
        RElem acc = Zq->zero();
        for (int d = 1; d <= n; ++d) {
            if (n % d) continue;
            RElem coef = *Zq->from_qrat(
                QRat(QPoly(1) - g.pow(static_cast<unsigned long>(n / d))));
            acc = Zq->add(acc, Zq->mul(Zq->mul(Zq->from_long(d), coef),
                                       Zq->psi(n / d, teich_g(*Zq, x, d, g))));
        }
        RElem rhs = Zq->mul(*Zq->from_qrat(QRat(
                                QPoly(1) - g.pow(static_cast<unsigned long>(n)))),
                            Zq->pow(x, static_cast<unsigned long>(n)));
        CHECK(Zq->eq(acc, rhs));
    }
    CHECK_THROWS_AS(teich_g(*Zq, x, 2, P("1")), DegenerateDeformation);
}

TEST_CASE("tau") {
    // m=0 over Z: tau((2,0,...)) lists the necklace numbers
    WittContext c = ctx_m(0, 8);
    std::vector<RElem> coords(8, c.ring->zero());
    coords[0] = c.ring->from_long(2);
    NecklaceVector t = tau(make_witt(c, coords));
    long expect[] = {2, 1, 2, 3, 6, 9, 18, 30};
    for (int n = 1; n <= 8; ++n) CHECK(std::get<Int>(t.at(n)) == expect[n - 1]);

    // tau(0) = 0
    CHECK(necklace_eq(tau(witt_zero(c)), necklace_zero(c)));

    // Phi = phi . tau
    std::mt19937_64 rng(11);
    WittContext cq = ctx_g("q", 12);
    for (int it = 0; it < 4; ++it) {
        WittVector a = random_witt(cq, rng);
        CHECK(ghost_eq(ghost(a), neck_ghost(tau(a))));
    }

    // tau is multiplicative and additive
    for (long m : {-1, 0, 2}) {
        WittContext cm = ctx_m(m, 12);
        for (int it = 0; it < 3; ++it) {
            WittVector a = random_witt(cm, rng), b = random_witt(cm, rng);
            CHECK(necklace_eq(tau(witt_mul(a, b)), neck_mul(tau(a), tau(b))));
            CHECK(necklace_eq(tau(witt_add(a, b)), neck_add(tau(a), tau(b))));
        }
    }

    // inverse both ways
    WittContext c16 = ctx_g("q", 16);
    for (int it = 0; it < 3; ++it) {
        WittVector a = random_witt(c16, rng);
        CHECK(witt_eq(tau_inv(tau(a)), a));
        NecklaceVector b = random_necklace(c16, rng);
        CHECK(necklace_eq(tau(tau_inv(b)), b));
    }

    // tau over Z/k is not offered
    WittContext zk = ctx_m(0, 4, "Zmod:6");
    CHECK_THROWS_AS(tau(witt_zero(zk)), NotDivisible);
}

TEST_CASE("tau intertwines induction and restriction") {
    std::mt19937_64 rng(13);
    for (int r : {2, 3}) {
        WittContext c = ctx_m(2, 8);
        for (int it = 0; it < 3; ++it) {
            WittVector a = random_witt(c, rng);
            CHECK(necklace_eq(tau(induce(r, a)), neck_induce(r, tau(a))));
        }
        WittContext cbig = ctx_m(2, 8 * r);
        for (int it = 0; it < 3; ++it) {
            WittVector a = random_witt(cbig, rng);
            CHECK(necklace_eq(tau(witt_restrict(r, a)),
                              neck_restrict(r, tau(a))));
        }
        WittContext cq = ctx_g("q", 4 * r);
        WittVector a = random_witt(cq, rng);
        CHECK(necklace_eq(tau(induce(r, a)), neck_induce(r, tau(a))));
        CHECK(necklace_eq(tau(witt_restrict(r, a)), neck_restrict(r, tau(a))));
    }
}

TEST_CASE("product formula equals theta after tau_inv on Q-algebras") {
    // the exp route against the transported tau_inv composite
    std::mt19937_64 rng(17);
    WittContext cq = ctx_g("q", 10, "Qq");
    RingPtr zq = Ring::Zq();
    for (int it = 0; it < 3; ++it) {
        std::vector<RElem> coords;
        for (int n = 0; n < 10; ++n)
            coords.push_back(QRat(std::get<QPoly>(zq->sample(rng))));
        NecklaceVector a = make_necklace(cq, coords);
        CHECK(symmetric_product(a).series ==
              theta(transport_to_h(tau_inv(a), 0)).series);
    }
}
