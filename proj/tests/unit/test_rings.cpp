#include <doctest.h>

#include "helpers.hpp"
#include "qwitt/errors.hpp"

using namespace qwitt;
using namespace qwitt::testutil;

TEST_CASE("psi operations") {
    RingPtr Zq = Ring::Zq();
    CHECK(Zq->eq(Zq->psi(3, Zq->parse("1+q+q^2")), Zq->parse("1+q^3+q^6")));
    RingPtr Z = Ring::Z();
    CHECK(Z->eq(Z->psi(7, Z->from_long(5)), Z->from_long(5)));
    std::mt19937_64 rng(5);
    for (const char* sel : {"Z", "Q", "Zq", "Qq", "Zmod:6"}) {
        RingPtr r = Ring::make(sel);
        RElem x = r->sample(rng);
        CHECK(r->eq(r->psi(1, x), x));
    }
    RingPtr nopsi = Ring::without_psi(Ring::Z());
    CHECK_THROWS_AS(nopsi->psi(2, nopsi->one()), NoPsiStructure);
}

TEST_CASE("exact division") {
    RingPtr Zq = Ring::Zq();
    CHECK(Zq->eq(Zq->div_exact(Zq->parse("1-q^2"), Zq->parse("1-q")),
                 Zq->parse("1+q")));
    RingPtr Z = Ring::Z();
    CHECK(Z->eq(Z->div_exact(Z->from_long(6), Int(3)), Z->from_long(2)));
    CHECK_THROWS_AS(Zq->div_exact(Zq->parse("q-q^3"), Int(2)), NotDivisible);
    // div_exact(x*d, d) = x on torsion-free instances
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> dd(1, 9);
    for (const char* sel : {"Z", "Q", "Zq", "Qq"}) {
        RingPtr r = Ring::make(sel);
        for (int it = 0; it < 40; ++it) {
            RElem x = r->sample(rng);
            Int d(dd(rng));
            CHECK(r->eq(r->div_exact(r->mul(x, r->from_int(d)), d), x));
        }
    }
    RingPtr zm = Ring::Zmod(Int(6));
    CHECK_THROWS_AS(zm->div_exact(zm->from_long(4), Int(2)), NotDivisible);
}

TEST_CASE("ring self checks") {
    for (const char* sel : {"Z", "Q", "Zq", "Qq", "Zmod:4", "Zmod:9"}) {
        CAPTURE(sel);
        CHECK(Ring::make(sel)->self_check(2024, 48));
    }
    CHECK(Ring::without_psi(Ring::Zq())->self_check(2024, 16));
}

TEST_CASE("capability flags") {
    RingPtr zm = Ring::Zmod(Int(6));
    CHECK(!zm->has_rational_extension());
    CHECK(!zm->is_torsion_free());
    CHECK(zm->has_psi());
    CHECK(Ring::Z()->is_torsion_free());
    CHECK(Ring::Zq()->is_q_algebra());
    CHECK(!Ring::Q()->is_q_algebra());
    CHECK(Ring::Qq()->has_rational_division());
    CHECK(!Ring::Zq()->has_rational_division());
    // the ghost path is rejected at construction time for Z/k
    WittContext c = ctx_m(0, 4, "Zmod:6");
    CHECK_THROWS_AS(c.extension_ctx(), NotDivisible);
}

TEST_CASE("element text round-trips") {
    std::mt19937_64 rng(13);
    for (const char* sel : {"Z", "Q", "Zq", "Qq", "Zmod:11"}) {
        RingPtr r = Ring::make(sel);
        for (int it = 0; it < 30; ++it) {
            RElem x = r->sample(rng);
            CHECK(r->eq(r->parse(r->to_string(x)), x));
        }
    }
    CHECK_THROWS_AS(Ring::Z()->parse("q"), ParseError);
    CHECK_THROWS_AS(Ring::Zq()->parse("1/(1-q)"), ParseError);
}

TEST_CASE("rational extension membership") {
    RingPtr Zq = Ring::Zq();
    RingPtr ext = Zq->extension();
    CHECK(ext->name() == "Qq");
    RElem e = Zq->embed(Zq->parse("1+q"));
    CHECK(Zq->contract(e).has_value());
    RElem half = ext->mul(e, *ext->from_qrat(R("1/2")));
    CHECK(!Zq->contract(half).has_value());
}
