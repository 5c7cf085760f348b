#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitdist/errors.hpp"
#include "unitdist/interval.hpp"
#include "unitdist/prng.hpp"
#include "unitdist/tower.hpp"

using namespace unitdist;

namespace {

// Q, Q(sqrt2), Q(sqrt2)(sqrt3), Q(sqrt2)(sqrt3)(sqrt 11/12)
std::vector<TowerPtr> sample_towers() {
    std::vector<TowerPtr> ts;
    TowerPtr q = Tower::rationals();
    ts.push_back(q);
    auto s2 = adjoin_sqrt(q, TowerElem::from_rational(Rational(2)));
    REQUIRE(s2.extended);
    ts.push_back(s2.tower);
    auto s3 = adjoin_sqrt(s2.tower, TowerElem::constant(s2.tower, Rational(3)));
    REQUIRE(s3.extended);
    ts.push_back(s3.tower);
    auto g = adjoin_sqrt(s3.tower, TowerElem::constant(s3.tower, Rational(11, 12)));
    REQUIRE(g.extended);
    ts.push_back(g.tower);
    return ts;
}

TowerElem random_elem(SplitMix64& rng, const TowerPtr& t) {
    std::vector<Rational> c(size_t{1} << t->height());
    for (auto& x : c) x = rng.rational(20, 10);
    return TowerElem::from_coeffs(t, std::move(c));
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(-6, -4).str() == "3/2");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational::parse("22/7") == Rational(22, 7));
    CHECK(Rational::parse("-5") == Rational(-5));
    CHECK_THROWS_AS(Rational::parse("1/0"), StructuralError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK(Rational(1, 3).decimal(4) == "0.3333");
    CHECK(Rational(2, 3).decimal(4) == "0.6667");
    CHECK(Rational(-1, 8).decimal(2) == "-0.13");
    CHECK(Rational(5).decimal(0) == "5");
}

TEST_CASE("interval arithmetic and sqrt enclosures") {
    QInterval a(Rational(1, 2), Rational(3, 2));
    QInterval b(Rational(-1), Rational(2));
    QInterval p = a * b;
    CHECK(p.lo() == Rational(-3, 2));
    CHECK(p.hi() == Rational(3));
    CHECK(p.contains_zero());

    // sqrt(2) enclosure tightens with precision and always brackets.
    for (unsigned bits : {8u, 16u, 32u, 64u}) {
        Rational lo = sqrt_lower(Rational(2), bits);
        Rational hi = sqrt_upper(Rational(2), bits);
        CHECK(lo * lo <= Rational(2));
        CHECK(Rational(2) <= hi * hi);
        CHECK(hi - lo <= Rational(mpz_class(4), mpz_class(mpz_class(1) << bits)));
    }
    CHECK(sqrt_lower(Rational(0), 16) == Rational(0));
    CHECK(sqrt_upper(Rational(0), 16) == Rational(0));
    CHECK(sqrt_lower(Rational(4), 16) == Rational(2));
    CHECK(sqrt_upper(Rational(4), 16) == Rational(2));
}

TEST_CASE("generator products: sqrt2 * sqrt3 = sqrt6") {
    auto ts = sample_towers();
    const TowerPtr& t23 = ts[2];
    auto r2 = adjoin_sqrt(t23, TowerElem::constant(t23, Rational(2)));
    auto r3 = adjoin_sqrt(t23, TowerElem::constant(t23, Rational(3)));
    CHECK_FALSE(r2.extended);
    CHECK_FALSE(r3.extended);
    TowerElem prod = r2.root * r3.root;
    CHECK(prod.square() == TowerElem::constant(t23, Rational(6)));
    // and sqrt(6) is found inside the tower rather than extending it
    auto r6 = adjoin_sqrt(t23, TowerElem::constant(t23, Rational(6)));
    CHECK_FALSE(r6.extended);
    CHECK(r6.root == prod);
}

TEST_CASE("conjugate product (1+sqrt3)(1-sqrt3) = -2") {
    auto ts = sample_towers();
    auto r3 = adjoin_sqrt(ts[1], TowerElem::constant(ts[1], Rational(3)));
    TowerElem one = TowerElem::one(r3.tower);
    CHECK((one + r3.root) * (one - r3.root) == TowerElem::constant(r3.tower, Rational(-2)));
}

TEST_CASE("inverse examples") {
    auto ts = sample_towers();
    auto r3 = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(3)));
    // inverse(sqrt3) = sqrt3/3
    CHECK(r3.root.inverse() == r3.root * Rational(1, 3));
    CHECK(TowerElem::one(ts[0]).inverse() == TowerElem::one(ts[0]));
    // inverse(2 sqrt2 / 3) = 3 sqrt2 / 4, confirmed by multiplying out
    auto r2 = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(2)));
    TowerElem v = r2.root * Rational(2, 3);
    TowerElem vinv = v.inverse();
    CHECK(vinv == r2.root * Rational(3, 4));
    CHECK(v * vinv == TowerElem::one(r2.tower));
    CHECK_THROWS_AS(TowerElem::zero(ts[2]).inverse(), DomainError);
}

TEST_CASE("sign determination") {
    auto r2 = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(2)));
    TowerElem one = TowerElem::one(r2.tower);
    CHECK((r2.root - one).sign() == 1);
    CHECK(TowerElem().sign() == 0);
    // 2 sqrt2 - 3 < 0 because 8 < 9
    CHECK((r2.root * Rational(2) - one * Rational(3)).sign() == -1);
}

TEST_CASE("adjoin_sqrt examples") {
    // perfect square: tower unchanged
    auto four = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(4)));
    CHECK_FALSE(four.extended);
    CHECK(four.root == TowerElem::from_rational(Rational(2)));

    // existing generator: tower unchanged
    auto r3 = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(3)));
    auto again = adjoin_sqrt(r3.tower, TowerElem::constant(r3.tower, Rational(3)));
    CHECK_FALSE(again.extended);
    CHECK(again.root == r3.root);

    // height of y-tilde in the first two-rhombus construction at d=1
    auto g = adjoin_sqrt(r3.tower, TowerElem::constant(r3.tower, Rational(11, 12)));
    CHECK(g.extended);
    CHECK(g.root.square() == TowerElem::constant(g.tower, Rational(11, 12)));
    CHECK(g.root.sign() == 1);

    CHECK_THROWS_AS(adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(-1))),
                    DomainError);
    CHECK_THROWS_AS(adjoin_sqrt(Tower::rationals(), TowerElem()), DomainError);
}

TEST_CASE("squares found through mixed levels") {
    // 11/4 = (11/12) * 3 is a square in Q(sqrt3)(g), root = g*sqrt3
    auto r3 = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(3)));
    auto g = adjoin_sqrt(r3.tower, TowerElem::constant(r3.tower, Rational(11, 12)));
    auto s = adjoin_sqrt(g.tower, TowerElem::constant(g.tower, Rational(11, 4)));
    CHECK_FALSE(s.extended);
    CHECK(s.root.square() == TowerElem::constant(g.tower, Rational(11, 4)));
    CHECK(s.root.sign() == 1);
}

TEST_CASE("approximate") {
    auto r3 = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(3)));
    QInterval iv = r3.root.approximate(3);
    CHECK(iv.width() <= Rational(1, 1000));
    CHECK(iv.lo() <= Rational(17321, 10000));
    CHECK(Rational(17320, 10000) <= iv.hi());

    QInterval z = TowerElem().approximate(10);
    CHECK(z.lo() == Rational(0));
    CHECK(z.hi() == Rational(0));

    auto r2 = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(2)));
    QInterval v = (r2.root * Rational(2, 3)).approximate(4);
    CHECK(v.width() <= Rational(1, 10000));
    CHECK(v.lo() <= Rational(9429, 10000));
    CHECK(Rational(9428, 10000) <= v.hi());
}

TEST_CASE("field axioms hold on random elements") {
    auto ts = sample_towers();
    SplitMix64 rng(20240817);
    for (size_t ti = 0; ti < ts.size(); ++ti) {
        const TowerPtr& t = ts[ti];
        const int trials = 1000 / static_cast<int>(ts.size()) + 260;  // >= 1000 total
        for (int i = 0; i < trials; ++i) {
            TowerElem a = random_elem(rng, t);
            TowerElem b = random_elem(rng, t);
            TowerElem c = random_elem(rng, t);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * b == b * a);
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a.square() == a * a);
            if (!a.is_zero()) CHECK(a * a.inverse() == TowerElem::one(t));
            // canonical-form uniqueness: equality iff difference is the zero tree
            CHECK(((a - b).is_zero()) == (a == b));
        }
    }
}

TEST_CASE("sign agrees with interval refinement") {
    auto ts = sample_towers();
    SplitMix64 rng(99);
    for (int i = 0; i < 200; ++i) {
        TowerElem a = random_elem(rng, ts[3]);
        int s = a.sign();
        if (s == 0) {
            CHECK(a.is_zero());
            continue;
        }
        for (unsigned bits = 32;; bits *= 2) {
            QInterval iv = a.eval_interval(bits);
            if (!iv.contains_zero()) {
                CHECK((iv.is_positive() ? 1 : -1) == s);
                break;
            }
            REQUIRE(bits < (1u << 20));
        }
    }
}

TEST_CASE("adjoined roots square back exactly") {
    SplitMix64 rng(7);
    TowerPtr t = Tower::rationals();
    for (int i = 0; i < 40; ++i) {
        TowerElem r = TowerElem::constant(t, rng.rational(50, 20).abs() + Rational(1, 7));
        auto adj = adjoin_sqrt(t, r);
        CHECK(adj.root.square() == r.lifted_to(adj.tower));
        CHECK(adj.root.sign() == 1);
        if (adj.tower->height() < 4) t = adj.tower;
    }
}

TEST_CASE("cross-tower operations require a prefix relation") {
    auto a = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(2)));
    auto b = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(3)));
    TowerElem x = a.root;
    TowerElem y = b.root;
    CHECK_THROWS_AS((void)(x + y), StructuralError);
    CHECK_THROWS_AS((void)(x == y), StructuralError);
    // but an element embeds into any extension of its own tower
    auto c = adjoin_sqrt(a.tower, TowerElem::constant(a.tower, Rational(3)));
    CHECK(x.lifted_to(c.tower) + c.root == c.root + x.lifted_to(c.tower));
}

TEST_CASE("trimmed serialization is stable across lifting") {
    auto r2 = adjoin_sqrt(Tower::rationals(), TowerElem::from_rational(Rational(2)));
    auto r3 = adjoin_sqrt(r2.tower, TowerElem::constant(r2.tower, Rational(3)));
    TowerElem x = r2.root * Rational(5, 3);
    CHECK(x.ser() == x.lifted_to(r3.tower).ser());
    CHECK(TowerElem::from_rational(Rational(7, 2)).ser() ==
          TowerElem::constant(r3.tower, Rational(7, 2)).ser());
}

TEST_CASE("complex conjugation is an involutive ring map") {
    auto ts = sample_towers();
    SplitMix64 rng(4242);
    for (int i = 0; i < 300; ++i) {
        ComplexTowerElem z(random_elem(rng, ts[2]), random_elem(rng, ts[2]));
        ComplexTowerElem w(random_elem(rng, ts[2]), random_elem(rng, ts[2]));
        CHECK(z.conj().conj() == z);
        CHECK((z * w).conj() == z.conj() * w.conj());
        CHECK((z + w).conj() == z.conj() + w.conj());
        if (!z.is_zero()) CHECK(z * z.inverse() == ComplexTowerElem(TowerElem::one(ts[2])));
    }
    // equality is componentwise
    ComplexTowerElem i = ComplexTowerElem::from_rationals(Rational(0), Rational(1));
    CHECK(i.square() == ComplexTowerElem::from_rationals(Rational(-1), Rational(0)));
    CHECK(i != i.conj());
}
