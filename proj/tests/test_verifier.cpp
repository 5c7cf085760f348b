#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "unitdist/builder.hpp"
#include "unitdist/errors.hpp"
#include "unitdist/verifier.hpp"

using namespace unitdist;

namespace {
TowerElem rat(long n, long d = 1) { return TowerElem::from_rational(Rational(n, d)); }
ComplexTowerElem cx(Rational re, Rational im = Rational(0)) {
    return ComplexTowerElem::from_rationals(std::move(re), std::move(im));
}
DistanceWord W(unsigned k, unsigned l) { return DistanceWord::from_exponents(k, l); }
}  // namespace

TEST_CASE("identity embedding passes check_map") {
    WitnessSet s = build_canonical(W(0, 1));
    PointMap f;
    for (const auto& [l, p] : s.points()) f.assignment.emplace(l, ComplexPoint2::embed(p));
    VerificationReport rep = check_map(s, f);
    CHECK(rep.unit_ok);
    CHECK(rep.endpoint_match);
    CHECK(rep.consistent());
    for (const auto& c : rep.pair_results) CHECK(c.match);
}

TEST_CASE("composite of rotation, complex translation and complex-orthogonal map") {
    WitnessSet s = build_canonical(W(0, 1));
    Isometry rot;  // (a, b) = (3/5, 4/5)
    rot.a = cx(Rational(3, 5));
    rot.b = cx(Rational(4, 5));
    rot.vx = cx(Rational(0));
    rot.vy = cx(Rational(0));
    CHECK(rot.orthogonal());
    Isometry trans;  // pure translation by (7i, -i/3)
    trans.a = cx(Rational(1));
    trans.b = cx(Rational(0));
    trans.vx = cx(Rational(0), Rational(7));
    trans.vy = cx(Rational(0), Rational(-1, 3));
    Isometry cplx;  // [[5/4, -3i/4], [3i/4, 5/4]]
    cplx.a = cx(Rational(5, 4));
    cplx.b = cx(Rational(0), Rational(3, 4));
    cplx.vx = cx(Rational(0));
    cplx.vy = cx(Rational(0));
    CHECK(cplx.orthogonal());

    PointMap f;
    for (const auto& [l, p] : s.points())
        f.assignment.emplace(l, cplx.apply(trans.apply(rot.apply(ComplexPoint2::embed(p)))));
    VerificationReport rep = check_map(s, f);
    CHECK(rep.unit_ok);
    CHECK(rep.endpoint_match);
    for (const auto& c : rep.pair_results) CHECK(c.match);
}

TEST_CASE("scaling by two violates every unit pair but stays consistent") {
    WitnessSet s = build_canonical(W(0, 1));
    PointMap f = apply_scaling(s, Rational(2));
    VerificationReport rep = check_map(s, f);
    CHECK_FALSE(rep.unit_ok);
    CHECK_FALSE(rep.endpoint_match);
    for (const auto& c : rep.pair_results) {
        CHECK_FALSE(c.match);
        if (c.role == PairRole::Unit) CHECK(c.computed == ComplexTowerElem(rat(4)));
    }
    CHECK(theorem_consistency(s, f));  // vacuous: the premise fails
}

TEST_CASE("a single moved point is reported as exactly its pairs") {
    WitnessSet u1 = build_canonical(W(0, 0));
    WitnessSet u2 = build_between(ExactPoint2{rat(1), rat(0)}, ExactPoint2{rat(2), rat(0)}, W(0, 0));
    WitnessSet s = WitnessSet::merge({u1, u2});
    REQUIRE(s.points().size() == 3);
    REQUIRE(s.pairs().size() == 2);
    Label far = WitnessSet::label_of(ExactPoint2{rat(2), rat(0)});
    PointMap f;
    for (const auto& [l, p] : s.points())
        f.assignment.emplace(l, l == far ? ComplexPoint2{cx(Rational(3)), cx(Rational(0))}
                                         : ComplexPoint2::embed(p));
    VerificationReport rep = check_map(s, f);
    CHECK_FALSE(rep.unit_ok);
    size_t bad = 0;
    for (const auto& c : rep.pair_results)
        if (!c.match) {
            ++bad;
            CHECK((c.a == far || c.b == far));
        }
    CHECK(bad == 1);
}

TEST_CASE("missing label raises a structural error") {
    WitnessSet s = build_canonical(W(0, 1));
    PointMap f;
    CHECK_THROWS_AS(check_map(s, f), StructuralError);
}

TEST_CASE("generated isometries are exactly orthogonal and conserve the theorem") {
    WitnessSet s = build_canonical(W(0, 1));
    IsometryGenerator gen(42);
    for (int i = 0; i < 300; ++i) {
        Isometry iso = gen.next();
        CHECK(iso.orthogonal());
        PointMap f = apply_isometry(s, iso);
        VerificationReport rep = check_map(s, f);
        CHECK(rep.unit_ok);
        CHECK(rep.endpoint_match);
    }
}

TEST_CASE("the required non-real parameter a=5/4, b=3i/4 arises from t=i/3") {
    Isometry iso = IsometryGenerator::from_parameter(cx(Rational(0), Rational(1, 3)), false);
    CHECK(iso.a == cx(Rational(5, 4)));
    CHECK(iso.b == cx(Rational(0), Rational(3, 4)));
    CHECK(iso.orthogonal());
    WitnessSet s = build_canonical(W(1, 0));
    PointMap f = apply_isometry(s, iso);
    CHECK(theorem_consistency(s, f));
    CHECK_THROWS_AS(IsometryGenerator::from_parameter(cx(Rational(0), Rational(1)), false),
                    DomainError);
}

TEST_CASE("conjugation composed with an isometry is the identity story on real sets") {
    WitnessSet s = build_canonical(W(0, 1));
    IsometryGenerator gen(7);
    Isometry iso = gen.next();
    iso.conjugate_first = true;
    PointMap f = apply_isometry(s, iso);
    VerificationReport rep = check_map(s, f);
    CHECK(rep.unit_ok);
    CHECK(rep.endpoint_match);
}

TEST_CASE("prop3a on isometric images of real equilateral triangles") {
    // side^2 = sigma > 0 rational; image under a complex isometry keeps phi
    IsometryGenerator gen(99);
    SplitMix64 rng(1234);
    for (int i = 0; i < 50; ++i) {
        Rational side2 = rng.rational(30, 9).abs() + Rational(1, 3);
        TowerPtr t = Tower::rationals();
        AdjoinResult side = adjoin_sqrt(t, TowerElem::from_rational(side2));
        t = side.tower;
        AdjoinResult h = adjoin_sqrt(t, TowerElem::constant(t, side2 * Rational(3, 4)));
        t = h.tower;
        ComplexPoint2 c1{ComplexTowerElem(TowerElem::zero(t)), ComplexTowerElem(TowerElem::zero(t))};
        ComplexPoint2 c2{ComplexTowerElem(side.root.lifted_to(t)), ComplexTowerElem(TowerElem::zero(t))};
        ComplexPoint2 c3{ComplexTowerElem(side.root.lifted_to(t) * Rational(1, 2)),
                         ComplexTowerElem(h.root)};
        Isometry iso = gen.next();
        c1 = iso.apply(c1);
        c2 = iso.apply(c2);
        c3 = iso.apply(c3);
        CHECK(prop3a(c1, c2, c3, ComplexTowerElem(TowerElem::from_rational(side2))));
    }
    // premise violations
    ComplexPoint2 p{cx(Rational(0)), cx(Rational(0))};
    ComplexPoint2 q{cx(Rational(1)), cx(Rational(0))};
    ComplexPoint2 r{cx(Rational(2)), cx(Rational(0))};
    CHECK_THROWS_AS(prop3a(p, q, r, ComplexTowerElem(rat(1))), PreconditionError);
    CHECK_THROWS_AS(prop3a(p, q, r, ComplexTowerElem(rat(0))), PreconditionError);
}

TEST_CASE("prop3b on the exact (2,3,9) triangle family") {
    // x=(0,0), p1=(sqrt2 d/3, 5d/3), p2=(sqrt2 d/3, -4d/3) realizes
    // phi(x,p2)=2d^2, phi(x,p1)=3d^2, phi(p2,p1)=9d^2
    auto r2 = adjoin_sqrt(Tower::rationals(), rat(2));
    IsometryGenerator gen(5);
    SplitMix64 rng(77);
    for (int i = 0; i < 50; ++i) {
        Rational d = rng.rational(12, 5).abs() + Rational(1, 5);
        TowerElem dd = TowerElem::constant(r2.tower, d);
        ComplexPoint2 x{ComplexTowerElem(TowerElem::zero(r2.tower)),
                        ComplexTowerElem(TowerElem::zero(r2.tower))};
        ComplexPoint2 p1{ComplexTowerElem(r2.root * (d / Rational(3))),
                         ComplexTowerElem(dd * Rational(5, 3))};
        ComplexPoint2 p2{ComplexTowerElem(r2.root * (d / Rational(3))),
                         ComplexTowerElem(dd * Rational(-4, 3))};
        Isometry iso = gen.next();
        ComplexPoint2 c1 = iso.apply(x), c2 = iso.apply(p2), c3 = iso.apply(p1);
        CHECK(prop3b(c1, c2, c3, dd.square()));
    }
    // d = 0 violates the premise
    ComplexPoint2 o{cx(Rational(0)), cx(Rational(0))};
    CHECK_THROWS_AS(prop3b(o, o, o, rat(0)), PreconditionError);
    // wrong ratios violate the premise
    ComplexPoint2 q{cx(Rational(1)), cx(Rational(0))};
    CHECK_THROWS_AS(prop3b(o, q, q, rat(1)), PreconditionError);
}

TEST_CASE("prop4: premises force x == y") {
    SplitMix64 rng(31415);
    // equal points: premises hold trivially for any independent c's
    for (int i = 0; i < 50; ++i) {
        ComplexPoint2 x{cx(rng.rational(9, 4), rng.rational(9, 4)),
                        cx(rng.rational(9, 4), rng.rational(9, 4))};
        ComplexPoint2 c0{cx(rng.rational(9, 4)), cx(rng.rational(9, 4))};
        ComplexPoint2 c1{c0.x + cx(rng.nonzero_rational(9, 4)), c0.y};
        ComplexPoint2 c2{c0.x, c0.y + cx(rng.nonzero_rational(9, 4))};
        CHECK(prop4_check(x, x, c0, c1, c2));
    }
    // contrapositive: for random x != y the three equalities cannot all hold
    int premise_failures = 0;
    for (int i = 0; i < 200; ++i) {
        ComplexPoint2 x{cx(rng.rational(9, 4), rng.rational(9, 4)),
                        cx(rng.rational(9, 4), rng.rational(9, 4))};
        ComplexPoint2 y{x.x + cx(rng.nonzero_rational(9, 4)),
                        x.y + cx(rng.rational(9, 4), rng.rational(9, 4))};
        ComplexPoint2 c0{cx(rng.rational(9, 4)), cx(rng.rational(9, 4))};
        ComplexPoint2 c1{c0.x + cx(rng.nonzero_rational(9, 4)), c0.y};
        ComplexPoint2 c2{c0.x, c0.y + cx(rng.nonzero_rational(9, 4))};
        bool eq = phi2(x, c0) == phi2(y, c0) && phi2(x, c1) == phi2(y, c1) &&
                  phi2(x, c2) == phi2(y, c2);
        if (!eq) ++premise_failures;
        else CHECK(prop4_check(x, y, c0, c1, c2) == false);  // would falsify the proposition
    }
    CHECK(premise_failures == 200);
}

TEST_CASE("prop4 perpendicularity witness: two equalities force exact orthogonality") {
    SplitMix64 rng(2718);
    for (int i = 0; i < 100; ++i) {
        // s real nonzero; m arbitrary; c_i = m + u_i * perp(s) gives
        // phi(x, c_i) = phi(y, c_i) for x = m + s/2, y = m - s/2
        ComplexTowerElem s1 = cx(rng.nonzero_rational(9, 4));
        ComplexTowerElem s2 = cx(rng.rational(9, 4));
        ComplexPoint2 m{cx(rng.rational(9, 4), rng.rational(9, 4)),
                        cx(rng.rational(9, 4), rng.rational(9, 4))};
        ComplexTowerElem u0 = cx(rng.rational(9, 4), rng.rational(9, 4));
        ComplexTowerElem u1 = cx(rng.nonzero_rational(9, 4), rng.rational(9, 4));
        const ComplexTowerElem half = cx(Rational(1, 2));
        ComplexPoint2 x{m.x + s1 * half, m.y + s2 * half};
        ComplexPoint2 y{m.x - s1 * half, m.y - s2 * half};
        ComplexPoint2 c0{m.x - s2 * u0, m.y + s1 * u0};
        ComplexPoint2 c1{m.x - s2 * u1, m.y + s1 * u1};
        REQUIRE(phi2(x, c0) == phi2(y, c0));
        REQUIRE(phi2(x, c1) == phi2(y, c1));
        // the difference vector is bilinear-orthogonal to c1 - c0
        ComplexTowerElem dot = (x.x - y.x) * (c1.x - c0.x) + (x.y - y.y) * (c1.y - c0.y);
        CHECK(dot.is_zero());
    }
}
