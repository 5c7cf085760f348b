#include "unitdist/verifier.hpp"

#include "unitdist/cayley_menger.hpp"
#include "unitdist/errors.hpp"
#include "zkernel.hpp"

namespace unitdist {

const ComplexPoint2& PointMap::at(const Label& l) const {
    auto it = assignment.find(l);
    if (it == assignment.end())
        throw StructuralError("point map is missing label " + l.hex());
    return it->second;
}

bool PointMap::total_on(const WitnessSet& s) const {
    for (const auto& [l, p] : s.points())
        if (!assignment.count(l)) return false;
    return true;
}

VerificationReport check_map(const WitnessSet& s, const PointMap& f) {
    VerificationReport rep;
    rep.pair_results.reserve(s.pairs().size());
    for (const auto& pr : s.pairs()) {
        PairCheck c;
        c.a = pr.a;
        c.b = pr.b;
        c.role = pr.role;
        c.declared = s.dist(pr.dist);
        c.computed = phi2(f.at(pr.a), f.at(pr.b));
        c.match = c.computed.is_real() && c.computed.re() == c.declared;
        if (pr.role == PairRole::Unit && !c.match) rep.unit_ok = false;
        rep.pair_results.push_back(std::move(c));
    }
    const WitnessPair& ep = s.endpoint_pair();
    rep.endpoint_declared = s.dist(ep.dist);
    rep.endpoint_phi = phi2(f.at(s.endpoint_x()), f.at(s.endpoint_y()));
    rep.endpoint_match = rep.endpoint_phi.is_real() && rep.endpoint_phi.re() == rep.endpoint_declared;
    return rep;
}

ConsistencySummary check_consistency(const WitnessSet& s, const PointMap& f) {
    // one conversion per image point, then integer-only work per pair
    TowerPtr target = s.tower();
    for (const auto& [l, p] : f.assignment) {
        target = common_tower(target, p.x.re().tower());
        target = common_tower(target, p.x.im().tower());
        target = common_tower(target, p.y.re().tower());
        target = common_tower(target, p.y.im().tower());
    }
    const Tower* tw = target.get();
    zk::PhiChecker checker(tw);
    std::unordered_map<Label, std::array<zk::ZVec, 4>, LabelHash> zc;
    zc.reserve(s.points().size());
    for (const auto& [l, p] : s.points()) {
        const ComplexPoint2& q = f.at(l);
        zc.emplace(l, std::array<zk::ZVec, 4>{zk::to_zvec(q.x.re(), tw), zk::to_zvec(q.x.im(), tw),
                                              zk::to_zvec(q.y.re(), tw), zk::to_zvec(q.y.im(), tw)});
    }
    std::vector<zk::ZVec> zd;
    zd.reserve(s.dist_pool().size());
    for (const auto& d : s.dist_pool()) zd.push_back(zk::to_zvec(d, tw));

    ConsistencySummary out;
    for (const auto& pr : s.pairs()) {
        if (pr.role != PairRole::Unit) continue;
        if (!checker.complex_pair(zc.at(pr.a), zc.at(pr.b), zd[pr.dist])) out.unit_ok = false;
    }
    const WitnessPair& ep = s.endpoint_pair();
    out.endpoint_match =
        checker.complex_pair(zc.at(s.endpoint_x()), zc.at(s.endpoint_y()), zd[ep.dist]);
    return out;
}

bool theorem_consistency(const WitnessSet& s, const PointMap& f) {
    return check_consistency(s, f).consistent();
}

namespace {
ComplexPointN as_n(const ComplexPoint2& p) { return {p.x, p.y}; }
}  // namespace

bool prop3a(const ComplexPoint2& c1, const ComplexPoint2& c2, const ComplexPoint2& c3,
            const ComplexTowerElem& s) {
    if (s.is_zero() || !s.is_real() || s.re().sign() <= 0)
        throw PreconditionError("common phi value must lie in (0, infinity)");
    if (phi2(c1, c2) != s || phi2(c1, c3) != s || phi2(c2, c3) != s)
        throw PreconditionError("pairwise phi values do not all equal s");
    return !affinely_dependent({as_n(c1), as_n(c2), as_n(c3)});
}

bool prop3b(const ComplexPoint2& c1, const ComplexPoint2& c2, const ComplexPoint2& c3,
            const TowerElem& d2) {
    if (d2.is_zero()) throw PreconditionError("d^2 must be nonzero");
    const ComplexTowerElem d2c{d2};
    if (phi2(c1, c2) != d2c * ComplexTowerElem(TowerElem::from_rational(Rational(2))) ||
        phi2(c1, c3) != d2c * ComplexTowerElem(TowerElem::from_rational(Rational(3))) ||
        phi2(c2, c3) != d2c * ComplexTowerElem(TowerElem::from_rational(Rational(9))))
        throw PreconditionError("phi values are not (2 d^2, 3 d^2, 9 d^2)");
    const ComplexTowerElem cm = cm_det({as_n(c1), as_n(c2), as_n(c3)});
    const TowerElem expected = d2.square() * Rational(-8);
    if (cm != ComplexTowerElem(expected))
        throw Error("Cayley-Menger value of the (2,3,9) triangle is not -8 d^4");
    return !cm.is_zero();
}

bool prop4_check(const ComplexPoint2& x, const ComplexPoint2& y, const ComplexPoint2& c0,
                 const ComplexPoint2& c1, const ComplexPoint2& c2) {
    if (phi2(x, c0) != phi2(y, c0) || phi2(x, c1) != phi2(y, c1) || phi2(x, c2) != phi2(y, c2))
        throw PreconditionError("x and y are not phi-equidistant from all three points");
    if (affinely_dependent({as_n(c0), as_n(c1), as_n(c2)}))
        throw PreconditionError("c0, c1, c2 must be affinely independent");
    return x == y;
}

ComplexPoint2 Isometry::apply(const ComplexPoint2& p) const {
    ComplexPoint2 q = conjugate_first ? ComplexPoint2{p.x.conj(), p.y.conj()} : p;
    if (reflection)
        return ComplexPoint2{a * q.x + b * q.y + vx, b * q.x - a * q.y + vy};
    return ComplexPoint2{a * q.x - b * q.y + vx, b * q.x + a * q.y + vy};
}

bool Isometry::orthogonal() const {
    const ComplexTowerElem one{TowerElem::from_rational(Rational(1))};
    return a.square() + b.square() == one;
}

Isometry IsometryGenerator::from_parameter(const ComplexTowerElem& t, bool reflection) {
    const ComplexTowerElem one{TowerElem::from_rational(Rational(1))};
    ComplexTowerElem den = one + t.square();
    if (den.is_zero()) throw DomainError("tan-half-angle parameter t with 1 + t^2 = 0");
    ComplexTowerElem deninv = den.inverse();
    Isometry iso;
    iso.a = (one - t.square()) * deninv;
    iso.b = (t + t) * deninv;
    iso.reflection = reflection;
    iso.vx = ComplexTowerElem(TowerElem());
    iso.vy = ComplexTowerElem(TowerElem());
    return iso;
}

Isometry IsometryGenerator::next() {
    // small parameters keep exact arithmetic fast without losing coverage
    const int64_t N = 12;
    ComplexTowerElem t;
    for (;;) {
        Rational re = rng_.rational(N, 6);
        Rational im = rng_.coin() ? rng_.rational(N, 6) : Rational(0);
        t = ComplexTowerElem::from_rationals(re, im);
        const ComplexTowerElem one{TowerElem::from_rational(Rational(1))};
        if (!(one + t.square()).is_zero()) break;
    }
    Isometry iso = from_parameter(t, rng_.coin());
    iso.conjugate_first = rng_.uniform(0, 7) == 0;
    iso.vx = ComplexTowerElem::from_rationals(rng_.rational(N, 6),
                                              rng_.coin() ? rng_.rational(N, 6) : Rational(0));
    iso.vy = ComplexTowerElem::from_rationals(rng_.rational(N, 6),
                                              rng_.coin() ? rng_.rational(N, 6) : Rational(0));
    return iso;
}

PointMap apply_isometry(const WitnessSet& s, const Isometry& iso) {
    PointMap f;
    for (const auto& [l, p] : s.points())
        f.assignment.emplace(l, iso.apply(ComplexPoint2::embed(p)));
    return f;
}

PointMap apply_scaling(const WitnessSet& s, const Rational& factor) {
    PointMap f;
    const TowerElem c = TowerElem::from_rational(factor);
    const ComplexTowerElem cc{c};
    for (const auto& [l, p] : s.points()) {
        ComplexPoint2 q = ComplexPoint2::embed(p);
        f.assignment.emplace(l, ComplexPoint2{cc * q.x, cc * q.y});
    }
    return f;
}

}  // namespace unitdist
