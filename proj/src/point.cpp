#include "unitdist/point.hpp"

#include "unitdist/errors.hpp"
#include "zkernel.hpp"

namespace unitdist {

ComplexTowerElem phi(const ComplexPointN& p, const ComplexPointN& q) {
    if (p.size() != q.size() || p.empty())
        throw StructuralError("phi requires two points of the same nonzero dimension");
    ComplexTowerElem acc = (p[0] - q[0]).square();
    for (size_t i = 1; i < p.size(); ++i) acc = acc + (p[i] - q[i]).square();
    return acc;
}

ComplexTowerElem phi2(const ComplexPoint2& p, const ComplexPoint2& q) {
    return (p.x - q.x).square() + (p.y - q.y).square();
}

TowerElem phi2(const ExactPoint2& p, const ExactPoint2& q) {
    return (p.x - q.x).square() + (p.y - q.y).square();
}

namespace {

TowerPtr fold_tower(std::initializer_list<const TowerElem*> elems) {
    TowerPtr t = Tower::rationals();
    for (const TowerElem* e : elems) t = common_tower(t, e->tower());
    return t;
}

// x^2 - y^2 with one shared denominator; used for difference-of-squares sums.
zk::ZVec zsq(const zk::ZVec& v, const std::vector<zk::ZLevel>& levels) {
    return zk::zmul(v, v, levels);
}

bool zvec_equals_elem(const zk::ZVec& v, const TowerElem& expected, const Tower* target) {
    zk::ZVec e = zk::to_zvec(expected, target);
    for (size_t i = 0; i < v.num.size(); ++i)
        if (v.num[i] * e.den != e.num[i] * v.den) return false;
    return true;
}

}  // namespace

bool phi2_equals(const ExactPoint2& a, const ExactPoint2& b, const TowerElem& expected) {
    TowerPtr t = fold_tower({&a.x, &a.y, &b.x, &b.y, &expected});
    const Tower* tw = t.get();
    const auto levels = zk::zlevels(tw);
    zk::ZVec dx = zk::zsub(zk::to_zvec(a.x, tw), zk::to_zvec(b.x, tw));
    zk::ZVec dy = zk::zsub(zk::to_zvec(a.y, tw), zk::to_zvec(b.y, tw));
    zk::ZVec v = zk::zadd(zsq(dx, levels), zsq(dy, levels));
    return zvec_equals_elem(v, expected, tw);
}

bool phi2_matches(const ComplexPoint2& fa, const ComplexPoint2& fb, const TowerElem& expected) {
    TowerPtr t = fold_tower({&fa.x.re(), &fa.x.im(), &fa.y.re(), &fa.y.im(), &fb.x.re(),
                             &fb.x.im(), &fb.y.re(), &fb.y.im(), &expected});
    const Tower* tw = t.get();
    const auto levels = zk::zlevels(tw);
    zk::ZVec rx = zk::zsub(zk::to_zvec(fa.x.re(), tw), zk::to_zvec(fb.x.re(), tw));
    zk::ZVec ix = zk::zsub(zk::to_zvec(fa.x.im(), tw), zk::to_zvec(fb.x.im(), tw));
    zk::ZVec ry = zk::zsub(zk::to_zvec(fa.y.re(), tw), zk::to_zvec(fb.y.re(), tw));
    zk::ZVec iy = zk::zsub(zk::to_zvec(fa.y.im(), tw), zk::to_zvec(fb.y.im(), tw));
    // imaginary part: 2 (rx ix + ry iy) must vanish
    zk::ZVec im = zk::zadd(zk::zmul(rx, ix, levels), zk::zmul(ry, iy, levels));
    if (!zk::zis_zero(im)) return false;
    // real part: rx^2 - ix^2 + ry^2 - iy^2
    zk::ZVec re = zk::zsub(zk::zadd(zsq(rx, levels), zsq(ry, levels)),
                           zk::zadd(zsq(ix, levels), zsq(iy, levels)));
    return zvec_equals_elem(re, expected, tw);
}

}  // namespace unitdist
