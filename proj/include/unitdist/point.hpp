#pragma once

#include <vector>

#include "unitdist/tower.hpp"

namespace unitdist {

// Point of R^2 with exact tower coordinates.
struct ExactPoint2 {
    TowerElem x, y;

    friend bool operator==(const ExactPoint2& a, const ExactPoint2& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Point of C^2.
struct ComplexPoint2 {
    ComplexTowerElem x, y;

    static ComplexPoint2 embed(const ExactPoint2& p) {
        return ComplexPoint2{ComplexTowerElem(p.x), ComplexTowerElem(p.y)};
    }
    friend bool operator==(const ComplexPoint2& a, const ComplexPoint2& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// Point of C^n for the determinant propositions (n = 2, 3 in practice).
using ComplexPointN = std::vector<ComplexTowerElem>;

// phi_n: sum of squared coordinate differences. Not a metric over C^n; it is
// the quantity all determinant identities are stated in.
ComplexTowerElem phi(const ComplexPointN& p, const ComplexPointN& q);
ComplexTowerElem phi2(const ComplexPoint2& p, const ComplexPoint2& q);
TowerElem phi2(const ExactPoint2& p, const ExactPoint2& q);

// Exact equality tests phi2(a, b) == expected without materializing the
// value in canonical form; this is the hot path of witness validation and
// map checking.
bool phi2_equals(const ExactPoint2& a, const ExactPoint2& b, const TowerElem& expected);
// For complex images: true iff phi2 is real and equals expected.
bool phi2_matches(const ComplexPoint2& fa, const ComplexPoint2& fb, const TowerElem& expected);

}  // namespace unitdist
