#include "unitdist/density.hpp"

#include <optional>

#include "unitdist/errors.hpp"
#include "unitdist/interval.hpp"

namespace unitdist {

namespace {

struct Candidate {
    unsigned cost, k, l;
    bool operator<(const Candidate& o) const {
        return cost != o.cost ? cost < o.cost : k < o.k;
    }
};

}  // namespace

ApproximationResult approximate_distance(const Rational& target, const Rational& eps,
                                         unsigned max_exponent) {
    if (target.sign() <= 0) throw DomainError("target must be positive");
    if (eps.sign() <= 0) throw DomainError("eps must be positive");

    const Rational hi = target + eps;
    const Rational lo = target - eps;
    const Rational hi2 = hi * hi;
    const Rational lo2 = lo * lo;  // meaningful only when lo > 0
    const bool lo_active = lo.sign() > 0;
    const Rational shrink(8, 9);

    // For fixed l the value is strictly decreasing in k, so the cheapest
    // feasible k is the first one with value <= target + eps. Everything is
    // decided on squares, which are rational.
    std::optional<Candidate> best;
    Rational pow3(1);  // 3^l
    for (unsigned l = 0; l <= max_exponent; ++l, pow3 *= Rational(3)) {
        if (best && best->cost <= l) break;  // any solution here costs >= l
        Rational v2 = pow3;                  // (8/9)^k 3^l at k = 0
        for (unsigned k = 0; k <= max_exponent; ++k, v2 *= shrink) {
            if (hi2 < v2) continue;  // still too large
            const bool ge_lo = !lo_active || !(v2 < lo2);
            if (ge_lo) {
                Candidate c{k + l, k, l};
                if (!best || c < *best) best = c;
            }
            break;  // smaller k was infeasible, larger k only moves away
        }
    }
    if (!best)
        throw SearchExhaustedError(
            "no (k, l) within exponent bound " + std::to_string(max_exponent) +
            " approximates the target to the requested accuracy (a larger bound may)");

    ApproximationResult out;
    out.k = best->k;
    out.l = best->l;
    // exact value (2 sqrt2/3)^k (sqrt3)^l
    TowerPtr t = Tower::rationals();
    AdjoinResult r2 = adjoin_sqrt(t, TowerElem::from_rational(Rational(2)));
    t = r2.tower;
    AdjoinResult r3 = adjoin_sqrt(t, TowerElem::constant(t, Rational(3)));
    t = r3.tower;
    TowerElem value = TowerElem::one(t);
    const TowerElem step_k = r2.root.lifted_to(t) * Rational(2, 3);
    for (unsigned i = 0; i < out.k; ++i) value = value * step_k;
    for (unsigned i = 0; i < out.l; ++i) value = value * r3.root;
    out.value = value.trimmed();
    out.value_squared = Rational(1);
    for (unsigned i = 0; i < out.k; ++i) out.value_squared *= shrink;
    for (unsigned i = 0; i < out.l; ++i) out.value_squared *= Rational(3);

    // certified bound on |value - target|: interval refinement, clamped by
    // eps, which the exact comparisons above already established
    Rational bound = eps;
    for (unsigned bits = 64; bits <= 1024; bits *= 2) {
        QInterval iv = out.value.eval_interval(bits);
        Rational b = max((iv.hi() - target).abs(), (iv.lo() - target).abs());
        if (b < bound) bound = b;
        if (iv.width() * Rational(16) < eps) break;
    }
    out.error_bound = bound;
    return out;
}

std::pair<ApproximationResult, WitnessSet> witness_for_target(const Rational& target,
                                                              const Rational& eps,
                                                              unsigned max_exponent,
                                                              int depth_limit) {
    ApproximationResult a = approximate_distance(target, eps, max_exponent);
    WitnessSet s = build_canonical(DistanceWord::from_exponents(a.k, a.l), depth_limit);
    return {std::move(a), std::move(s)};
}

}  // namespace unitdist
