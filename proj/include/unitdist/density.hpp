#pragma once

#include "unitdist/builder.hpp"
#include "unitdist/rational.hpp"
#include "unitdist/tower.hpp"
#include "unitdist/witness.hpp"

namespace unitdist {

struct ApproximationResult {
    unsigned k = 0, l = 0;
    TowerElem value;         // (2 sqrt2/3)^k (sqrt3)^l, exact
    Rational value_squared;  // (8/9)^k 3^l
    Rational error_bound;    // certified: |value - target| <= error_bound <= eps
};

// Smallest k+l (ties: smallest k) with k, l <= max_exponent and
// |(2 sqrt2/3)^k (sqrt3)^l - target| <= eps, decided by exact rational
// comparisons on squares. Throws SearchExhaustedError when no pair within the
// bound qualifies (the bound's fault, never evidence of nonexistence).
ApproximationResult approximate_distance(const Rational& target, const Rational& eps,
                                         unsigned max_exponent);

// The approximation plus the canonical witness set for its word; the witness
// build honors the depth limit and refuses with CapacityError beyond it.
std::pair<ApproximationResult, WitnessSet> witness_for_target(
    const Rational& target, const Rational& eps, unsigned max_exponent,
    int depth_limit = kDefaultDepthLimit);

}  // namespace unitdist
