#pragma once

#include <memory>
#include <string>

#include "unitdist/rational.hpp"
#include "unitdist/tower.hpp"

namespace unitdist {

// Formal derivation tree describing how a distance is produced from the base
// distance 1: scale by sqrt3, 2, 3, sqrt2 or 2*sqrt2/3, or combine two words
// as sqrt(a^2 - b^2). The special family (k, l) applies TwoSqrt2Over3 k times
// and then Sqrt3 l times.
class DistanceWord {
   public:
    enum class Kind : uint8_t { Base, Sqrt3, Twice, Triple, Sqrt2, TwoSqrt2Over3, PythagSub };

    static DistanceWord base();
    static DistanceWord sqrt3(DistanceWord w);
    static DistanceWord twice(DistanceWord w);
    static DistanceWord triple(DistanceWord w);
    static DistanceWord sqrt2(DistanceWord w);
    static DistanceWord two_sqrt2_over_3(DistanceWord w);
    static DistanceWord pythag_sub(DistanceWord a, DistanceWord b);
    static DistanceWord from_exponents(unsigned k, unsigned l);

    Kind kind() const { return kind_; }
    const DistanceWord& sub() const;          // unary ops
    const DistanceWord& minuend() const;      // PythagSub a
    const DistanceWord& subtrahend() const;   // PythagSub b

    // Squared value. Rational for every word: the generators scale the square
    // by 3, 4, 9, 2 or 8/9, and PythagSub subtracts. Raises DomainError when a
    // PythagSub has value(a) <= value(b).
    Rational value_squared() const;

    // Exact value as the positive square root of value_squared(), adjoining
    // to `tower` only when needed.
    TowerElem value(TowerPtr& tower) const;
    TowerElem value() const;  // in a fresh minimal tower

    // Guard measure: number of primitive derivation steps after rewriting,
    // so the (k, l) words measure exactly k + l.
    unsigned weight() const;

    std::string str() const;

    friend bool operator==(const DistanceWord& a, const DistanceWord& b);
    friend bool operator!=(const DistanceWord& a, const DistanceWord& b) { return !(a == b); }

   private:
    DistanceWord(Kind k, std::shared_ptr<const DistanceWord> a,
                 std::shared_ptr<const DistanceWord> b)
        : kind_(k), a_(std::move(a)), b_(std::move(b)) {}
    Kind kind_ = Kind::Base;
    std::shared_ptr<const DistanceWord> a_, b_;
};

}  // namespace unitdist
