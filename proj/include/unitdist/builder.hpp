#pragma once

#include <map>
#include <string>

#include "unitdist/distance_word.hpp"
#include "unitdist/witness.hpp"

namespace unitdist {

inline constexpr int kDefaultDepthLimit = 3;

// Builds canonical witness sets, memoizing by word within one session so a
// word that recurs across a figure's anchors is constructed once and
// transported per anchor. The session tower grows on demand and is shared by
// all coordinates it produces.
class SessionBuilder {
   public:
    explicit SessionBuilder(int depth_limit = kDefaultDepthLimit) : depth_limit_(depth_limit) {}

    // Canonical set: endpoint_x at (0,0), endpoint_y at (value(w), 0).
    // Refuses words heavier than the depth limit with CapacityError.
    const WitnessSet& build(const DistanceWord& w);

    // Builds and moves the result out of the session cache.
    WitnessSet take(const DistanceWord& w);

    const TowerPtr& tower() const { return tower_; }
    int depth_limit() const { return depth_limit_; }

   private:
    WitnessSet build_uncached(const DistanceWord& w);
    WitnessSet build_base();
    WitnessSet build_two_rhombus(const DistanceWord& w);
    WitnessSet build_five_point(const DistanceWord& w);
    WitnessSet build_isosceles_sub(const DistanceWord& w);
    WitnessSet rewrap(const DistanceWord& w, const DistanceWord& rewritten, Rule rule);
    TowerElem adjoin(const TowerElem& r);

    TowerPtr tower_ = Tower::rationals();
    int depth_limit_;
    std::map<std::string, WitnessSet> memo_;
};

// One-shot canonical construction.
WitnessSet build_canonical(const DistanceWord& w, int depth_limit = kDefaultDepthLimit);

// The canonical set transported by the exact rigid motion taking (0,0) to x
// and (value(w), 0) to y. Precondition: phi2(x, y) == value(w)^2 exactly.
WitnessSet build_between(const ExactPoint2& x, const ExactPoint2& y, const DistanceWord& w,
                         int depth_limit = kDefaultDepthLimit);

// Rigid transport of a whole set onto the segment (a, b), which must be at
// the set's endpoint distance. Relabels points and rewrites provenance.
WitnessSet transport(const WitnessSet& s, const ExactPoint2& a, const ExactPoint2& b);

}  // namespace unitdist
