#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "unitdist/point.hpp"
#include "unitdist/prng.hpp"
#include "unitdist/witness.hpp"

namespace unitdist {

// Candidate map as a finite table from witness-set labels into C^2. The
// theorem quantifies over arbitrary maps, so a table is the faithful finite
// representation; nothing about the table is assumed.
struct PointMap {
    std::map<Label, ComplexPoint2> assignment;

    const ComplexPoint2& at(const Label& l) const;
    bool total_on(const WitnessSet& s) const;
};

struct PairCheck {
    Label a, b;
    TowerElem declared;        // the stored real squared distance
    ComplexTowerElem computed; // phi2 of the images
    PairRole role;
    bool match;
};

struct VerificationReport {
    bool unit_ok = true;        // every unit-role pair preserved
    bool endpoint_match = false;
    TowerElem endpoint_declared;
    ComplexTowerElem endpoint_phi;
    std::vector<PairCheck> pair_results;

    // The implication Theorem 1 guarantees for any map off a witness set.
    bool consistent() const { return !unit_ok || endpoint_match; }
};

// Computes phi2 exactly for every required pair and the endpoint pair.
// Reports observations only; throws StructuralError if f misses a label.
VerificationReport check_map(const WitnessSet& s, const PointMap& f);

// Same checks without materializing per-pair phi values; the workhorse of
// bulk trial suites. Every unit pair and the endpoint pair are still tested
// exactly.
struct ConsistencySummary {
    bool unit_ok = true;
    bool endpoint_match = false;
    bool consistent() const { return !unit_ok || endpoint_match; }
};
ConsistencySummary check_consistency(const WitnessSet& s, const PointMap& f);

bool theorem_consistency(const WitnessSet& s, const PointMap& f);

// Three points with a common phi value s in (0, infinity) are affinely
// independent. Premise violations raise PreconditionError.
bool prop3a(const ComplexPoint2& c1, const ComplexPoint2& c2, const ComplexPoint2& c3,
            const ComplexTowerElem& s);

// Three points with phi values (2 d^2, 3 d^2, 9 d^2), d^2 != 0, are affinely
// independent; their Cayley-Menger determinant is -8 d^4 (degree 2 in the phi
// entries, so the d = 1 value -8 scales by d^4).
bool prop3b(const ComplexPoint2& c1, const ComplexPoint2& c2, const ComplexPoint2& c3,
            const TowerElem& d2);

// If x and y have equal phi2 to three affinely independent points, x == y.
bool prop4_check(const ComplexPoint2& x, const ComplexPoint2& y, const ComplexPoint2& c0,
                 const ComplexPoint2& c1, const ComplexPoint2& c2);

// Exact phi2-isometry of C^2: p -> Q (conj?)(p) + v with Q^T Q = I built from
// a complex-rational pair a^2 + b^2 = 1. The optional conjugation realizes
// the trivial non-identity endomorphism of C on real-embedded sets.
struct Isometry {
    ComplexTowerElem a, b;  // Q = [[a, -b], [b, a]] or [[a, b], [b, -a]]
    bool reflection = false;
    bool conjugate_first = false;
    ComplexTowerElem vx, vy;

    ComplexPoint2 apply(const ComplexPoint2& p) const;
    bool orthogonal() const;  // Q^T Q == I, exactly
};

// Deterministic stream of exact isometries; parameters stay small so trial
// suites remain fast. Mixes real rotations, reflections, non-real orthogonal
// parameters, translations and the conjugation flag.
class IsometryGenerator {
   public:
    explicit IsometryGenerator(uint64_t seed) : rng_(seed) {}
    Isometry next();

    // tan-half-angle parameterization: a = (1-t^2)/(1+t^2), b = 2t/(1+t^2)
    static Isometry from_parameter(const ComplexTowerElem& t, bool reflection);

   private:
    SplitMix64 rng_;
};

// Table of images of every point of s under the isometry.
PointMap apply_isometry(const WitnessSet& s, const Isometry& iso);

// Table scaling every point by an exact factor (not an isometry for
// factor != +-1; used as the standard violating map).
PointMap apply_scaling(const WitnessSet& s, const Rational& factor);

}  // namespace unitdist
