#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "unitdist/interval.hpp"
#include "unitdist/rational.hpp"

namespace unitdist {

class Tower;
class TowerElem;
using TowerPtr = std::shared_ptr<const Tower>;

// Element of a tower of real quadratic extensions Q(sqrt r1)(sqrt r2)...
// Stored as the flat coefficient vector over the multiplicative basis, in
// recursive [lo | hi] halves: an element of height h is lo + hi*sqrt(r_h)
// with lo, hi of height h-1. The representation is canonical, so equality
// and the zero test are coefficient comparisons, and the real embedding
// (every generator denotes the positive root) makes sign() decidable.
class TowerElem {
   public:
    TowerElem();  // zero in Q

    static TowerElem from_rational(Rational q);
    static TowerElem zero(TowerPtr t);
    static TowerElem one(TowerPtr t);
    static TowerElem constant(TowerPtr t, Rational q);
    static TowerElem from_coeffs(TowerPtr t, std::vector<Rational> coeffs);

    const TowerPtr& tower() const { return tower_; }
    unsigned height() const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    // Nonzero coefficients only in the rational slot.
    bool is_rational() const;
    Rational rational_value() const;

    friend TowerElem operator+(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator-(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator*(const TowerElem& a, const TowerElem& b);
    friend TowerElem operator/(const TowerElem& a, const TowerElem& b);
    TowerElem operator-() const;
    TowerElem& operator+=(const TowerElem& o) { *this = *this + o; return *this; }
    TowerElem& operator-=(const TowerElem& o) { *this = *this - o; return *this; }

    friend TowerElem operator*(const TowerElem& a, const Rational& s);
    friend TowerElem operator*(const Rational& s, const TowerElem& a) { return a * s; }

    TowerElem square() const;
    TowerElem inverse() const;

    // Exact comparison; requires compatible towers (prefix relation).
    friend bool operator==(const TowerElem& a, const TowerElem& b);
    friend bool operator!=(const TowerElem& a, const TowerElem& b) { return !(a == b); }

    // Sign under the real embedding: -1, 0, +1. Exact zero test first, then
    // interval refinement at doubling precision (terminates because the tower
    // representation is canonical and the embedding is injective).
    int sign() const;

    // Certified enclosure of width <= 10^-digits.
    QInterval approximate(unsigned digits) const;
    // Single-shot enclosure at a fixed dyadic precision.
    QInterval eval_interval(unsigned bits) const;

    // Canonical re-embedding into a taller tower with this element's tower
    // as a prefix. Throws StructuralError otherwise.
    TowerElem lifted_to(const TowerPtr& target) const;

    // Same value in the shortest prefix tower containing it (drops zero high
    // halves). Keeps stored coordinates small and their labels stable.
    TowerElem trimmed() const;

    // Canonical serialization with trailing-zero levels trimmed, so the same
    // value serializes identically from any tower extending its own.
    std::string ser() const;

    size_t max_coeff_bits() const;

   private:
    TowerPtr tower_;
    std::vector<Rational> c_;
};

// Descriptor of one quadratic extension step; a chain of these is the tower.
// Immutable after construction; extension creates a new node.
class Tower {
   public:
    // The base field Q (height 0), a process-wide singleton.
    static const TowerPtr& rationals();

    // Appends a level without certifying non-squareness; callers must have
    // established that `radicand` is positive and not a square (adjoin_sqrt
    // does, and the serialization parser re-checks).
    static TowerPtr extend(const TowerPtr& prefix, TowerElem radicand);

    const TowerPtr& prefix() const { return prefix_; }
    const TowerElem& radicand() const;
    unsigned height() const { return height_; }

    // sqrt(radicand) enclosure at the given precision, memoized.
    QInterval radicand_sqrt_interval(unsigned bits) const;

   private:
    Tower() = default;
    TowerPtr prefix_;                      // null only for the base
    std::optional<TowerElem> radicand_;    // element of the prefix tower; empty for the base
    unsigned height_ = 0;
    mutable std::mutex cache_mu_;
    mutable std::unordered_map<unsigned, QInterval> sqrt_cache_;
};

bool towers_equal(const TowerPtr& a, const TowerPtr& b);
bool is_prefix_of(const TowerPtr& p, const TowerPtr& t);
// The taller of two prefix-compatible towers; StructuralError otherwise.
TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b);

// A square root of x within its own tower, if one exists (sign unspecified).
std::optional<TowerElem> sqrt_in_tower(const TowerElem& x);

struct AdjoinResult {
    TowerPtr tower;
    TowerElem root;  // positive; root*root == r exactly
    bool extended;
};

// Positive square root of r, extending the tower only when r is certified
// non-square in it. r <= 0 raises DomainError (no real embedding).
AdjoinResult adjoin_sqrt(const TowerPtr& tower, const TowerElem& r);

// Formal adjunction of i: pairs (re, im) over a common tower.
class ComplexTowerElem {
   public:
    ComplexTowerElem() = default;
    ComplexTowerElem(TowerElem re, TowerElem im);
    explicit ComplexTowerElem(TowerElem re);
    static ComplexTowerElem from_rationals(Rational re, Rational im);

    const TowerElem& re() const { return re_; }
    const TowerElem& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    ComplexTowerElem conj() const { return ComplexTowerElem(re_, -im_); }
    TowerElem norm() const { return re_.square() + im_.square(); }

    friend ComplexTowerElem operator+(const ComplexTowerElem& a, const ComplexTowerElem& b);
    friend ComplexTowerElem operator-(const ComplexTowerElem& a, const ComplexTowerElem& b);
    friend ComplexTowerElem operator*(const ComplexTowerElem& a, const ComplexTowerElem& b);
    friend ComplexTowerElem operator/(const ComplexTowerElem& a, const ComplexTowerElem& b);
    ComplexTowerElem operator-() const { return ComplexTowerElem(-re_, -im_); }
    ComplexTowerElem square() const;
    ComplexTowerElem inverse() const;

    friend bool operator==(const ComplexTowerElem& a, const ComplexTowerElem& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const ComplexTowerElem& a, const ComplexTowerElem& b) {
        return !(a == b);
    }

    std::string ser() const { return re_.ser() + "+i*" + im_.ser(); }

   private:
    TowerElem re_, im_;
};

}  // namespace unitdist
