#pragma once

#include <string>

#include "unitdist/rational.hpp"

namespace unitdist {

// Closed interval with rational endpoints. Every operation returns an
// interval containing the exact image, so any conclusion drawn from an
// interval (sign, error bound) is certified.
class QInterval {
   public:
    QInterval() = default;
    QInterval(Rational lo, Rational hi);
    static QInterval point(const Rational& v) { return QInterval(v, v); }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / Rational(2); }

    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool is_positive() const { return lo_.sign() > 0; }
    bool is_negative() const { return hi_.sign() < 0; }
    // max |x| over the interval.
    Rational mag() const { return max(lo_.abs(), hi_.abs()); }

    friend QInterval operator+(const QInterval& a, const QInterval& b) {
        return QInterval(a.lo_ + b.lo_, a.hi_ + b.hi_);
    }
    friend QInterval operator-(const QInterval& a, const QInterval& b) {
        return QInterval(a.lo_ - b.hi_, a.hi_ - b.lo_);
    }
    friend QInterval operator*(const QInterval& a, const QInterval& b);
    QInterval operator-() const { return QInterval(-hi_, -lo_); }

    // Enclosure of sqrt over a nonnegative interval. `bits` controls the
    // dyadic grid: endpoints land on multiples of 2^-bits.
    static QInterval sqrt_enclosure(const QInterval& x, unsigned bits);

   private:
    Rational lo_, hi_;
};

// floor(sqrt(q)) and ceil(sqrt(q)) on the dyadic grid 2^-bits; q >= 0.
Rational sqrt_lower(const Rational& q, unsigned bits);
Rational sqrt_upper(const Rational& q, unsigned bits);

}  // namespace unitdist
