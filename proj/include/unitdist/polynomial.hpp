#pragma once

#include <string>
#include <vector>

#include "unitdist/tower.hpp"

namespace unitdist {

// Polynomial in one indeterminate with TowerElem coefficients, lowest degree
// first, no trailing zero coefficients. Degree stays <= 2 in every use here,
// but the arithmetic is general.
class UnivariatePoly {
   public:
    UnivariatePoly() = default;  // zero polynomial over Q
    explicit UnivariatePoly(TowerElem constant);
    static UnivariatePoly from_coeffs(std::vector<TowerElem> coeffs);
    static UnivariatePoly indeterminate(const TowerPtr& t);  // t itself
    // leading * prod (t - root)
    static UnivariatePoly from_roots(const TowerElem& leading,
                                     const std::vector<TowerElem>& roots);

    bool is_zero() const { return c_.empty(); }
    // Degree of the zero polynomial is reported as -1.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<TowerElem>& coeffs() const { return c_; }
    const TowerElem& leading() const;
    TowerElem coeff(size_t i) const;  // zero beyond degree

    TowerElem eval(const TowerElem& t) const;

    friend UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b);
    friend UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b);
    UnivariatePoly operator-() const;

    friend bool operator==(const UnivariatePoly& a, const UnivariatePoly& b);
    friend bool operator!=(const UnivariatePoly& a, const UnivariatePoly& b) { return !(a == b); }

    // Exact quotient; throws if the division leaves a remainder.
    static UnivariatePoly exact_div(const UnivariatePoly& num, const UnivariatePoly& den);

    // Human-oriented rendering like "-2*t^2 + 6*t".
    std::string str(const std::string& var = "t") const;

   private:
    void trim();
    std::vector<TowerElem> c_;
};

}  // namespace unitdist
