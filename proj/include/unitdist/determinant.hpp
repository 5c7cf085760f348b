#pragma once

#include <utility>
#include <vector>

#include "unitdist/errors.hpp"
#include "unitdist/polynomial.hpp"
#include "unitdist/tower.hpp"

namespace unitdist {

// Entry-type glue for the generic determinant routines.
inline bool det_is_zero(const TowerElem& x) { return x.is_zero(); }
inline bool det_is_zero(const ComplexTowerElem& x) { return x.is_zero(); }
inline bool det_is_zero(const UnivariatePoly& x) { return x.is_zero(); }
inline TowerElem det_zero_like(const TowerElem& x) { return TowerElem::zero(x.tower()); }
inline ComplexTowerElem det_zero_like(const ComplexTowerElem& x) {
    return ComplexTowerElem(TowerElem::zero(x.re().tower()));
}
inline UnivariatePoly det_zero_like(const UnivariatePoly&) { return UnivariatePoly(); }
inline TowerElem det_exact_div(const TowerElem& a, const TowerElem& b) { return a / b; }
inline ComplexTowerElem det_exact_div(const ComplexTowerElem& a, const ComplexTowerElem& b) {
    return a / b;
}
inline UnivariatePoly det_exact_div(const UnivariatePoly& a, const UnivariatePoly& b) {
    return UnivariatePoly::exact_div(a, b);
}

// Fraction-free (Bareiss) elimination over an integral domain with exact
// division; keeps intermediate entries as true subdeterminants, which bounds
// coefficient blowup in exact arithmetic.
template <typename R>
R det_bareiss(std::vector<std::vector<R>> a) {
    const size_t n = a.size();
    if (n == 0) throw StructuralError("determinant of an empty matrix");
    for (const auto& row : a)
        if (row.size() != n) throw StructuralError("determinant of a non-square matrix");
    if (n == 1) return a[0][0];
    bool negate = false;
    R prev = det_zero_like(a[0][0]);  // placeholder until k >= 1
    for (size_t k = 0; k + 1 < n; ++k) {
        if (det_is_zero(a[k][k])) {
            size_t piv = k + 1;
            while (piv < n && det_is_zero(a[piv][k])) ++piv;
            if (piv == n) return det_zero_like(a[0][0]);
            std::swap(a[k], a[piv]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                R num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                a[i][j] = (k == 0) ? std::move(num) : det_exact_div(num, prev);
            }
            a[i][k] = det_zero_like(a[0][0]);
        }
        prev = a[k][k];
    }
    return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// Cofactor expansion along the first row; reference oracle for small sizes.
template <typename R>
R det_cofactor(const std::vector<std::vector<R>>& a) {
    const size_t n = a.size();
    if (n == 0) throw StructuralError("determinant of an empty matrix");
    if (n == 1) return a[0][0];
    R acc = det_zero_like(a[0][0]);
    for (size_t j = 0; j < n; ++j) {
        if (det_is_zero(a[0][j])) continue;
        std::vector<std::vector<R>> minor;
        minor.reserve(n - 1);
        for (size_t i = 1; i < n; ++i) {
            std::vector<R> row;
            row.reserve(n - 1);
            for (size_t jj = 0; jj < n; ++jj)
                if (jj != j) row.push_back(a[i][jj]);
            minor.push_back(std::move(row));
        }
        R term = a[0][j] * det_cofactor(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace unitdist
