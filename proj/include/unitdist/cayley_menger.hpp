#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unitdist/point.hpp"
#include "unitdist/polynomial.hpp"
#include "unitdist/tower.hpp"

namespace unitdist {

// Symmetric matrix of squared distances phi(c_i, c_j) with zero diagonal.
// An off-diagonal pair may be marked symbolic (the indeterminate t), which is
// how the lemma determinants are set up.
class SquaredDistanceMatrix {
   public:
    SquaredDistanceMatrix(unsigned dim, size_t m);
    static SquaredDistanceMatrix from_points(const std::vector<ComplexPointN>& pts);

    unsigned dim() const { return dim_; }
    size_t size() const { return m_; }

    // Sets both (i,j) and (j,i); the diagonal stays zero.
    void set(size_t i, size_t j, ComplexTowerElem v);
    void set_symbolic(size_t i, size_t j);
    bool is_symbolic(size_t i, size_t j) const;
    const ComplexTowerElem& at(size_t i, size_t j) const;
    size_t symbolic_pair_count() const;

   private:
    void check_index(size_t i, size_t j) const;
    unsigned dim_;
    size_t m_;
    std::vector<ComplexTowerElem> entries_;  // row-major
    std::vector<char> symbolic_;
};

// Exact Cayley-Menger determinant of m points: the (m+1)x(m+1) bordered
// matrix with a zero corner, a row/column of ones, and the phi matrix.
ComplexTowerElem cm_det(const std::vector<ComplexPointN>& pts);
ComplexTowerElem cm_det(const SquaredDistanceMatrix& m);
// Cofactor-expansion route, kept as an independent oracle for small m.
ComplexTowerElem cm_det_reference(const std::vector<ComplexPointN>& pts);

// Exactly n+1 points of C^n are affinely dependent iff their Cayley-Menger
// determinant vanishes.
bool affinely_dependent(const std::vector<ComplexPointN>& pts);

// Checks (det of the coordinate matrix bordered by ones)^2
//   == (-1)^(n+1) / 2^n * cm_det  for n+1 points of C^n.
bool verify_prop1_identity(const std::vector<ComplexPointN>& pts);

// For n+k points of C^n (k >= 2) the Cayley-Menger determinant must vanish.
bool verify_prop2(const std::vector<ComplexPointN>& pts);

// Determinant of a matrix with exactly one symbolic pair, as a polynomial in
// t. Computed by fraction-free elimination over the polynomial ring and
// cross-checked by evaluation at three points + interpolation; the two routes
// must agree exactly.
UnivariatePoly cm_det_symbolic(const SquaredDistanceMatrix& m);

// p == leading * prod (t - root), coefficient-wise.
bool check_factorization(const UnivariatePoly& p, const std::vector<TowerElem>& roots,
                         const TowerElem& leading);

// The four printed lemma determinants. Lemmas 1, 3, 6 are parameterized by
// d^2; lemma 4 by (a^2, b^2).
struct LemmaIdentity {
    int lemma;
    UnivariatePoly determinant;
    UnivariatePoly expected;
    bool matches;
    std::string description;
};

SquaredDistanceMatrix lemma_matrix(int lemma, const TowerElem& p1, const TowerElem& p2);
UnivariatePoly lemma_expected_poly(int lemma, const TowerElem& p1, const TowerElem& p2);
std::string lemma_factored_form(int lemma);
LemmaIdentity check_lemma_identity(int lemma, const TowerElem& p1, const TowerElem& p2);

}  // namespace unitdist
