#include "unitdist/cayley_menger.hpp"

#include "unitdist/determinant.hpp"
#include "unitdist/errors.hpp"

namespace unitdist {

SquaredDistanceMatrix::SquaredDistanceMatrix(unsigned dim, size_t m)
    : dim_(dim), m_(m), entries_(m * m), symbolic_(m * m, 0) {
    if (m < 2) throw StructuralError("phi matrix needs at least two points");
}

SquaredDistanceMatrix SquaredDistanceMatrix::from_points(const std::vector<ComplexPointN>& pts) {
    if (pts.empty()) throw StructuralError("phi matrix from empty point list");
    SquaredDistanceMatrix m(static_cast<unsigned>(pts[0].size()), pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) m.set(i, j, phi(pts[i], pts[j]));
    return m;
}

void SquaredDistanceMatrix::check_index(size_t i, size_t j) const {
    if (i >= m_ || j >= m_) throw StructuralError("phi matrix index out of range");
    if (i == j) throw StructuralError("phi matrix diagonal is fixed at zero");
}

void SquaredDistanceMatrix::set(size_t i, size_t j, ComplexTowerElem v) {
    check_index(i, j);
    entries_[i * m_ + j] = v;
    entries_[j * m_ + i] = std::move(v);
    symbolic_[i * m_ + j] = symbolic_[j * m_ + i] = 0;
}

void SquaredDistanceMatrix::set_symbolic(size_t i, size_t j) {
    check_index(i, j);
    symbolic_[i * m_ + j] = symbolic_[j * m_ + i] = 1;
}

bool SquaredDistanceMatrix::is_symbolic(size_t i, size_t j) const {
    if (i >= m_ || j >= m_) throw StructuralError("phi matrix index out of range");
    return symbolic_[i * m_ + j] != 0;
}

const ComplexTowerElem& SquaredDistanceMatrix::at(size_t i, size_t j) const {
    if (i >= m_ || j >= m_) throw StructuralError("phi matrix index out of range");
    return entries_[i * m_ + j];
}

size_t SquaredDistanceMatrix::symbolic_pair_count() const {
    size_t n = 0;
    for (size_t i = 0; i < m_; ++i)
        for (size_t j = i + 1; j < m_; ++j)
            if (symbolic_[i * m_ + j]) ++n;
    return n;
}

namespace {

std::vector<std::vector<ComplexTowerElem>> bordered_from_points(
    const std::vector<ComplexPointN>& pts) {
    if (pts.size() < 2) throw StructuralError("Cayley-Menger determinant needs >= 2 points");
    const size_t m = pts.size();
    const ComplexTowerElem zero{TowerElem::zero(Tower::rationals())};
    const ComplexTowerElem one{TowerElem::one(Tower::rationals())};
    std::vector<std::vector<ComplexTowerElem>> a(m + 1, std::vector<ComplexTowerElem>(m + 1, zero));
    for (size_t i = 1; i <= m; ++i) a[0][i] = a[i][0] = one;
    for (size_t i = 0; i < m; ++i)
        for (size_t j = i + 1; j < m; ++j) a[i + 1][j + 1] = a[j + 1][i + 1] = phi(pts[i], pts[j]);
    return a;
}

}  // namespace

ComplexTowerElem cm_det(const std::vector<ComplexPointN>& pts) {
    return det_bareiss(bordered_from_points(pts));
}

ComplexTowerElem cm_det(const SquaredDistanceMatrix& m) {
    if (m.symbolic_pair_count() != 0)
        throw UnsupportedError("numeric cm_det on a matrix with symbolic entries");
    const size_t n = m.size();
    const ComplexTowerElem zero{TowerElem::zero(Tower::rationals())};
    const ComplexTowerElem one{TowerElem::one(Tower::rationals())};
    std::vector<std::vector<ComplexTowerElem>> a(n + 1, std::vector<ComplexTowerElem>(n + 1, zero));
    for (size_t i = 1; i <= n; ++i) a[0][i] = a[i][0] = one;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (i != j) a[i + 1][j + 1] = m.at(i, j);
    return det_bareiss(std::move(a));
}

ComplexTowerElem cm_det_reference(const std::vector<ComplexPointN>& pts) {
    return det_cofactor(bordered_from_points(pts));
}

bool affinely_dependent(const std::vector<ComplexPointN>& pts) {
    if (pts.empty()) throw StructuralError("no points");
    const size_t n = pts[0].size();
    if (pts.size() != n + 1)
        throw StructuralError("affine dependence test expects exactly n+1 points in dimension n");
    return cm_det(pts).is_zero();
}

bool verify_prop1_identity(const std::vector<ComplexPointN>& pts) {
    if (pts.empty()) throw StructuralError("no points");
    const size_t n = pts[0].size();
    if (pts.size() != n + 1)
        throw StructuralError("identity check expects exactly n+1 points in dimension n");
    const ComplexTowerElem one{TowerElem::one(Tower::rationals())};
    std::vector<std::vector<ComplexTowerElem>> coord(n + 1, std::vector<ComplexTowerElem>(n + 1, one));
    for (size_t i = 0; i <= n; ++i) {
        if (pts[i].size() != n) throw StructuralError("mixed point dimensions");
        for (size_t j = 0; j < n; ++j) coord[i][j] = pts[i][j];
    }
    ComplexTowerElem lhs = det_bareiss(std::move(coord)).square();
    // 2^n on the left avoids a rational scaling of the complex value.
    Rational two_n(1);
    for (size_t i = 0; i < n; ++i) two_n *= Rational(2);
    const int sign = (n % 2 == 0) ? -1 : 1;  // (-1)^(n+1)
    ComplexTowerElem rhs = cm_det(pts);
    ComplexTowerElem lhs_scaled(lhs.re() * two_n * Rational(sign), lhs.im() * two_n * Rational(sign));
    return lhs_scaled == rhs;
}

bool verify_prop2(const std::vector<ComplexPointN>& pts) {
    if (pts.empty()) throw StructuralError("no points");
    const size_t n = pts[0].size();
    if (pts.size() < n + 2)
        throw StructuralError("prop2 expects at least n+2 points in dimension n");
    return cm_det(pts).is_zero();
}

UnivariatePoly cm_det_symbolic(const SquaredDistanceMatrix& m) {
    const size_t k = m.symbolic_pair_count();
    if (k != 1)
        throw UnsupportedError("symbolic determinant requires exactly one symbolic pair, got " +
                               std::to_string(k));
    // Locate the symbolic pair and collect the numeric entries as real values.
    const size_t n = m.size();
    TowerPtr tw = Tower::rationals();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j || m.is_symbolic(i, j)) continue;
            if (!m.at(i, j).is_real())
                throw PreconditionError("symbolic determinant requires real numeric entries");
            tw = common_tower(tw, m.at(i, j).re().tower());
        }

    const TowerElem zero = TowerElem::zero(tw);
    const TowerElem one = TowerElem::one(tw);
    const UnivariatePoly t_poly = UnivariatePoly::indeterminate(tw);

    // Bordered matrix over the polynomial ring.
    std::vector<std::vector<UnivariatePoly>> a(
        n + 1, std::vector<UnivariatePoly>(n + 1, UnivariatePoly()));
    for (size_t i = 1; i <= n; ++i) a[0][i] = a[i][0] = UnivariatePoly(one);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            a[i + 1][j + 1] = m.is_symbolic(i, j) ? t_poly : UnivariatePoly(m.at(i, j).re());
        }
    UnivariatePoly direct = det_bareiss(std::move(a));

    // Independent route: evaluate at t = 0, 1, 2 over the scalar field and
    // interpolate the (degree <= 2) result.
    std::vector<TowerElem> nodes = {zero, one, TowerElem::constant(tw, Rational(2))};
    std::vector<TowerElem> values;
    values.reserve(nodes.size());
    for (const TowerElem& t0 : nodes) {
        std::vector<std::vector<TowerElem>> b(n + 1, std::vector<TowerElem>(n + 1, zero));
        for (size_t i = 1; i <= n; ++i) b[0][i] = b[i][0] = one;
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                b[i + 1][j + 1] = m.is_symbolic(i, j) ? t0 : m.at(i, j).re();
            }
        values.push_back(det_bareiss(std::move(b)));
    }
    // Lagrange through (0,y0), (1,y1), (2,y2):
    //   c2 = (y0 - 2 y1 + y2)/2, c1 = y1 - y0 - c2, c0 = y0.
    const Rational half(1, 2);
    TowerElem c2 = (values[0] - values[1] - values[1] + values[2]) * half;
    TowerElem c1 = values[1] - values[0] - c2;
    UnivariatePoly interpolated = UnivariatePoly::from_coeffs({values[0], c1, c2});
    if (direct != interpolated)
        throw Error("symbolic determinant cross-check failed: elimination and interpolation differ");
    return direct;
}

bool check_factorization(const UnivariatePoly& p, const std::vector<TowerElem>& roots,
                         const TowerElem& leading) {
    return p == UnivariatePoly::from_roots(leading, roots);
}

SquaredDistanceMatrix lemma_matrix(int lemma, const TowerElem& p1, const TowerElem& p2) {
    const auto C = [](const TowerElem& v) { return ComplexTowerElem(v); };
    switch (lemma) {
        case 1: {
            // Points x, p1, p2, y of Figure 1's inner quadruple.
            const TowerElem& d2 = p1;
            SquaredDistanceMatrix m(2, 4);
            m.set(0, 1, C(d2));
            m.set(0, 2, C(d2));
            m.set(1, 2, C(d2));
            m.set(1, 3, C(d2));
            m.set(2, 3, C(d2));
            m.set_symbolic(0, 3);
            return m;
        }
        case 3: {
            // Points x, p1, p2, p3, y of Figure 2.
            const TowerElem& d2 = p1;
            const TowerElem d2x3 = d2 * Rational(3);
            SquaredDistanceMatrix m(2, 5);
            m.set(0, 1, C(d2));
            m.set(0, 2, C(d2));
            m.set(0, 3, C(d2x3));
            m.set(1, 2, C(d2));
            m.set(1, 3, C(d2));
            m.set(1, 4, C(d2));
            m.set(2, 3, C(d2));
            m.set(2, 4, C(d2x3));
            m.set(3, 4, C(d2));
            m.set_symbolic(0, 4);
            return m;
        }
        case 4: {
            // Points x, p1, p2, y of Figure 3, legs a and b.
            const TowerElem& a2 = p1;
            const TowerElem& b2 = p2;
            SquaredDistanceMatrix m(2, 4);
            m.set(0, 1, C(b2));
            m.set(0, 2, C(b2));
            m.set(1, 2, C(b2 * Rational(4)));
            m.set(1, 3, C(a2));
            m.set(2, 3, C(a2));
            m.set_symbolic(0, 3);
            return m;
        }
        case 6: {
            // Points x, p1, p2, y of Figure 4's inner quadruple.
            const TowerElem& d2 = p1;
            SquaredDistanceMatrix m(2, 4);
            m.set(0, 1, C(d2 * Rational(3)));
            m.set(0, 2, C(d2 * Rational(2)));
            m.set(1, 2, C(d2 * Rational(9)));
            m.set(1, 3, C(d2 * Rational(3)));
            m.set(2, 3, C(d2 * Rational(2)));
            m.set_symbolic(0, 3);
            return m;
        }
        default:
            throw UsageError("no such lemma determinant: " + std::to_string(lemma));
    }
}

UnivariatePoly lemma_expected_poly(int lemma, const TowerElem& p1, const TowerElem& p2) {
    switch (lemma) {
        case 1: {  // 2 d^2 t (3 d^2 - t): roots {0, 3d^2}, leading -2d^2
            const TowerElem& d2 = p1;
            return UnivariatePoly::from_roots(d2 * Rational(-2),
                                              {TowerElem::zero(d2.tower()), d2 * Rational(3)});
        }
        case 3: {  // 3 d^4 (t - 4 d^2)^2
            const TowerElem& d2 = p1;
            const TowerElem r = d2 * Rational(4);
            return UnivariatePoly::from_roots(d2.square() * Rational(3), {r, r});
        }
        case 4: {  // -8 b^2 (t + b^2 - a^2)^2
            const TowerElem r = p1 - p2;
            return UnivariatePoly::from_roots(p2 * Rational(-8), {r, r});
        }
        case 6: {  // 2 d^2 t (8 d^2 - 9 t): roots {0, 8d^2/9}, leading -18d^2
            const TowerElem& d2 = p1;
            return UnivariatePoly::from_roots(
                d2 * Rational(-18), {TowerElem::zero(d2.tower()), d2 * Rational(8, 9)});
        }
        default:
            throw UsageError("no such lemma determinant: " + std::to_string(lemma));
    }
}

std::string lemma_factored_form(int lemma) {
    switch (lemma) {
        case 1: return "2*d^2*t*(3*d^2 - t)";
        case 3: return "3*d^4*(t - 4*d^2)^2";
        case 4: return "-8*b^2*(t + b^2 - a^2)^2";
        case 6: return "2*d^2*t*(8*d^2 - 9*t)";
        default: throw UsageError("no such lemma determinant: " + std::to_string(lemma));
    }
}

LemmaIdentity check_lemma_identity(int lemma, const TowerElem& p1, const TowerElem& p2) {
    LemmaIdentity out;
    out.lemma = lemma;
    out.determinant = cm_det_symbolic(lemma_matrix(lemma, p1, p2));
    out.expected = lemma_expected_poly(lemma, p1, p2);
    out.matches = out.determinant == out.expected;
    out.description = lemma_factored_form(lemma);
    return out;
}

}  // namespace unitdist
