#include "unitdist/polynomial.hpp"

#include "unitdist/errors.hpp"

namespace unitdist {

UnivariatePoly::UnivariatePoly(TowerElem constant) {
    c_.push_back(std::move(constant));
    trim();
}

UnivariatePoly UnivariatePoly::from_coeffs(std::vector<TowerElem> coeffs) {
    UnivariatePoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
}

UnivariatePoly UnivariatePoly::indeterminate(const TowerPtr& t) {
    return from_coeffs({TowerElem::zero(t), TowerElem::one(t)});
}

UnivariatePoly UnivariatePoly::from_roots(const TowerElem& leading,
                                          const std::vector<TowerElem>& roots) {
    UnivariatePoly p(leading);
    for (const TowerElem& r : roots) {
        UnivariatePoly factor = from_coeffs({-r, TowerElem::one(r.tower())});
        p = p * factor;
    }
    return p;
}

void UnivariatePoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const TowerElem& UnivariatePoly::leading() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

TowerElem UnivariatePoly::coeff(size_t i) const {
    if (i < c_.size()) return c_[i];
    return TowerElem();
}

TowerElem UnivariatePoly::eval(const TowerElem& t) const {
    if (c_.empty()) return TowerElem::zero(t.tower());
    TowerElem acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * t + c_[i];
    return acc;
}

UnivariatePoly operator+(const UnivariatePoly& a, const UnivariatePoly& b) {
    std::vector<TowerElem> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size() && i < b.c_.size()) c[i] = a.c_[i] + b.c_[i];
        else if (i < a.c_.size()) c[i] = a.c_[i];
        else c[i] = b.c_[i];
    }
    return UnivariatePoly::from_coeffs(std::move(c));
}

UnivariatePoly operator-(const UnivariatePoly& a, const UnivariatePoly& b) {
    return a + (-b);
}

UnivariatePoly UnivariatePoly::operator-() const {
    std::vector<TowerElem> c;
    c.reserve(c_.size());
    for (const auto& x : c_) c.push_back(-x);
    return from_coeffs(std::move(c));
}

UnivariatePoly operator*(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.is_zero() || b.is_zero()) return UnivariatePoly();
    std::vector<TowerElem> c(a.c_.size() + b.c_.size() - 1);
    for (auto& x : c) x = TowerElem::zero(a.c_[0].tower());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            c[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return UnivariatePoly::from_coeffs(std::move(c));
}

bool operator==(const UnivariatePoly& a, const UnivariatePoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

UnivariatePoly UnivariatePoly::exact_div(const UnivariatePoly& num, const UnivariatePoly& den) {
    if (den.is_zero()) throw DomainError("polynomial division by zero");
    if (num.is_zero()) return UnivariatePoly();
    if (num.degree() < den.degree())
        throw DomainError("polynomial division is not exact (degree)");
    std::vector<TowerElem> rem = num.c_;
    const TowerElem lead_inv = den.leading().inverse();
    const size_t qsize = num.c_.size() - den.c_.size() + 1;
    std::vector<TowerElem> q(qsize);
    for (auto& x : q) x = TowerElem::zero(den.leading().tower());
    for (size_t i = qsize; i-- > 0;) {
        TowerElem f = rem[i + den.c_.size() - 1] * lead_inv;
        if (f.is_zero()) { q[i] = std::move(f); continue; }
        for (size_t j = 0; j < den.c_.size(); ++j)
            rem[i + j] -= f * den.c_[j];
        q[i] = std::move(f);
    }
    for (const auto& r : rem)
        if (!r.is_zero()) throw DomainError("polynomial division is not exact (remainder)");
    return from_coeffs(std::move(q));
}

std::string UnivariatePoly::str(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string cs;
        if (c_[i].is_rational()) {
            const Rational q = c_[i].rational_value();
            cs = q.den() == 1 ? q.num().get_str() : q.str();
        } else {
            cs = c_[i].ser();
        }
        if (i == 0) {
            out += cs;
        } else {
            out += cs + "*" + var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace unitdist
