#include "unitdist/distance_word.hpp"

#include <algorithm>

#include "unitdist/errors.hpp"

namespace unitdist {

DistanceWord DistanceWord::base() { return DistanceWord(Kind::Base, nullptr, nullptr); }

namespace {
std::shared_ptr<const DistanceWord> box(DistanceWord w) {
    return std::make_shared<const DistanceWord>(std::move(w));
}
}  // namespace

DistanceWord DistanceWord::sqrt3(DistanceWord w) {
    return DistanceWord(Kind::Sqrt3, box(std::move(w)), nullptr);
}
DistanceWord DistanceWord::twice(DistanceWord w) {
    return DistanceWord(Kind::Twice, box(std::move(w)), nullptr);
}
DistanceWord DistanceWord::triple(DistanceWord w) {
    return DistanceWord(Kind::Triple, box(std::move(w)), nullptr);
}
DistanceWord DistanceWord::sqrt2(DistanceWord w) {
    return DistanceWord(Kind::Sqrt2, box(std::move(w)), nullptr);
}
DistanceWord DistanceWord::two_sqrt2_over_3(DistanceWord w) {
    return DistanceWord(Kind::TwoSqrt2Over3, box(std::move(w)), nullptr);
}
DistanceWord DistanceWord::pythag_sub(DistanceWord a, DistanceWord b) {
    return DistanceWord(Kind::PythagSub, box(std::move(a)), box(std::move(b)));
}

DistanceWord DistanceWord::from_exponents(unsigned k, unsigned l) {
    DistanceWord w = base();
    for (unsigned i = 0; i < k; ++i) w = two_sqrt2_over_3(std::move(w));
    for (unsigned i = 0; i < l; ++i) w = sqrt3(std::move(w));
    return w;
}

const DistanceWord& DistanceWord::sub() const {
    if (kind_ == Kind::Base || kind_ == Kind::PythagSub)
        throw StructuralError("word has no single operand");
    return *a_;
}

const DistanceWord& DistanceWord::minuend() const {
    if (kind_ != Kind::PythagSub) throw StructuralError("not a PythagSub word");
    return *a_;
}

const DistanceWord& DistanceWord::subtrahend() const {
    if (kind_ != Kind::PythagSub) throw StructuralError("not a PythagSub word");
    return *b_;
}

Rational DistanceWord::value_squared() const {
    switch (kind_) {
        case Kind::Base: return Rational(1);
        case Kind::Sqrt3: return a_->value_squared() * Rational(3);
        case Kind::Twice: return a_->value_squared() * Rational(4);
        case Kind::Triple: return a_->value_squared() * Rational(9);
        case Kind::Sqrt2: return a_->value_squared() * Rational(2);
        case Kind::TwoSqrt2Over3: return a_->value_squared() * Rational(8, 9);
        case Kind::PythagSub: {
            Rational d = a_->value_squared() - b_->value_squared();
            if (d.sign() <= 0)
                throw DomainError("PythagSub requires the first word to denote the longer distance");
            return d;
        }
    }
    throw StructuralError("corrupt word");
}

TowerElem DistanceWord::value(TowerPtr& tower) const {
    AdjoinResult a = adjoin_sqrt(tower, TowerElem::constant(tower, value_squared()));
    tower = a.tower;
    return a.root;
}

TowerElem DistanceWord::value() const {
    TowerPtr t = Tower::rationals();
    return value(t);
}

unsigned DistanceWord::weight() const {
    switch (kind_) {
        case Kind::Base: return 0;
        case Kind::Sqrt3:
        case Kind::Twice:
        case Kind::TwoSqrt2Over3: return 1 + a_->weight();
        case Kind::Triple:
        case Kind::Sqrt2: return 2 + a_->weight();
        case Kind::PythagSub: return 1 + std::max(a_->weight(), b_->weight());
    }
    throw StructuralError("corrupt word");
}

std::string DistanceWord::str() const {
    switch (kind_) {
        case Kind::Base: return "1";
        case Kind::Sqrt3: return "sqrt3(" + a_->str() + ")";
        case Kind::Twice: return "double(" + a_->str() + ")";
        case Kind::Triple: return "triple(" + a_->str() + ")";
        case Kind::Sqrt2: return "sqrt2(" + a_->str() + ")";
        case Kind::TwoSqrt2Over3: return "twosqrt2over3(" + a_->str() + ")";
        case Kind::PythagSub: return "pythagsub(" + a_->str() + "," + b_->str() + ")";
    }
    throw StructuralError("corrupt word");
}

bool operator==(const DistanceWord& a, const DistanceWord& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.a_ && !(*a.a_ == *b.a_)) return false;
    if (a.b_ && !(*a.b_ == *b.b_)) return false;
    return true;
}

}  // namespace unitdist
