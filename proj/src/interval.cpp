#include "unitdist/interval.hpp"

#include <algorithm>
#include <initializer_list>

#include "unitdist/errors.hpp"

namespace unitdist {

QInterval::QInterval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw DomainError("interval endpoints out of order");
}

QInterval operator*(const QInterval& a, const QInterval& b) {
    const Rational p1 = a.lo_ * b.lo_;
    const Rational p2 = a.lo_ * b.hi_;
    const Rational p3 = a.hi_ * b.lo_;
    const Rational p4 = a.hi_ * b.hi_;
    Rational lo = p1, hi = p1;
    for (const Rational* p : {&p2, &p3, &p4}) {
        if (*p < lo) lo = *p;
        if (hi < *p) hi = *p;
    }
    return QInterval(std::move(lo), std::move(hi));
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
    if (q.sign() < 0) throw DomainError("sqrt_lower of negative rational");
    // floor(sqrt(q * 4^bits)) / 2^bits; the floor square root keeps the
    // result below the true value.
    mpz_class scaled_num = q.num() << (2 * bits);
    mpz_class t;
    mpz_fdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), q.den().get_mpz_t());
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
    return Rational(r, mpz_class(mpz_class(1) << bits));
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
    if (q.sign() < 0) throw DomainError("sqrt_upper of negative rational");
    mpz_class scaled_num = q.num() << (2 * bits);
    mpz_class t;
    mpz_cdiv_q(t.get_mpz_t(), scaled_num.get_mpz_t(), q.den().get_mpz_t());
    mpz_class r, rem;
    mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t());
    if (rem != 0) r += 1;
    return Rational(r, mpz_class(mpz_class(1) << bits));
}

QInterval QInterval::sqrt_enclosure(const QInterval& x, unsigned bits) {
    if (x.lo_.sign() < 0) throw DomainError("sqrt of interval reaching below zero");
    return QInterval(sqrt_lower(x.lo_, bits), sqrt_upper(x.hi_, bits));
}

}  // namespace unitdist
