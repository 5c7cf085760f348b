#pragma once

// Internal fast evaluation kernel: tower elements as integer coefficient
// vectors over one shared denominator. Multiplication and subtraction stay
// gcd-free, which is what makes exact phi checks over many pairs affordable.
// Results are compared (or converted back) without ever normalizing.

#include <gmpxx.h>

#include <vector>

#include "unitdist/errors.hpp"
#include "unitdist/tower.hpp"

namespace unitdist::zk {

struct ZVec {
    std::vector<mpz_class> num;  // 1 << height entries
    mpz_class den;               // > 0
    const Tower* tower = nullptr;
};

// Per-level radicand in integer form; scalar radicands (the common case) are
// kept as a plain fraction.
struct ZLevel {
    bool scalar = true;
    mpz_class p, q;          // radicand = p / q when scalar
    std::vector<mpz_class> rnum;  // else radicand numerators over rden
    mpz_class rden;
};

inline std::vector<ZLevel> zlevels(const Tower* t) {
    std::vector<ZLevel> levels(t->height());
    const Tower* cur = t;
    for (unsigned i = t->height(); i > 0; --i, cur = cur->prefix().get()) {
        const TowerElem& r = cur->radicand();
        ZLevel& L = levels[i - 1];
        bool scalar = true;
        for (size_t j = 1; j < r.coeffs().size(); ++j)
            if (!r.coeffs()[j].is_zero()) { scalar = false; break; }
        L.scalar = scalar;
        if (scalar) {
            L.p = r.coeffs()[0].num();
            L.q = r.coeffs()[0].den();
        } else {
            L.rden = 1;
            for (const auto& c : r.coeffs()) mpz_lcm(L.rden.get_mpz_t(), L.rden.get_mpz_t(), c.den().get_mpz_t());
            L.rnum.reserve(r.coeffs().size());
            for (const auto& c : r.coeffs()) L.rnum.push_back(c.num() * (L.rden / c.den()));
        }
    }
    return levels;
}

// Converts with the target tower's coefficient count (zero-padding above the
// element's own height; the element's tower must be a prefix).
inline ZVec to_zvec(const TowerElem& e, const Tower* target) {
    ZVec z;
    z.tower = target;
    const size_t n = size_t{1} << target->height();
    z.den = 1;
    for (const auto& c : e.coeffs()) mpz_lcm(z.den.get_mpz_t(), z.den.get_mpz_t(), c.den().get_mpz_t());
    z.num.resize(n);
    for (size_t i = 0; i < e.coeffs().size(); ++i)
        z.num[i] = e.coeffs()[i].num() * (z.den / e.coeffs()[i].den());
    return z;
}

inline bool zis_zero(const ZVec& a) {
    for (const auto& x : a.num)
        if (x != 0) return false;
    return true;
}

// a - b over the common denominator den_a * den_b.
inline ZVec zsub(const ZVec& a, const ZVec& b) {
    ZVec out;
    out.tower = a.tower;
    out.den = a.den * b.den;
    out.num.resize(a.num.size());
    for (size_t i = 0; i < a.num.size(); ++i) out.num[i] = a.num[i] * b.den - b.num[i] * a.den;
    return out;
}

namespace detail {

using ZSpan = const mpz_class*;

// LIFO pool of mpz buffers; reused storage keeps the Karatsuba recursion off
// the allocator. Borrowed space is always fully overwritten before use.
struct ZScratchPool {
    std::vector<std::vector<mpz_class>> bufs;
    size_t top = 0;
};
inline thread_local ZScratchPool g_zscratch;

class ZScratch {
   public:
    explicit ZScratch(size_t n) : idx_(g_zscratch.top++) {
        if (idx_ >= g_zscratch.bufs.size()) g_zscratch.bufs.emplace_back();
        auto& b = g_zscratch.bufs[idx_];
        if (b.size() < n) b.resize(n);
    }
    ZScratch(const ZScratch&) = delete;
    ~ZScratch() { --g_zscratch.top; }
    mpz_class* data() { return g_zscratch.bufs[idx_].data(); }

   private:
    size_t idx_;
};

inline bool span_zero(ZSpan a, size_t n) {
    for (size_t i = 0; i < n; ++i)
        if (a[i] != 0) return false;
    return true;
}

// out = a * b at the given level; `den_scale` collects the extra denominator
// factors contributed by scalar radicand divisions.
void zmul(ZSpan a, ZSpan b, mpz_class* out, size_t n, const std::vector<ZLevel>& levels,
          unsigned level, mpz_class& den_scale);

// out = x * radicand(level); multiplies den_scale by the radicand's
// denominator contribution.
inline void zradmul(ZSpan x, mpz_class* out, size_t n, const std::vector<ZLevel>& levels,
                    unsigned level, mpz_class& den_scale) {
    const ZLevel& L = levels[level - 1];
    if (L.scalar) {
        for (size_t i = 0; i < n; ++i) out[i] = x[i] * L.p;
        den_scale *= L.q;
    } else {
        mpz_class inner_scale = 1;
        ZScratch rad_s(n);
        mpz_class* rad = rad_s.data();
        for (size_t i = 0; i < n; ++i) rad[i] = i < L.rnum.size() ? L.rnum[i] : 0;
        zmul(x, rad, out, n, levels, level - 1, inner_scale);
        den_scale *= inner_scale * L.rden;
    }
}

inline void zmul(ZSpan a, ZSpan b, mpz_class* out, size_t n, const std::vector<ZLevel>& levels,
                 unsigned level, mpz_class& den_scale) {
    if (level == 0) {
        out[0] = a[0] * b[0];
        return;
    }
    const size_t half = n / 2;
    ZSpan alo = a, ahi = a + half, blo = b, bhi = b + half;
    const bool za = span_zero(ahi, half), zb = span_zero(bhi, half);
    if (za && zb) {
        mpz_class s = 1;
        zmul(alo, blo, out, half, levels, level - 1, s);
        for (size_t i = 0; i < half; ++i) out[half + i] = 0;
        den_scale *= s;
        return;
    }
    if (za || zb) {
        ZSpan common = za ? alo : blo;
        ZSpan olo_in = za ? blo : alo;
        ZSpan ohi_in = za ? bhi : ahi;
        if (span_zero(common, half)) {
            for (size_t i = 0; i < n; ++i) out[i] = 0;
            return;
        }
        mpz_class s1 = 1, s2 = 1;
        zmul(common, olo_in, out, half, levels, level - 1, s1);
        zmul(common, ohi_in, out + half, half, levels, level - 1, s2);
        // the two halves may carry different scales; align over s1 * s2
        if (s1 != s2) {
            for (size_t i = 0; i < half; ++i) out[i] *= s2;
            for (size_t i = 0; i < half; ++i) out[half + i] *= s1;
            den_scale *= s1 * s2;
        } else {
            den_scale *= s1;
        }
        return;
    }
    // Karatsuba with radicand recombination:
    //   lo = alo*blo * q + p * ahi*bhi   (scalar radicand p/q), den *= q
    ZScratch b1(half), b2(half), b3(half), b4(half), b5(half), b6(half);
    mpz_class *p1 = b1.data(), *p2 = b2.data(), *s1v = b3.data(), *s2v = b4.data(),
              *p3 = b5.data(), *rp2 = b6.data();
    mpz_class c1 = 1, c2 = 1, c3 = 1, cr = 1;
    zmul(alo, blo, p1, half, levels, level - 1, c1);
    zmul(ahi, bhi, p2, half, levels, level - 1, c2);
    for (size_t i = 0; i < half; ++i) {
        s1v[i] = alo[i] + ahi[i];
        s2v[i] = blo[i] + bhi[i];
    }
    zmul(s1v, s2v, p3, half, levels, level - 1, c3);
    zradmul(p2, rp2, half, levels, level, cr);
    // bring all parts over the common scale c1*c2*c3*cr
    // lo_i = p1*c2*c3*cr + rp2*c1*c3 ; hi_i = (p3 - p1 - p2)*... with care:
    // p3 has scale c3; p1 c1; p2 c2; rp2 c2*cr.
    mpz_class m_p1 = c2 * c3 * cr;
    mpz_class m_rp2 = c1 * c3;
    mpz_class m_p3 = c1 * c2 * cr;
    mpz_class m_p1h = c2 * c3 * cr;
    mpz_class m_p2h = c1 * c3 * cr;
    for (size_t i = 0; i < half; ++i) {
        out[i] = p1[i] * m_p1 + rp2[i] * m_rp2;
        out[half + i] = p3[i] * m_p3 - p1[i] * m_p1h - p2[i] * m_p2h;
    }
    den_scale *= c1 * c2 * c3 * cr;
}

}  // namespace detail

inline void zmul_into(const ZVec& a, const ZVec& b, const std::vector<ZLevel>& levels,
                      ZVec& out) {
    out.tower = a.tower;
    out.num.resize(a.num.size());
    mpz_class scale = 1;
    detail::zmul(a.num.data(), b.num.data(), out.num.data(), a.num.size(), levels,
                 a.tower->height(), scale);
    out.den = a.den * b.den * scale;
}

inline void zsub_into(const ZVec& a, const ZVec& b, ZVec& out) {
    out.tower = a.tower;
    out.den = a.den * b.den;
    out.num.resize(a.num.size());
    for (size_t i = 0; i < a.num.size(); ++i) out.num[i] = a.num[i] * b.den - b.num[i] * a.den;
}

inline void zadd_into(const ZVec& a, const ZVec& b, ZVec& out) {
    out.tower = a.tower;
    out.den = a.den * b.den;
    out.num.resize(a.num.size());
    for (size_t i = 0; i < a.num.size(); ++i) out.num[i] = a.num[i] * b.den + b.num[i] * a.den;
}

inline ZVec zmul(const ZVec& a, const ZVec& b, const std::vector<ZLevel>& levels) {
    ZVec out;
    zmul_into(a, b, levels, out);
    return out;
}

// u == e as field values, comparing over the cross denominator.
inline bool zequiv(const ZVec& u, const ZVec& e) {
    for (size_t i = 0; i < u.num.size(); ++i)
        if (u.num[i] * e.den != e.num[i] * u.den) return false;
    return true;
}

// Reusable exact phi-equality checks over one fixed tower; buffers persist
// across pairs so bulk validation stays off the allocator.
class PhiChecker {
   public:
    explicit PhiChecker(const Tower* t) : levels_(zlevels(t)) {}

    bool real_pair(const ZVec& ax, const ZVec& ay, const ZVec& bx, const ZVec& by,
                   const ZVec& expected) {
        zsub_into(ax, bx, dx_);
        zsub_into(ay, by, dy_);
        zmul_into(dx_, dx_, levels_, sx_);
        zmul_into(dy_, dy_, levels_, sy_);
        zadd_into(sx_, sy_, v_);
        return zequiv(v_, expected);
    }

    // components per point: x_re, x_im, y_re, y_im
    bool complex_pair(const std::array<ZVec, 4>& a, const std::array<ZVec, 4>& b,
                      const ZVec& expected) {
        zsub_into(a[0], b[0], dx_);
        zsub_into(a[1], b[1], ix_);
        zsub_into(a[2], b[2], dy_);
        zsub_into(a[3], b[3], iy_);
        // imaginary part 2(dx ix + dy iy) must vanish
        zmul_into(dx_, ix_, levels_, sx_);
        zmul_into(dy_, iy_, levels_, sy_);
        zadd_into(sx_, sy_, v_);
        if (!zis_zero(v_)) return false;
        // real part dx^2 - ix^2 + dy^2 - iy^2
        zmul_into(dx_, dx_, levels_, sx_);
        zmul_into(dy_, dy_, levels_, sy_);
        zadd_into(sx_, sy_, v_);
        zmul_into(ix_, ix_, levels_, sx_);
        zmul_into(iy_, iy_, levels_, sy_);
        zadd_into(sx_, sy_, w_);
        zsub_into(v_, w_, sx_);
        return zequiv(sx_, expected);
    }

   private:
    std::vector<ZLevel> levels_;
    ZVec dx_, dy_, ix_, iy_, sx_, sy_, v_, w_;
};

inline ZVec zadd(const ZVec& a, const ZVec& b) {
    ZVec out;
    out.tower = a.tower;
    out.den = a.den * b.den;
    out.num.resize(a.num.size());
    for (size_t i = 0; i < a.num.size(); ++i) out.num[i] = a.num[i] * b.den + b.num[i] * a.den;
    return out;
}

// a == r (rational) without normalizing: num[0]*1 == r*den and all other
// coefficients zero.
inline bool zequals_rational(const ZVec& a, const Rational& r) {
    for (size_t i = 1; i < a.num.size(); ++i)
        if (a.num[i] != 0) return false;
    return a.num[0] * r.den() == r.num() * a.den;
}

inline TowerElem to_tower_elem(const ZVec& a, const TowerPtr& t) {
    std::vector<Rational> c;
    c.reserve(a.num.size());
    for (const auto& n : a.num) c.emplace_back(n, a.den);
    return TowerElem::from_coeffs(t, std::move(c));
}

}  // namespace unitdist::zk
