#include "unitdist/tower.hpp"

#include <algorithm>
#include <array>
#include <cassert>

#include "unitdist/errors.hpp"

namespace unitdist {

namespace {

using Span = std::span<const Rational>;
using MutSpan = std::span<Rational>;

bool span_zero(Span s) {
    for (const auto& x : s)
        if (!x.is_zero()) return false;
    return true;
}

void span_add(Span a, Span b, MutSpan out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
}

void span_sub(Span a, Span b, MutSpan out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
}

void span_scale(Span a, const Rational& s, MutSpan out) {
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
}

void span_clear(MutSpan out) {
    for (auto& x : out) x = Rational();
}

// LIFO pool of reusable coefficient buffers for kernel temporaries. Entries
// keep their mpq storage alive across borrows, so inner loops stop hitting
// the allocator. Kernels always overwrite borrowed space before reading it.
struct ScratchPool {
    std::vector<std::vector<Rational>> bufs;
    size_t top = 0;
};
thread_local ScratchPool g_scratch;

class ScratchLease {
   public:
    explicit ScratchLease(size_t n) : idx_(g_scratch.top++), n_(n) {
        if (idx_ >= g_scratch.bufs.size()) g_scratch.bufs.emplace_back();
        auto& b = g_scratch.bufs[idx_];
        if (b.size() < n) b.resize(n);
    }
    ScratchLease(const ScratchLease&) = delete;
    ~ScratchLease() { --g_scratch.top; }
    MutSpan span() { return MutSpan(g_scratch.bufs[idx_].data(), n_); }
    Span cspan() const { return Span(g_scratch.bufs[idx_].data(), n_); }

   private:
    size_t idx_;
    size_t n_;
};

// Radicand data per level, gathered once per operation. levels[0] belongs to
// the innermost extension.
struct LevelInfo {
    Span radicand;
    bool scalar;  // radicand has only the rational slot set
};

std::vector<LevelInfo> gather_levels(const TowerPtr& t) {
    std::vector<LevelInfo> levels(t->height());
    const Tower* cur = t.get();
    for (unsigned i = t->height(); i > 0; --i, cur = cur->prefix().get()) {
        Span rad(cur->radicand().coeffs());
        bool scalar = true;
        for (size_t j = 1; j < rad.size(); ++j)
            if (!rad[j].is_zero()) { scalar = false; break; }
        levels[i - 1] = LevelInfo{rad, scalar};
    }
    return levels;
}

void span_mul(Span a, Span b, MutSpan out, const std::vector<LevelInfo>& levels, unsigned level);

// out = x * radicand_of(level), where x has 1<<(level-1) coefficients.
void radicand_mul(Span x, MutSpan out, const std::vector<LevelInfo>& levels, unsigned level) {
    const LevelInfo& li = levels[level - 1];
    if (li.scalar) {
        span_scale(x, li.radicand[0], out);
    } else {
        // The stored radicand may live lower in the chain than level-1;
        // treat missing high halves as zero.
        Span rad = li.radicand;
        if (rad.size() < x.size()) {
            ScratchLease padded(x.size());
            MutSpan pad = padded.span();
            for (size_t i = 0; i < x.size(); ++i)
                pad[i] = i < rad.size() ? rad[i] : Rational();
            span_mul(x, padded.cspan(), out, levels, level - 1);
        } else {
            span_mul(x, rad, out, levels, level - 1);
        }
    }
}

void span_mul(Span a, Span b, MutSpan out, const std::vector<LevelInfo>& levels, unsigned level) {
    if (level == 0) {
        out[0] = a[0] * b[0];
        return;
    }
    const size_t half = size_t{1} << (level - 1);
    Span alo = a.first(half), ahi = a.subspan(half);
    Span blo = b.first(half), bhi = b.subspan(half);
    MutSpan olo = out.first(half), ohi = out.subspan(half);
    const bool za = span_zero(ahi), zb = span_zero(bhi);
    if (za && zb) {
        span_mul(alo, blo, olo, levels, level - 1);
        span_clear(ohi);
        return;
    }
    if (za) {
        if (span_zero(alo)) { span_clear(olo); span_clear(ohi); return; }
        span_mul(alo, blo, olo, levels, level - 1);
        span_mul(alo, bhi, ohi, levels, level - 1);
        return;
    }
    if (zb) {
        if (span_zero(blo)) { span_clear(olo); span_clear(ohi); return; }
        span_mul(alo, blo, olo, levels, level - 1);
        span_mul(ahi, blo, ohi, levels, level - 1);
        return;
    }
    // Karatsuba: lo = alo*blo + r*(ahi*bhi), hi = (alo+ahi)(blo+bhi) - p1 - p2
    ScratchLease l1(half), l2(half), l3(half), l4(half), l5(half), l6(half);
    MutSpan p1 = l1.span(), p2 = l2.span(), s1 = l3.span(), s2 = l4.span(), p3 = l5.span(),
            rp2 = l6.span();
    span_mul(alo, blo, p1, levels, level - 1);
    span_mul(ahi, bhi, p2, levels, level - 1);
    span_add(alo, ahi, s1);
    span_add(blo, bhi, s2);
    span_mul(l3.cspan(), l4.cspan(), p3, levels, level - 1);
    radicand_mul(l2.cspan(), rp2, levels, level);
    for (size_t i = 0; i < half; ++i) {
        olo[i] = p1[i] + rp2[i];
        ohi[i] = p3[i] - p1[i] - p2[i];
    }
}

// out = a^2; squares of halves keep sparsity.
void span_sqr(Span a, MutSpan out, const std::vector<LevelInfo>& levels, unsigned level) {
    if (level == 0) {
        out[0] = a[0] * a[0];
        return;
    }
    const size_t half = size_t{1} << (level - 1);
    Span alo = a.first(half), ahi = a.subspan(half);
    MutSpan olo = out.first(half), ohi = out.subspan(half);
    if (span_zero(ahi)) {
        span_sqr(alo, olo, levels, level - 1);
        span_clear(ohi);
        return;
    }
    if (span_zero(alo)) {
        ScratchLease lh(half);
        span_sqr(ahi, lh.span(), levels, level - 1);
        radicand_mul(lh.cspan(), olo, levels, level);
        span_clear(ohi);
        return;
    }
    ScratchLease b1(half), b2(half), b3(half), b4(half);
    MutSpan l2 = b1.span(), h2 = b2.span(), cross = b3.span(), rh2 = b4.span();
    span_sqr(alo, l2, levels, level - 1);
    span_sqr(ahi, h2, levels, level - 1);
    span_mul(alo, ahi, cross, levels, level - 1);
    radicand_mul(b2.cspan(), rh2, levels, level);
    const Rational two(2);
    for (size_t i = 0; i < half; ++i) {
        olo[i] = l2[i] + rh2[i];
        ohi[i] = cross[i] * two;
    }
}

// out = 1/a. Throws DomainError on zero.
void span_inv(Span a, MutSpan out, const std::vector<LevelInfo>& levels, unsigned level) {
    if (level == 0) {
        if (a[0].is_zero()) throw DomainError("inverse of zero tower element");
        out[0] = Rational(1) / a[0];
        return;
    }
    const size_t half = size_t{1} << (level - 1);
    Span alo = a.first(half), ahi = a.subspan(half);
    MutSpan olo = out.first(half), ohi = out.subspan(half);
    if (span_zero(ahi)) {
        span_inv(alo, olo, levels, level - 1);
        span_clear(ohi);
        return;
    }
    if (span_zero(alo)) {
        // 1/(b sqrt r) = sqrt(r)/(b r)
        ScratchLease lb(half);
        radicand_mul(ahi, lb.span(), levels, level);
        span_inv(lb.cspan(), ohi, levels, level - 1);
        span_clear(olo);
        return;
    }
    // 1/(a + b sqrt r) = (a - b sqrt r) / (a^2 - b^2 r); the denominator is
    // nonzero because r is not a square in the prefix tower.
    ScratchLease b1(half), b2l(half), b3(half), b4(half), b5(half), b6(half);
    MutSpan a2 = b1.span(), b2 = b2l.span(), rb2 = b3.span(), n = b4.span(), ninv = b5.span(),
            bninv = b6.span();
    span_sqr(alo, a2, levels, level - 1);
    span_sqr(ahi, b2, levels, level - 1);
    radicand_mul(b2l.cspan(), rb2, levels, level);
    span_sub(b1.cspan(), b3.cspan(), n);
    if (span_zero(b4.cspan()))
        throw Error("tower invariant broken: radicand is a square in its prefix");
    span_inv(b4.cspan(), ninv, levels, level - 1);
    span_mul(alo, b5.cspan(), olo, levels, level - 1);
    span_mul(ahi, b5.cspan(), bninv, levels, level - 1);
    for (size_t i = 0; i < half; ++i) ohi[i] = -bninv[i];
}

std::string ser_rec(Span c, unsigned level) {
    if (level == 0) return c[0].str();
    const size_t half = size_t{1} << (level - 1);
    Span lo = c.first(half), hi = c.subspan(half);
    if (span_zero(hi)) return ser_rec(lo, level - 1);
    return "[" + ser_rec(lo, level - 1) + "," + ser_rec(hi, level - 1) + "]";
}

QInterval eval_rec(Span c, const Tower* t, unsigned bits) {
    if (t->height() == 0) return QInterval::point(c[0]);
    const size_t half = c.size() / 2;
    QInterval lo = eval_rec(c.first(half), t->prefix().get(), bits);
    if (span_zero(c.subspan(half))) return lo;
    QInterval hi = eval_rec(c.subspan(half), t->prefix().get(), bits);
    return lo + hi * t->radicand_sqrt_interval(bits);
}

}  // namespace

// ---------------------------------------------------------------- TowerElem

TowerElem::TowerElem() : tower_(Tower::rationals()), c_(1) {}

TowerElem TowerElem::from_rational(Rational q) {
    TowerElem e;
    e.c_[0] = std::move(q);
    return e;
}

TowerElem TowerElem::zero(TowerPtr t) {
    TowerElem e;
    e.c_.assign(size_t{1} << t->height(), Rational());
    e.tower_ = std::move(t);
    return e;
}

TowerElem TowerElem::one(TowerPtr t) { return constant(std::move(t), Rational(1)); }

TowerElem TowerElem::constant(TowerPtr t, Rational q) {
    TowerElem e = zero(std::move(t));
    e.c_[0] = std::move(q);
    return e;
}

TowerElem TowerElem::from_coeffs(TowerPtr t, std::vector<Rational> coeffs) {
    if (coeffs.size() != (size_t{1} << t->height()))
        throw StructuralError("coefficient count does not match tower height");
    TowerElem e;
    e.tower_ = std::move(t);
    e.c_ = std::move(coeffs);
    return e;
}

unsigned TowerElem::height() const { return tower_->height(); }

bool TowerElem::is_zero() const { return span_zero(c_); }

bool TowerElem::is_one() const {
    if (!c_[0].is_one()) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

bool TowerElem::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational TowerElem::rational_value() const {
    if (!is_rational()) throw StructuralError("tower element is not rational");
    return c_[0];
}

TowerElem TowerElem::lifted_to(const TowerPtr& target) const {
    if (towers_equal(tower_, target)) {
        TowerElem e = *this;
        e.tower_ = target;
        return e;
    }
    if (!is_prefix_of(tower_, target))
        throw StructuralError("cannot re-embed: source tower is not a prefix of target");
    TowerElem e = TowerElem::zero(target);
    std::copy(c_.begin(), c_.end(), e.c_.begin());
    return e;
}

namespace {
// Brings a and b into one tower, lifting only the side that needs it.
std::pair<const TowerElem*, const TowerElem*> align(const TowerElem& a, const TowerElem& b,
                                                    TowerElem& sa, TowerElem& sb) {
    if (a.tower() == b.tower()) return {&a, &b};
    TowerPtr ct = common_tower(a.tower(), b.tower());
    const TowerElem* pa = &a;
    const TowerElem* pb = &b;
    if (a.tower() != ct) { sa = a.lifted_to(ct); pa = &sa; }
    if (b.tower() != ct) { sb = b.lifted_to(ct); pb = &sb; }
    return {pa, pb};
}
}  // namespace

TowerElem operator+(const TowerElem& a, const TowerElem& b) {
    TowerElem sa, sb;
    auto [pa, pb] = align(a, b, sa, sb);
    TowerElem out = TowerElem::zero(pa->tower());
    span_add(pa->coeffs(), pb->coeffs(), MutSpan(out.c_));
    return out;
}

TowerElem operator-(const TowerElem& a, const TowerElem& b) {
    TowerElem sa, sb;
    auto [pa, pb] = align(a, b, sa, sb);
    TowerElem out = TowerElem::zero(pa->tower());
    span_sub(pa->coeffs(), pb->coeffs(), MutSpan(out.c_));
    return out;
}

TowerElem TowerElem::operator-() const {
    TowerElem out = *this;
    for (auto& x : out.c_) x = -x;
    return out;
}

TowerElem operator*(const TowerElem& a, const TowerElem& b) {
    TowerElem sa, sb;
    auto [pa, pb] = align(a, b, sa, sb);
    TowerElem out = TowerElem::zero(pa->tower());
    const auto levels = gather_levels(pa->tower());
    span_mul(pa->coeffs(), pb->coeffs(), MutSpan(out.c_), levels, pa->height());
    return out;
}

TowerElem operator*(const TowerElem& a, const Rational& s) {
    TowerElem out = TowerElem::zero(a.tower());
    span_scale(a.coeffs(), s, MutSpan(out.c_));
    return out;
}

TowerElem TowerElem::square() const {
    TowerElem out = TowerElem::zero(tower_);
    const auto levels = gather_levels(tower_);
    span_sqr(c_, MutSpan(out.c_), levels, height());
    return out;
}

TowerElem TowerElem::inverse() const {
    TowerElem out = TowerElem::zero(tower_);
    const auto levels = gather_levels(tower_);
    span_inv(c_, MutSpan(out.c_), levels, height());
    return out;
}

TowerElem operator/(const TowerElem& a, const TowerElem& b) {
    TowerElem sa, sb;
    auto [pa, pb] = align(a, b, sa, sb);
    return *pa * pb->inverse();
}

bool operator==(const TowerElem& a, const TowerElem& b) {
    TowerElem sa, sb;
    auto [pa, pb] = align(a, b, sa, sb);
    return pa->coeffs() == pb->coeffs();
}

int TowerElem::sign() const {
    if (is_zero()) return 0;
    for (unsigned bits = 32; bits <= (1u << 24); bits *= 2) {
        QInterval iv = eval_interval(bits);
        if (iv.is_positive()) return 1;
        if (iv.is_negative()) return -1;
    }
    throw Error("sign refinement failed to separate a nonzero element from zero");
}

QInterval TowerElem::eval_interval(unsigned bits) const {
    return eval_rec(c_, tower_.get(), bits);
}

QInterval TowerElem::approximate(unsigned digits) const {
    Rational target(1);
    for (unsigned i = 0; i < digits; ++i) target = target / Rational(10);
    for (unsigned bits = 32;; bits *= 2) {
        QInterval iv = eval_interval(bits);
        if (!(target < iv.width())) return iv;
        if (bits > (1u << 24)) throw Error("interval refinement runaway");
    }
}

TowerElem TowerElem::trimmed() const {
    TowerPtr t = tower_;
    size_t size = c_.size();
    while (size > 1 && span_zero(Span(c_).subspan(size / 2, size / 2))) {
        size /= 2;
        t = t->prefix();
    }
    if (size == c_.size()) return *this;
    return TowerElem::from_coeffs(std::move(t),
                                  std::vector<Rational>(c_.begin(), c_.begin() + size));
}

std::string TowerElem::ser() const { return ser_rec(c_, height()); }

size_t TowerElem::max_coeff_bits() const {
    size_t m = 0;
    for (const auto& x : c_) m = std::max(m, x.bit_size());
    return m;
}

// -------------------------------------------------------------------- Tower

const TowerPtr& Tower::rationals() {
    static const TowerPtr base = [] {
        auto t = std::shared_ptr<Tower>(new Tower());
        t->height_ = 0;
        return TowerPtr(t);
    }();
    return base;
}

const TowerElem& Tower::radicand() const {
    if (!radicand_) throw StructuralError("the base tower has no radicand");
    return *radicand_;
}

TowerPtr Tower::extend(const TowerPtr& prefix, TowerElem radicand) {
    if (!towers_equal(radicand.tower(), prefix))
        radicand = radicand.lifted_to(prefix);
    auto t = std::shared_ptr<Tower>(new Tower());
    t->prefix_ = prefix;
    t->radicand_.emplace(std::move(radicand));
    t->height_ = prefix->height() + 1;
    return TowerPtr(t);
}

QInterval Tower::radicand_sqrt_interval(unsigned bits) const {
    {
        std::lock_guard<std::mutex> lock(cache_mu_);
        auto it = sqrt_cache_.find(bits);
        if (it != sqrt_cache_.end()) return it->second;
    }
    QInterval rad = radicand_->eval_interval(bits);
    QInterval result = QInterval::sqrt_enclosure(rad, bits);
    std::lock_guard<std::mutex> lock(cache_mu_);
    return sqrt_cache_.emplace(bits, std::move(result)).first->second;
}

bool towers_equal(const TowerPtr& a, const TowerPtr& b) {
    if (a == b) return true;
    if (a->height() != b->height()) return false;
    if (a->height() == 0) return true;
    // Radicand coefficients compare directly; prefixes recurse.
    return towers_equal(a->prefix(), b->prefix()) &&
           a->radicand().coeffs() == b->radicand().coeffs();
}

bool is_prefix_of(const TowerPtr& p, const TowerPtr& t) {
    if (p->height() > t->height()) return false;
    TowerPtr cur = t;
    while (cur->height() > p->height()) cur = cur->prefix();
    return towers_equal(p, cur);
}

TowerPtr common_tower(const TowerPtr& a, const TowerPtr& b) {
    if (a == b) return a;
    if (a->height() >= b->height()) {
        if (is_prefix_of(b, a)) return a;
    } else if (is_prefix_of(a, b)) {
        return b;
    }
    throw StructuralError("towers are not prefix-compatible; explicit re-embedding required");
}

// --------------------------------------------------------------- squareness

namespace {

std::optional<Rational> sqrt_rational(const Rational& q) {
    if (q.sign() < 0) return std::nullopt;
    if (q.is_zero()) return Rational(0);
    if (mpz_perfect_square_p(q.num().get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(q.den().get_mpz_t()) == 0) return std::nullopt;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), q.num().get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), q.den().get_mpz_t());
    return Rational(rn, rd);
}

// Splits x (height >= 1) into its prefix-tower halves.
std::pair<TowerElem, TowerElem> split(const TowerElem& x) {
    const TowerPtr& pre = x.tower()->prefix();
    const size_t half = x.coeffs().size() / 2;
    std::vector<Rational> lo(x.coeffs().begin(), x.coeffs().begin() + half);
    std::vector<Rational> hi(x.coeffs().begin() + half, x.coeffs().end());
    return {TowerElem::from_coeffs(pre, std::move(lo)), TowerElem::from_coeffs(pre, std::move(hi))};
}

TowerElem join(const TowerPtr& t, const TowerElem& lo, const TowerElem& hi) {
    std::vector<Rational> c;
    c.reserve(lo.coeffs().size() * 2);
    c.insert(c.end(), lo.coeffs().begin(), lo.coeffs().end());
    c.insert(c.end(), hi.coeffs().begin(), hi.coeffs().end());
    return TowerElem::from_coeffs(t, std::move(c));
}

}  // namespace

std::optional<TowerElem> sqrt_in_tower(const TowerElem& x) {
    if (x.height() == 0) {
        auto r = sqrt_rational(x.coeffs()[0]);
        if (!r) return std::nullopt;
        return TowerElem::constant(x.tower(), *r);
    }
    auto [a, b] = split(x);
    const TowerPtr& t = x.tower();
    const TowerElem& r = t->radicand();
    if (b.is_zero()) {
        // (c + d sqrt r)^2 = a with 2cd = 0: either c^2 = a or d^2 r = a.
        if (auto s = sqrt_in_tower(a)) return s->lifted_to(t);
        if (auto s = sqrt_in_tower(a / r)) return join(t, TowerElem::zero(a.tower()), *s);
        return std::nullopt;
    }
    // c^2 = (a +- m)/2 where m^2 = a^2 - r b^2, then d = b/(2c).
    TowerElem n = a.square() - r * b.square();
    auto m = sqrt_in_tower(n);
    if (!m) return std::nullopt;
    const Rational half(1, 2);
    for (const TowerElem& mm : {*m, -*m}) {
        TowerElem c2 = (a + mm) * half;
        if (auto c = sqrt_in_tower(c2)) {
            if (c->is_zero()) continue;
            TowerElem d = b * (*c * Rational(2)).inverse();
            TowerElem cand = join(t, *c, d);
            assert(cand.square() == x);
            return cand;
        }
    }
    return std::nullopt;
}

AdjoinResult adjoin_sqrt(const TowerPtr& tower, const TowerElem& r) {
    TowerElem rr = towers_equal(r.tower(), tower) ? r : r.lifted_to(tower);
    if (rr.sign() <= 0)
        throw DomainError("adjoin_sqrt requires a positive radicand (real embedding)");
    if (auto s = sqrt_in_tower(rr)) {
        TowerElem root = s->sign() >= 0 ? *s : -*s;
        return AdjoinResult{tower, std::move(root), false};
    }
    TowerPtr ext = Tower::extend(tower, rr);
    TowerElem root = TowerElem::zero(ext);
    std::vector<Rational> c(size_t{1} << ext->height());
    c[c.size() / 2] = Rational(1);
    root = TowerElem::from_coeffs(ext, std::move(c));
    return AdjoinResult{std::move(ext), std::move(root), true};
}

// --------------------------------------------------------- ComplexTowerElem

ComplexTowerElem::ComplexTowerElem(TowerElem re, TowerElem im) {
    if (re.tower() == im.tower() || towers_equal(re.tower(), im.tower())) {
        re_ = std::move(re);
        im_ = std::move(im);
    } else {
        TowerPtr ct = common_tower(re.tower(), im.tower());
        re_ = re.lifted_to(ct);
        im_ = im.lifted_to(ct);
    }
}

ComplexTowerElem::ComplexTowerElem(TowerElem re)
    : re_(std::move(re)), im_(TowerElem::zero(re_.tower())) {}

ComplexTowerElem ComplexTowerElem::from_rationals(Rational re, Rational im) {
    return ComplexTowerElem(TowerElem::from_rational(std::move(re)),
                            TowerElem::from_rational(std::move(im)));
}

ComplexTowerElem operator+(const ComplexTowerElem& a, const ComplexTowerElem& b) {
    return ComplexTowerElem(a.re_ + b.re_, a.im_ + b.im_);
}

ComplexTowerElem operator-(const ComplexTowerElem& a, const ComplexTowerElem& b) {
    return ComplexTowerElem(a.re_ - b.re_, a.im_ - b.im_);
}

ComplexTowerElem operator*(const ComplexTowerElem& a, const ComplexTowerElem& b) {
    if (a.is_real()) {
        if (b.is_real()) return ComplexTowerElem(a.re_ * b.re_);
        return ComplexTowerElem(a.re_ * b.re_, a.re_ * b.im_);
    }
    if (b.is_real()) return ComplexTowerElem(a.re_ * b.re_, a.im_ * b.re_);
    return ComplexTowerElem(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexTowerElem ComplexTowerElem::square() const {
    if (is_real()) return ComplexTowerElem(re_.square());
    if (re_.is_zero()) return ComplexTowerElem(-im_.square(), TowerElem::zero(im_.tower()));
    return ComplexTowerElem(re_.square() - im_.square(), (re_ * im_) * Rational(2));
}

ComplexTowerElem ComplexTowerElem::inverse() const {
    TowerElem n = norm();
    if (n.is_zero()) throw DomainError("inverse of complex element with zero norm");
    TowerElem ninv = n.inverse();
    return ComplexTowerElem(re_ * ninv, -(im_ * ninv));
}

ComplexTowerElem operator/(const ComplexTowerElem& a, const ComplexTowerElem& b) {
    return a * b.inverse();
}

}  // namespace unitdist
