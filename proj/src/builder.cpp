#include "unitdist/builder.hpp"

#include <functional>

#include "unitdist/errors.hpp"

namespace unitdist {

namespace {

// Exact rigid motion p -> t + R p, R = [[c, -s], [s, c]] with c^2 + s^2 = 1.
struct Frame {
    TowerElem tx, ty, c, s;

    ExactPoint2 apply(const ExactPoint2& p) const {
        return ExactPoint2{tx + c * p.x - s * p.y, ty + s * p.x + c * p.y};
    }
};

// Frame taking the segment (p, q) onto (a, b); both segments must have the
// same exact phi value.
Frame frame_between(const ExactPoint2& p, const ExactPoint2& q, const ExactPoint2& a,
                    const ExactPoint2& b) {
    TowerElem dx1 = q.x - p.x, dy1 = q.y - p.y;
    TowerElem dx2 = b.x - a.x, dy2 = b.y - a.y;
    TowerElem n = dx1.square() + dy1.square();
    if (!(n == dx2.square() + dy2.square()))
        throw PreconditionError("transport requires segments of equal exact length");
    if (n.is_zero()) throw PreconditionError("transport of a degenerate segment");
    TowerElem ninv = n.inverse();
    TowerElem c = (dx2 * dx1 + dy2 * dy1) * ninv;
    TowerElem s = (dy2 * dx1 - dx2 * dy1) * ninv;
    TowerElem tx = a.x - (c * p.x - s * p.y);
    TowerElem ty = a.y - (s * p.x + c * p.y);
    return Frame{std::move(tx), std::move(ty), std::move(c), std::move(s)};
}

struct Anchor {
    ExactPoint2 a, b;
    DistanceWord word;
    Rational dist2;
};

TowerElem rat(const Rational& q) { return TowerElem::from_rational(q); }

}  // namespace

WitnessSet transport(const WitnessSet& s, const ExactPoint2& a, const ExactPoint2& b) {
    const ExactPoint2& p = s.point(s.endpoint_x());
    const ExactPoint2& q = s.point(s.endpoint_y());
    Frame f = frame_between(p, q, a, b);

    WitnessAssembly out;
    out.dists = s.dist_pool();
    std::unordered_map<Label, Label, LabelHash> relabel;
    relabel.reserve(s.points().size());
    for (const auto& [l, pt] : s.points()) relabel.emplace(l, out.add_point(f.apply(pt)));

    // Provenance ids are content hashes, so rewrite nodes bottom-up.
    std::unordered_map<uint64_t, uint64_t> node_map;
    std::function<uint64_t(uint64_t)> rewrite = [&](uint64_t old_id) -> uint64_t {
        auto done = node_map.find(old_id);
        if (done != node_map.end()) return done->second;
        auto it = s.provenance().find(old_id);
        if (it == s.provenance().end()) throw Error("dangling provenance reference");
        const ProvNode& n = it->second;
        ProvNode m;
        m.rule = n.rule;
        m.ex = relabel.at(n.ex);
        m.ey = relabel.at(n.ey);
        m.dist = n.dist;
        m.needs.reserve(n.needs.size());
        for (const auto& rd : n.needs)
            m.needs.push_back(RequiredDistance{relabel.at(rd.a), relabel.at(rd.b), rd.dist});
        m.children.reserve(n.children.size());
        for (uint64_t c : n.children) m.children.push_back(rewrite(c));
        uint64_t id = out.add_node(std::move(m));
        node_map.emplace(old_id, id);
        return id;
    };
    for (const auto& [id, n] : s.provenance()) rewrite(id);

    out.pairs.reserve(s.pairs().size());
    for (const auto& pr : s.pairs())
        out.add_pair(relabel.at(pr.a), relabel.at(pr.b), pr.dist, pr.role, node_map.at(pr.prov));
    out.endpoint_x = relabel.at(s.endpoint_x());
    out.endpoint_y = relabel.at(s.endpoint_y());
    out.root = node_map.at(s.root());
    return WitnessSet(std::move(out));
}

const WitnessSet& SessionBuilder::build(const DistanceWord& w) {
    if (w.weight() > static_cast<unsigned>(std::max(0, depth_limit_)))
        throw CapacityError("word " + w.str() + " exceeds the depth limit " +
                            std::to_string(depth_limit_) + " (weight " +
                            std::to_string(w.weight()) + ")");
    const std::string key = w.str();
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    WitnessSet s = build_uncached(w);
    return memo_.emplace(key, std::move(s)).first->second;
}

WitnessSet SessionBuilder::take(const DistanceWord& w) {
    build(w);
    auto it = memo_.find(w.str());
    WitnessSet out = std::move(it->second);
    memo_.erase(it);
    return out;
}

WitnessSet SessionBuilder::build_uncached(const DistanceWord& w) {
    switch (w.kind()) {
        case DistanceWord::Kind::Base:
            return build_base();
        case DistanceWord::Kind::Sqrt3:
        case DistanceWord::Kind::TwoSqrt2Over3:
            return build_two_rhombus(w);
        case DistanceWord::Kind::Twice:
            return build_five_point(w);
        case DistanceWord::Kind::Triple:
            return rewrap(w, DistanceWord::sqrt3(DistanceWord::sqrt3(w.sub())),
                          Rule::TripleRewrite);
        case DistanceWord::Kind::Sqrt2:
            return rewrap(w, DistanceWord::pythag_sub(DistanceWord::sqrt3(w.sub()), w.sub()),
                          Rule::Sqrt2Rewrite);
        case DistanceWord::Kind::PythagSub:
            return build_isosceles_sub(w);
    }
    throw StructuralError("corrupt word");
}

TowerElem SessionBuilder::adjoin(const TowerElem& r) {
    if (r.sign() <= 0)
        throw Error("construction discriminant is not positive; the figure would be unrealizable");
    AdjoinResult res = adjoin_sqrt(tower_, r.lifted_to(common_tower(tower_, r.tower())));
    tower_ = res.tower;
    return res.root;
}

WitnessSet SessionBuilder::build_base() {
    WitnessAssembly a;
    ExactPoint2 x{rat(0), rat(0)};
    ExactPoint2 y{rat(1), rat(0)};
    Label lx = a.add_point(x);
    Label ly = a.add_point(y);
    uint32_t d1 = a.add_dist(rat(1));
    ProvNode n;
    n.rule = Rule::UnitEdge;
    n.ex = lx;
    n.ey = ly;
    n.dist = d1;
    uint64_t id = a.add_node(std::move(n));
    a.add_pair(lx, ly, d1, PairRole::Unit, id);
    a.endpoint_x = lx;
    a.endpoint_y = ly;
    a.root = id;
    return WitnessSet(std::move(a));
}

namespace {

// Shared assembly tail for all figure builds: construct each anchor's
// witness set, transport it into place, merge, then add the concluded pairs
// with the figure's provenance node.
struct FigurePlan {
    Rule rule;
    ExactPoint2 x, y;
    std::vector<Anchor> anchors;
    std::vector<std::pair<ExactPoint2, ExactPoint2>> concluded;  // all at dist2
    Rational dist2;
};

WitnessSet assemble_figure(SessionBuilder& sb, const FigurePlan& plan) {
    for (const Anchor& an : plan.anchors) {
        if (!(phi2(an.a, an.b) == rat(an.dist2)))
            throw Error("figure anchor distance does not match its word; construction bug");
    }
    std::vector<WitnessSet> parts;
    parts.reserve(plan.anchors.size());
    std::vector<uint64_t> children;
    children.reserve(plan.anchors.size());
    for (const Anchor& an : plan.anchors) {
        WitnessSet moved = transport(sb.build(an.word), an.a, an.b);
        children.push_back(moved.root());
        parts.push_back(std::move(moved));
    }
    WitnessAssembly a = std::move(WitnessSet::merge(std::move(parts))).release();

    ProvNode n;
    n.rule = plan.rule;
    n.ex = WitnessSet::label_of(plan.x);
    n.ey = WitnessSet::label_of(plan.y);
    n.dist = a.add_dist(rat(plan.dist2));
    for (const Anchor& an : plan.anchors)
        n.needs.push_back(RequiredDistance{WitnessSet::label_of(an.a),
                                           WitnessSet::label_of(an.b), a.add_dist(rat(an.dist2))});
    n.children = std::move(children);
    const uint32_t dist_idx = n.dist;
    uint64_t id = a.add_node(std::move(n));
    for (const auto& [p, q] : plan.concluded)
        a.add_pair(WitnessSet::label_of(p), WitnessSet::label_of(q), dist_idx, PairRole::Derived,
                   id);
    a.endpoint_x = WitnessSet::label_of(plan.x);
    a.endpoint_y = WitnessSet::label_of(plan.y);
    a.root = id;
    return WitnessSet(std::move(a));
}

}  // namespace

WitnessSet SessionBuilder::build_two_rhombus(const DistanceWord& w) {
    const bool sqrt3_step = w.kind() == DistanceWord::Kind::Sqrt3;
    const DistanceWord& wp = w.sub();
    const Rational d2q = wp.value_squared();
    const Rational L2q = w.value_squared();
    TowerElem d = wp.value(tower_);
    TowerElem L = adjoin(rat(L2q));

    const TowerElem zero = rat(0);
    ExactPoint2 X{zero, zero};
    ExactPoint2 Y{L, zero};
    // Apex heights over the midline: the sqrt3 figure uses +-d/2; the
    // 2sqrt2/3 figure needs |p1 p2| = 3d, forcing heights 5d/3 and -4d/3.
    const Rational h1 = sqrt3_step ? Rational(1, 2) : Rational(5, 3);
    const Rational h2 = sqrt3_step ? Rational(-1, 2) : Rational(-4, 3);
    TowerElem Lhalf = L * Rational(1, 2);
    ExactPoint2 P1{Lhalf, d * h1};
    ExactPoint2 P2{Lhalf, d * h2};

    // y-tilde: intersection of circle(x, L) and circle(y, d), positive branch.
    const Rational u2q = (L2q * Rational(2) - d2q) * (L2q * Rational(2) - d2q) / (L2q * Rational(4));
    const Rational v2q = L2q - u2q;
    if (v2q.sign() <= 0) throw Error("two-rhombus discriminant not positive; construction bug");
    TowerElem u = rat(L2q * Rational(2) - d2q) / (L * Rational(2));
    TowerElem v = adjoin(rat(v2q));
    ExactPoint2 YT{u, v};

    // Mirrored pair around the x - y-tilde axis: rotate P1, P2 by the frame
    // taking (L,0) to y-tilde.
    TowerElem cos = u / L;
    TowerElem sin = v / L;
    auto rot = [&](const ExactPoint2& p) {
        return ExactPoint2{cos * p.x - sin * p.y, sin * p.x + cos * p.y};
    };
    ExactPoint2 PT1 = rot(P1);
    ExactPoint2 PT2 = rot(P2);

    FigurePlan plan;
    plan.rule = sqrt3_step ? Rule::TwoRhombus3 : Rule::TwoRhombus22;
    plan.x = X;
    plan.y = Y;
    plan.dist2 = L2q;
    plan.concluded = {{X, Y}, {X, YT}};
    if (sqrt3_step) {
        for (const auto& [A, B] : std::initializer_list<std::pair<ExactPoint2, ExactPoint2>>{
                 {Y, YT}, {X, P1}, {X, P2}, {Y, P1}, {Y, P2}, {P1, P2},
                 {X, PT1}, {X, PT2}, {YT, PT1}, {YT, PT2}, {PT1, PT2}})
            plan.anchors.push_back(Anchor{A, B, wp, d2q});
    } else {
        const DistanceWord s3 = DistanceWord::sqrt3(wp);
        const DistanceWord s2 = DistanceWord::sqrt2(wp);
        const DistanceWord t3 = DistanceWord::triple(wp);
        plan.anchors.push_back(Anchor{Y, YT, wp, d2q});
        for (const auto& [A, B] : std::initializer_list<std::pair<ExactPoint2, ExactPoint2>>{
                 {X, P1}, {Y, P1}, {X, PT1}, {YT, PT1}})
            plan.anchors.push_back(Anchor{A, B, s3, d2q * Rational(3)});
        for (const auto& [A, B] : std::initializer_list<std::pair<ExactPoint2, ExactPoint2>>{
                 {X, P2}, {Y, P2}, {X, PT2}, {YT, PT2}})
            plan.anchors.push_back(Anchor{A, B, s2, d2q * Rational(2)});
        plan.anchors.push_back(Anchor{P1, P2, t3, d2q * Rational(9)});
        plan.anchors.push_back(Anchor{PT1, PT2, t3, d2q * Rational(9)});
    }
    return assemble_figure(*this, plan);
}

WitnessSet SessionBuilder::build_five_point(const DistanceWord& w) {
    const DistanceWord& wp = w.sub();
    const Rational d2q = wp.value_squared();
    TowerElem d = wp.value(tower_);
    TowerElem H = adjoin(rat(d2q * Rational(3)));  // sqrt(3) d

    const TowerElem zero = rat(0);
    const Rational half(1, 2);
    ExactPoint2 X{zero, zero};
    ExactPoint2 Y{d * Rational(2), zero};
    ExactPoint2 P1{d, zero};
    ExactPoint2 P2{d * half, H * half};
    ExactPoint2 P3{d * Rational(3, 2), H * half};

    FigurePlan plan;
    plan.rule = Rule::FivePoint;
    plan.x = X;
    plan.y = Y;
    plan.dist2 = d2q * Rational(4);
    plan.concluded = {{X, Y}};
    for (const auto& [A, B] : std::initializer_list<std::pair<ExactPoint2, ExactPoint2>>{
             {P1, P2}, {P1, P3}, {P2, P3}, {X, P1}, {X, P2}, {Y, P1}, {Y, P3}})
        plan.anchors.push_back(Anchor{A, B, wp, d2q});
    const DistanceWord s3 = DistanceWord::sqrt3(wp);
    plan.anchors.push_back(Anchor{X, P3, s3, d2q * Rational(3)});
    plan.anchors.push_back(Anchor{Y, P2, s3, d2q * Rational(3)});
    return assemble_figure(*this, plan);
}

WitnessSet SessionBuilder::build_isosceles_sub(const DistanceWord& w) {
    const DistanceWord& wa = w.minuend();
    const DistanceWord& wb = w.subtrahend();
    const Rational a2q = wa.value_squared();
    const Rational b2q = wb.value_squared();
    const Rational L2q = w.value_squared();  // checks a > b
    TowerElem bval = wb.value(tower_);
    TowerElem L = adjoin(rat(L2q));

    const TowerElem zero = rat(0);
    ExactPoint2 X{zero, zero};
    ExactPoint2 Y{L, zero};
    ExactPoint2 P1{zero, bval};
    ExactPoint2 P2{zero, -bval};

    FigurePlan plan;
    plan.rule = Rule::IsoscelesSub;
    plan.x = X;
    plan.y = Y;
    plan.dist2 = L2q;
    plan.concluded = {{X, Y}};
    plan.anchors.push_back(Anchor{X, P1, wb, b2q});
    plan.anchors.push_back(Anchor{X, P2, wb, b2q});
    plan.anchors.push_back(Anchor{Y, P1, wa, a2q});
    plan.anchors.push_back(Anchor{Y, P2, wa, a2q});
    plan.anchors.push_back(Anchor{P1, P2, DistanceWord::twice(wb), b2q * Rational(4)});
    return assemble_figure(*this, plan);
}

WitnessSet SessionBuilder::rewrap(const DistanceWord& w, const DistanceWord& rewritten,
                                  Rule rule) {
    WitnessSet copy = build(rewritten);
    WitnessAssembly a = std::move(copy).release();
    ProvNode n;
    n.rule = rule;
    n.ex = a.endpoint_x;
    n.ey = a.endpoint_y;
    n.dist = a.add_dist(rat(w.value_squared()));
    n.children = {a.root};
    a.root = a.add_node(std::move(n));
    return WitnessSet(std::move(a));
}

WitnessSet build_canonical(const DistanceWord& w, int depth_limit) {
    SessionBuilder sb(depth_limit);
    return sb.take(w);
}

WitnessSet build_between(const ExactPoint2& x, const ExactPoint2& y, const DistanceWord& w,
                         int depth_limit) {
    if (!(phi2(x, y) == rat(w.value_squared())))
        throw PreconditionError("endpoint distance does not equal the word's value");
    SessionBuilder sb(depth_limit);
    return transport(sb.build(w), x, y);
}

}  // namespace unitdist
