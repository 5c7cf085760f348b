#include "unitdist/witness.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "unitdist/errors.hpp"
#include "zkernel.hpp"

namespace unitdist {

namespace {

constexpr uint64_t kFnvOffset1 = 0xcbf29ce484222325ULL;
constexpr uint64_t kFnvOffset2 = 0x6c62272e07bb0142ULL;
constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

uint64_t fnv1a(std::string_view s, uint64_t h) {
    for (unsigned char c : s) {
        h ^= c;
        h *= kFnvPrime;
    }
    return h;
}

Label hash_label(std::string_view s) {
    return Label{fnv1a(s, kFnvOffset1), fnv1a(s, kFnvOffset2)};
}

uint64_t hash64(std::string_view s) { return fnv1a(s, kFnvOffset1); }

std::string hex64(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<size_t>(i)] = digits[v & 0xf];
    return out;
}

uint64_t parse_hex64(std::string_view s) {
    uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v, 16);
    if (ec != std::errc() || p != s.data() + s.size())
        throw StructuralError("bad hex id: '" + std::string(s) + "'");
    return v;
}

}  // namespace

std::string Label::hex() const { return hex64(hi) + hex64(lo); }

Label Label::parse(std::string_view s) {
    if (s.size() != 32) throw StructuralError("point label must be 32 hex chars");
    return Label{parse_hex64(s.substr(0, 16)), parse_hex64(s.substr(16))};
}

std::string_view rule_name(Rule r) {
    switch (r) {
        case Rule::UnitEdge: return "unit-edge";
        case Rule::TwoRhombus3: return "two-rhombus-sqrt3";
        case Rule::TripleRewrite: return "triple-rewrite";
        case Rule::FivePoint: return "five-point-double";
        case Rule::IsoscelesSub: return "isosceles-subtract";
        case Rule::Sqrt2Rewrite: return "sqrt2-rewrite";
        case Rule::TwoRhombus22: return "two-rhombus-2sqrt2over3";
    }
    throw StructuralError("corrupt rule");
}

Rule rule_from_name(std::string_view s) {
    for (Rule r : {Rule::UnitEdge, Rule::TwoRhombus3, Rule::TripleRewrite, Rule::FivePoint,
                   Rule::IsoscelesSub, Rule::Sqrt2Rewrite, Rule::TwoRhombus22})
        if (rule_name(r) == s) return r;
    throw StructuralError("unknown provenance rule: '" + std::string(s) + "'");
}

Label WitnessSet::label_of(const ExactPoint2& p) {
    return hash_label("x|" + p.x.trimmed().ser() + "|y|" + p.y.trimmed().ser());
}

// ----------------------------------------------------------- WitnessAssembly

Label WitnessAssembly::add_point(const ExactPoint2& p) {
    ExactPoint2 t{p.x.trimmed(), p.y.trimmed()};
    Label l = WitnessSet::label_of(t);
    auto it = point_index.find(l);
    if (it != point_index.end()) {
        if (!(points[it->second].second == t))
            throw Error("point label collision between distinct coordinates");
        return l;
    }
    point_index.emplace(l, points.size());
    points.emplace_back(l, std::move(t));
    return l;
}

uint32_t WitnessAssembly::add_dist(const TowerElem& d) {
    TowerElem t = d.trimmed();
    for (size_t i = 0; i < dists.size(); ++i)
        if (dists[i] == t) return static_cast<uint32_t>(i);
    dists.push_back(std::move(t));
    return static_cast<uint32_t>(dists.size() - 1);
}

void WitnessAssembly::add_pair(Label a, Label b, uint32_t dist, PairRole role, uint64_t prov_id) {
    if (b < a) std::swap(a, b);
    pairs.push_back(WitnessPair{a, b, dist, role, prov_id});
}

uint64_t prov_content_hash(const ProvNode& n, const std::vector<TowerElem>& dists) {
    std::string content;
    content += rule_name(n.rule);
    content += "|" + n.ex.hex() + "|" + n.ey.hex() + "|" + dists[n.dist].ser();
    for (const auto& rd : n.needs)
        content += "|" + rd.a.hex() + "," + rd.b.hex() + "," + dists[rd.dist].ser();
    for (uint64_t c : n.children) content += "|c" + hex64(c);
    return hash64(content);
}

uint64_t WitnessAssembly::add_node(ProvNode n) {
    n.id = prov_content_hash(n, dists);
    auto it = prov.find(n.id);
    if (it != prov.end()) {
        const ProvNode& e = it->second;
        if (e.rule != n.rule || e.ex != n.ex || e.ey != n.ey || e.dist != n.dist ||
            e.needs.size() != n.needs.size() || e.children != n.children)
            throw Error("provenance id collision between distinct nodes");
        return n.id;  // identical content, already present
    }
    uint64_t id = n.id;
    prov.emplace(id, std::move(n));
    return id;
}

// ----------------------------------------------------------------- WitnessSet

WitnessSet::WitnessSet(WitnessAssembly a) {
    points_ = std::move(a.points);
    std::sort(points_.begin(), points_.end(),
              [](const auto& p, const auto& q) { return p.first < q.first; });
    for (size_t i = 0; i < points_.size(); ++i) {
        if (i > 0 && points_[i].first == points_[i - 1].first)
            throw Error("duplicate point label after assembly");
        index_.emplace(points_[i].first, i);
    }
    dists_ = std::move(a.dists);
    pairs_ = std::move(a.pairs);
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    prov_ = std::move(a.prov);
    ex_ = a.endpoint_x;
    ey_ = a.endpoint_y;
    root_ = a.root;
    if (!index_.count(ex_) || !index_.count(ey_))
        throw StructuralError("witness-set endpoints are not members");
    // The set's tower is the tallest coordinate tower (all prefix-compatible).
    tower_ = Tower::rationals();
    for (const auto& [l, p] : points_) {
        tower_ = common_tower(tower_, p.x.tower());
        tower_ = common_tower(tower_, p.y.tower());
    }
    for (const auto& d : dists_) tower_ = common_tower(tower_, d.tower());
}

const ExactPoint2& WitnessSet::point(const Label& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw StructuralError("no point with label " + l.hex());
    return points_[it->second].second;
}

const TowerElem& WitnessSet::dist(uint32_t idx) const {
    if (idx >= dists_.size()) throw StructuralError("squared-distance index out of range");
    return dists_[idx];
}

const WitnessPair& WitnessSet::endpoint_pair() const {
    Label a = ex_, b = ey_;
    if (b < a) std::swap(a, b);
    for (const auto& p : pairs_)
        if (p.a == a && p.b == b) return p;
    throw StructuralError("witness set lacks its endpoint pair");
}

WitnessStats WitnessSet::stats() const {
    WitnessStats s;
    s.point_count = points_.size();
    // distinct (a, b) among unit pairs
    std::vector<std::pair<Label, Label>> units;
    for (const auto& p : pairs_)
        if (p.role == PairRole::Unit) units.emplace_back(p.a, p.b);
    std::sort(units.begin(), units.end());
    units.erase(std::unique(units.begin(), units.end()), units.end());
    s.unit_pair_count = units.size();
    s.tower_height = tower_->height();
    for (const auto& [l, p] : points_)
        s.max_coeff_bits = std::max({s.max_coeff_bits, p.x.max_coeff_bits(), p.y.max_coeff_bits()});
    return s;
}

void WitnessSet::validate() const {
    // labels really are the content hashes, and no two points coincide
    for (const auto& [l, p] : points_) {
        if (label_of(p) != l) throw Error("stored label does not match coordinates");
    }
    if (!index_.count(ex_) || !index_.count(ey_))
        throw StructuralError("endpoints missing from point set");

    // soundness: every declared squared distance recomputes exactly; all
    // coordinates are converted once and checked with the integer kernel
    {
        const Tower* tw = tower_.get();
        zk::PhiChecker checker(tw);
        std::vector<std::array<zk::ZVec, 2>> zc;
        zc.reserve(points_.size());
        for (const auto& [l, p] : points_)
            zc.push_back({zk::to_zvec(p.x, tw), zk::to_zvec(p.y, tw)});
        std::vector<zk::ZVec> zd;
        zd.reserve(dists_.size());
        for (const auto& d : dists_) zd.push_back(zk::to_zvec(d, tw));
        for (const auto& pr : pairs_) {
            const auto& a = zc[index_.at(pr.a)];
            const auto& b = zc[index_.at(pr.b)];
            if (!checker.real_pair(a[0], a[1], b[0], b[1], zd[pr.dist]))
                throw Error("declared pair distance does not recompute: " + pr.a.hex() + " - " +
                            pr.b.hex());
        }
    }

    // unit pairs alone connect the whole set
    std::vector<size_t> uf(points_.size());
    std::iota(uf.begin(), uf.end(), size_t{0});
    auto find = [&](size_t i) {
        while (uf[i] != i) i = uf[i] = uf[uf[i]];
        return i;
    };
    for (const auto& pr : pairs_) {
        if (pr.role != PairRole::Unit) continue;
        uf[find(index_.at(pr.a))] = find(index_.at(pr.b));
    }
    const size_t root0 = points_.empty() ? 0 : find(0);
    for (size_t i = 1; i < points_.size(); ++i)
        if (find(i) != root0) throw Error("unit pairs do not span the witness set");

    // provenance audit: every pair's node exists, unit pairs cite unit edges,
    // and every derived pair's figure constraints are present with the exact
    // same squared distances
    // Distinct squared distances may repeat under different pool indices only
    // if values differ, so membership can compare canonical serializations.
    std::vector<std::string> dist_ser;
    dist_ser.reserve(dists_.size());
    for (const auto& d : dists_) dist_ser.push_back(d.ser());
    std::vector<std::tuple<Label, Label, const std::string*>> present;
    present.reserve(pairs_.size());
    auto tuple_less = [](const auto& p, const auto& q) {
        return std::tie(std::get<0>(p), std::get<1>(p), *std::get<2>(p)) <
               std::tie(std::get<0>(q), std::get<1>(q), *std::get<2>(q));
    };
    for (const auto& pr : pairs_)
        present.emplace_back(pr.a, pr.b, &dist_ser[pr.dist]);
    std::sort(present.begin(), present.end(), tuple_less);
    auto has = [&](Label a, Label b, const std::string& d) {
        if (b < a) std::swap(a, b);
        return std::binary_search(present.begin(), present.end(), std::make_tuple(a, b, &d),
                                  tuple_less);
    };
    for (const auto& pr : pairs_) {
        auto it = prov_.find(pr.prov);
        if (it == prov_.end()) throw Error("pair cites a missing provenance node");
        const ProvNode& n = it->second;
        if (pr.role == PairRole::Unit && n.rule != Rule::UnitEdge)
            throw Error("unit pair cites a non-unit provenance node");
        if (pr.role == PairRole::Derived) {
            if (n.rule == Rule::UnitEdge) throw Error("derived pair cites a unit edge");
            for (const auto& rd : n.needs)
                if (!has(rd.a, rd.b, dist_ser[rd.dist]))
                    throw Error("figure constraint missing from pair list");
        }
    }
    for (const auto& [id, n] : prov_) {
        for (uint64_t c : n.children)
            if (!prov_.count(c)) throw Error("provenance child missing");
    }
    if (!prov_.empty() && !prov_.count(root_)) throw Error("provenance root missing");
}

WitnessAssembly WitnessSet::release() && {
    WitnessAssembly a;
    a.points = std::move(points_);
    for (size_t i = 0; i < a.points.size(); ++i) a.point_index.emplace(a.points[i].first, i);
    a.endpoint_x = ex_;
    a.endpoint_y = ey_;
    a.dists = std::move(dists_);
    a.pairs = std::move(pairs_);
    a.prov = std::move(prov_);
    a.root = root_;
    return a;
}

WitnessSet WitnessSet::merge(const std::vector<WitnessSet>& sets) {
    std::vector<WitnessSet> copy = sets;
    return merge(std::move(copy));
}

WitnessSet WitnessSet::merge(std::vector<WitnessSet>&& sets) {
    if (sets.empty()) throw StructuralError("merge of zero witness sets");
    WitnessAssembly a;
    a.endpoint_x = sets[0].ex_;
    a.endpoint_y = sets[0].ey_;
    a.root = sets[0].root_;

    std::unordered_map<Label, size_t, LabelHash> where;
    std::map<std::string, uint32_t> dist_index;  // by canonical serialization
    for (WitnessSet& s : sets) {
        // verify tower compatibility loudly rather than failing deep inside
        for (const WitnessSet& t : sets) (void)common_tower(s.tower_, t.tower_);

        std::vector<uint32_t> dist_remap(s.dists_.size());
        for (size_t i = 0; i < s.dists_.size(); ++i) {
            std::string key = s.dists_[i].ser();
            auto it = dist_index.find(key);
            if (it == dist_index.end()) {
                a.dists.push_back(s.dists_[i]);
                it = dist_index.emplace(key, static_cast<uint32_t>(a.dists.size() - 1)).first;
            }
            dist_remap[i] = it->second;
        }
        for (auto& [l, p] : s.points_) {
            auto it = where.find(l);
            if (it == where.end()) {
                where.emplace(l, a.points.size());
                a.points.emplace_back(l, std::move(p));
            } else if (!(a.points[it->second].second == p)) {
                throw Error("point label collision between distinct coordinates in merge");
            }
        }
        for (const auto& pr : s.pairs_)
            a.pairs.push_back(WitnessPair{pr.a, pr.b, dist_remap[pr.dist], pr.role, pr.prov});
        for (auto& [id, n] : s.prov_) {
            ProvNode node = std::move(n);
            node.dist = dist_remap[node.dist];
            for (auto& rd : node.needs) rd.dist = dist_remap[rd.dist];
            auto it = a.prov.find(id);
            if (it == a.prov.end()) a.prov.emplace(id, std::move(node));
        }
        s.points_.clear();
        s.pairs_.clear();
        s.prov_.clear();
        s.index_.clear();
    }
    return WitnessSet(std::move(a));
}

}  // namespace unitdist
