#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "unitdist/point.hpp"
#include "unitdist/tower.hpp"

namespace unitdist {

// Content-addressed point label: 128-bit hash of the trimmed exact
// coordinates, so identical points get identical labels in any assembly
// order. A collision between distinct points is checked for and treated as
// an internal error.
struct Label {
    uint64_t hi = 0, lo = 0;
    auto operator<=>(const Label&) const = default;
    std::string hex() const;
    static Label parse(std::string_view s);
};

struct LabelHash {
    size_t operator()(const Label& l) const { return l.hi ^ (l.lo * 0x9e3779b97f4a7c15ULL); }
};

enum class PairRole : uint8_t { Unit, Derived };

// Which derivation step justifies a pair.
enum class Rule : uint8_t {
    UnitEdge,       // a base segment; self-justifying
    TwoRhombus3,    // sqrt3 step (first two-rhombus figure)
    TripleRewrite,  // 3d = sqrt3(sqrt3 d)
    FivePoint,      // doubling figure
    IsoscelesSub,   // sqrt(a^2 - b^2) figure
    Sqrt2Rewrite,   // sqrt2 d = sqrt((sqrt3 d)^2 - d^2)
    TwoRhombus22,   // 2*sqrt2/3 step (second two-rhombus figure)
};

std::string_view rule_name(Rule r);
Rule rule_from_name(std::string_view s);

// (a, b) at an exact squared distance; dist indexes the owning set's pool.
struct RequiredDistance {
    Label a, b;
    uint32_t dist;
};

// One derivation node. For figure rules, `needs` lists the figure's
// constraint pairs and `children` the covering sub-witness-sets' roots; the
// audit in WitnessSet::validate checks the needs against the pair list.
struct ProvNode {
    uint64_t id = 0;  // content hash of everything below
    Rule rule = Rule::UnitEdge;
    Label ex, ey;       // concluded pair
    uint32_t dist = 0;  // its squared distance
    std::vector<RequiredDistance> needs;
    std::vector<uint64_t> children;
};

struct WitnessPair {
    Label a, b;  // a < b
    uint32_t dist;
    PairRole role;
    uint64_t prov;
    auto operator<=>(const WitnessPair&) const = default;
};

// Content hash a provenance node gets as its id; shared by the assembly and
// the serialization parser so stored ids stay verifiable.
uint64_t prov_content_hash(const ProvNode& n, const std::vector<TowerElem>& dists);

struct WitnessStats {
    size_t point_count = 0;
    size_t unit_pair_count = 0;
    unsigned tower_height = 0;
    size_t max_coeff_bits = 0;
};

// Mutable staging area the builder, merge and parser fill; WitnessSet seals
// it into canonical order.
struct WitnessAssembly {
    std::vector<std::pair<Label, ExactPoint2>> points;
    std::unordered_map<Label, size_t, LabelHash> point_index;
    Label endpoint_x, endpoint_y;
    std::vector<TowerElem> dists;
    std::vector<WitnessPair> pairs;
    std::map<uint64_t, ProvNode> prov;
    uint64_t root = 0;

    Label add_point(const ExactPoint2& p);          // trims, labels, dedups
    uint32_t add_dist(const TowerElem& d);          // interns by exact value
    void add_pair(Label a, Label b, uint32_t dist, PairRole role, uint64_t prov_id);
    uint64_t add_node(ProvNode n);                  // fills in the content id
};

// Finite labeled point set with its required distances and the derivation
// tree that produced them.
class WitnessSet {
   public:
    explicit WitnessSet(WitnessAssembly a);

    const TowerPtr& tower() const { return tower_; }
    const std::vector<std::pair<Label, ExactPoint2>>& points() const { return points_; }
    const ExactPoint2& point(const Label& l) const;
    bool has_point(const Label& l) const { return index_.count(l) != 0; }
    const Label& endpoint_x() const { return ex_; }
    const Label& endpoint_y() const { return ey_; }
    const std::vector<WitnessPair>& pairs() const { return pairs_; }
    const std::vector<TowerElem>& dist_pool() const { return dists_; }
    const TowerElem& dist(uint32_t idx) const;
    const std::map<uint64_t, ProvNode>& provenance() const { return prov_; }
    uint64_t root() const { return root_; }

    // The pair connecting the two endpoints (every built set has one).
    const WitnessPair& endpoint_pair() const;

    WitnessStats stats() const;

    // Re-derives every stored fact from the exact coordinates: pair
    // distances, label hashes, endpoint membership, unit-graph connectivity,
    // and the provenance audit. Throws on the first violation.
    void validate() const;

    static Label label_of(const ExactPoint2& p);

    // Point-set union with exact dedup; pair lists and provenance united.
    // All towers must be prefix-compatible. Endpoints come from the first
    // set. The && overload releases each input as it is folded in.
    static WitnessSet merge(const std::vector<WitnessSet>& sets);
    static WitnessSet merge(std::vector<WitnessSet>&& sets);

    // Moves the contents back out for further assembly (builder internals).
    WitnessAssembly release() &&;

   private:
    WitnessSet() = default;
    TowerPtr tower_;
    std::vector<std::pair<Label, ExactPoint2>> points_;  // sorted by label
    std::unordered_map<Label, size_t, LabelHash> index_;
    Label ex_, ey_;
    std::vector<TowerElem> dists_;
    std::vector<WitnessPair> pairs_;  // sorted, deduplicated
    std::map<uint64_t, ProvNode> prov_;
    uint64_t root_ = 0;
};

}  // namespace unitdist
