#include "unitdist/serialize.hpp"

#include <algorithm>
#include <sstream>

#include "unitdist/errors.hpp"

namespace unitdist {

namespace {

Json encode_coeffs_rec(std::span<const Rational> c) {
    if (c.size() == 1) return c[0].str();
    const size_t half = c.size() / 2;
    return Json::array({encode_coeffs_rec(c.first(half)), encode_coeffs_rec(c.subspan(half))});
}

// Trimmed nested encoding; a parser pads to whatever height it needs.
Json encode_elem_coeffs(const TowerElem& e) {
    return encode_coeffs_rec(e.trimmed().coeffs());
}

unsigned encoding_depth(const nlohmann::json& j) {
    if (j.is_string()) return 0;
    if (j.is_array() && j.size() == 2) return 1 + encoding_depth(j[0]);
    throw StructuralError("coefficient encoding must be a string or a 2-element array");
}

void decode_coeffs_rec(const nlohmann::json& j, std::vector<Rational>& out, size_t at,
                       size_t size) {
    if (j.is_string()) {
        if (size != 1) throw StructuralError("coefficient encoding too shallow");
        out[at] = Rational::parse(j.get<std::string>());
        return;
    }
    if (!j.is_array() || j.size() != 2)
        throw StructuralError("coefficient encoding must be a string or a 2-element array");
    decode_coeffs_rec(j[0], out, at, size / 2);
    decode_coeffs_rec(j[1], out, at + size / 2, size / 2);
}

// Parses a nested coefficient encoding of depth <= the target tower height,
// producing the element in the exact prefix tower matching its depth.
TowerElem decode_elem(const nlohmann::json& j, const TowerPtr& set_tower) {
    const unsigned depth = encoding_depth(j);
    if (depth > set_tower->height())
        throw StructuralError("coefficient encoding deeper than the declared tower");
    TowerPtr t = set_tower;
    while (t->height() > depth) t = t->prefix();
    std::vector<Rational> c(size_t{1} << depth);
    decode_coeffs_rec(j, c, 0, c.size());
    return TowerElem::from_coeffs(t, std::move(c));
}

Json encode_tower(const TowerPtr& t) {
    std::vector<const Tower*> chain;
    for (const Tower* cur = t.get(); cur->height() > 0; cur = cur->prefix().get())
        chain.push_back(cur);
    std::reverse(chain.begin(), chain.end());
    Json arr = Json::array();
    for (const Tower* lvl : chain) arr.push_back(encode_elem_coeffs(lvl->radicand()));
    return arr;
}

TowerPtr decode_tower(const nlohmann::json& j) {
    if (!j.is_array()) throw StructuralError("tower encoding must be an array of radicands");
    TowerPtr t = Tower::rationals();
    for (const auto& rad : j) {
        TowerElem r = decode_elem(rad, t);
        if (r.sign() <= 0) throw StructuralError("tower radicand is not positive");
        if (sqrt_in_tower(r))
            throw StructuralError("tower radicand is a square in its prefix tower");
        t = Tower::extend(t, std::move(r));
    }
    return t;
}

std::string role_name(PairRole r) { return r == PairRole::Unit ? "unit" : "derived"; }

PairRole role_from_name(const std::string& s) {
    if (s == "unit") return PairRole::Unit;
    if (s == "derived") return PairRole::Derived;
    throw StructuralError("unknown pair role: '" + s + "'");
}

std::string hex_id(uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i, v >>= 4) out[static_cast<size_t>(i)] = digits[v & 0xf];
    return out;
}

uint64_t parse_id(const std::string& s) {
    if (s.size() != 16) throw StructuralError("provenance id must be 16 hex chars");
    uint64_t v = 0;
    for (char c : s) {
        v <<= 4;
        if (c >= '0' && c <= '9') v |= static_cast<uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f') v |= static_cast<uint64_t>(c - 'a' + 10);
        else throw StructuralError("bad hex digit in provenance id");
    }
    return v;
}

}  // namespace

std::string decimal_of(const TowerElem& e, unsigned digits) {
    QInterval iv = e.approximate(digits + 2);
    return iv.midpoint().decimal(digits);
}

Json to_json(const TowerElem& e) {
    return Json{{"tower", encode_tower(e.tower())}, {"coeffs", encode_coeffs_rec(e.coeffs())}};
}

TowerElem tower_elem_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("tower") || !j.contains("coeffs"))
        throw StructuralError("tower element encoding must carry 'tower' and 'coeffs'");
    TowerPtr t = decode_tower(j["tower"]);
    TowerElem e = decode_elem(j["coeffs"], t);
    return e.lifted_to(t);
}

Json to_json(const WitnessSet& s) {
    Json points = Json::array();
    for (const auto& [l, p] : s.points()) {
        points.push_back(Json{{"label", l.hex()},
                              {"x", encode_elem_coeffs(p.x)},
                              {"y", encode_elem_coeffs(p.y)},
                              {"approx_x", decimal_of(p.x, 6)},
                              {"approx_y", decimal_of(p.y, 6)}});
    }
    Json pairs = Json::array();
    for (const auto& pr : s.pairs()) {
        pairs.push_back(Json{{"a", pr.a.hex()},
                             {"b", pr.b.hex()},
                             {"dist2", encode_elem_coeffs(s.dist(pr.dist))},
                             {"role", role_name(pr.role)},
                             {"provenance_id", hex_id(pr.prov)}});
    }
    Json nodes = Json::array();
    for (const auto& [id, n] : s.provenance()) {
        Json needs = Json::array();
        for (const auto& rd : n.needs)
            needs.push_back(Json{{"a", rd.a.hex()},
                                 {"b", rd.b.hex()},
                                 {"dist2", encode_elem_coeffs(s.dist(rd.dist))}});
        Json children = Json::array();
        for (uint64_t c : n.children) children.push_back(hex_id(c));
        nodes.push_back(Json{{"id", hex_id(id)},
                             {"rule", std::string(rule_name(n.rule))},
                             {"a", n.ex.hex()},
                             {"b", n.ey.hex()},
                             {"dist2", encode_elem_coeffs(s.dist(n.dist))},
                             {"needs", std::move(needs)},
                             {"children", std::move(children)}});
    }
    return Json{{"tower", encode_tower(s.tower())},
                {"points", std::move(points)},
                {"endpoints", Json::array({s.endpoint_x().hex(), s.endpoint_y().hex()})},
                {"pairs", std::move(pairs)},
                {"provenance", Json{{"root", hex_id(s.root())}, {"nodes", std::move(nodes)}}}};
}

WitnessSet witness_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw StructuralError("witness set encoding must be an object");
    for (const char* key : {"tower", "points", "endpoints", "pairs", "provenance"})
        if (!j.contains(key))
            throw StructuralError(std::string("witness set encoding lacks '") + key + "'");
    TowerPtr t = decode_tower(j["tower"]);
    WitnessAssembly a;
    for (const auto& pj : j["points"]) {
        ExactPoint2 p{decode_elem(pj.at("x"), t), decode_elem(pj.at("y"), t)};
        Label stored = Label::parse(pj.at("label").get<std::string>());
        Label computed = a.add_point(p);
        if (computed != stored)
            throw StructuralError("point label does not match its coordinates: " + stored.hex());
    }
    if (!j["endpoints"].is_array() || j["endpoints"].size() != 2)
        throw StructuralError("endpoints must be a two-element array");
    a.endpoint_x = Label::parse(j["endpoints"][0].get<std::string>());
    a.endpoint_y = Label::parse(j["endpoints"][1].get<std::string>());
    for (const auto& pj : j["pairs"]) {
        Label la = Label::parse(pj.at("a").get<std::string>());
        Label lb = Label::parse(pj.at("b").get<std::string>());
        uint32_t d = a.add_dist(decode_elem(pj.at("dist2"), t));
        PairRole role = role_from_name(pj.at("role").get<std::string>());
        uint64_t prov = parse_id(pj.at("provenance_id").get<std::string>());
        a.add_pair(la, lb, d, role, prov);
    }
    const auto& prov_json = j["provenance"];
    a.root = parse_id(prov_json.at("root").get<std::string>());
    for (const auto& nj : prov_json.at("nodes")) {
        ProvNode n;
        n.rule = rule_from_name(nj.at("rule").get<std::string>());
        n.ex = Label::parse(nj.at("a").get<std::string>());
        n.ey = Label::parse(nj.at("b").get<std::string>());
        n.dist = a.add_dist(decode_elem(nj.at("dist2"), t));
        for (const auto& rj : nj.at("needs")) {
            n.needs.push_back(RequiredDistance{Label::parse(rj.at("a").get<std::string>()),
                                               Label::parse(rj.at("b").get<std::string>()),
                                               a.add_dist(decode_elem(rj.at("dist2"), t))});
        }
        for (const auto& cj : nj.at("children")) n.children.push_back(parse_id(cj.get<std::string>()));
        uint64_t stated = parse_id(nj.at("id").get<std::string>());
        n.id = stated;
        if (prov_content_hash(n, a.dists) != stated)
            throw StructuralError("provenance node id does not match its content");
        if (!a.prov.emplace(stated, std::move(n)).second)
            throw StructuralError("duplicate provenance node id");
    }
    return WitnessSet(std::move(a));
}

Json to_json(const PointMap& m) {
    Json rows = Json::array();
    for (const auto& [l, p] : m.assignment) {
        rows.push_back(Json{{"label", l.hex()},
                            {"re_x", to_json(p.x.re())},
                            {"im_x", to_json(p.x.im())},
                            {"re_y", to_json(p.y.re())},
                            {"im_y", to_json(p.y.im())}});
    }
    return Json{{"assignment", std::move(rows)}};
}

PointMap point_map_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("assignment"))
        throw StructuralError("point map encoding must carry 'assignment'");
    PointMap m;
    for (const auto& row : j["assignment"]) {
        Label l = Label::parse(row.at("label").get<std::string>());
        ComplexPoint2 p{ComplexTowerElem(tower_elem_from_json(row.at("re_x")),
                                         tower_elem_from_json(row.at("im_x"))),
                        ComplexTowerElem(tower_elem_from_json(row.at("re_y")),
                                         tower_elem_from_json(row.at("im_y")))};
        if (!m.assignment.emplace(l, std::move(p)).second)
            throw StructuralError("duplicate label in point map: " + l.hex());
    }
    return m;
}

Json to_json(const VerificationReport& r) {
    Json pairs = Json::array();
    for (const auto& c : r.pair_results) {
        pairs.push_back(Json{{"a", c.a.hex()},
                             {"b", c.b.hex()},
                             {"role", role_name(c.role)},
                             {"declared", to_json(c.declared)},
                             {"computed_re", to_json(c.computed.re())},
                             {"computed_im", to_json(c.computed.im())},
                             {"match", c.match}});
    }
    return Json{{"unit_ok", r.unit_ok},
                {"endpoint", Json{{"declared", to_json(r.endpoint_declared)},
                                  {"computed_re", to_json(r.endpoint_phi.re())},
                                  {"computed_im", to_json(r.endpoint_phi.im())},
                                  {"match", r.endpoint_match}}},
                {"consistent", r.consistent()},
                {"pairs", std::move(pairs)}};
}

Json to_json(const ApproximationResult& r) {
    return Json{{"k", r.k},
                {"l", r.l},
                {"value", to_json(r.value)},
                {"value_squared", r.value_squared.str()},
                {"decimal", decimal_of(r.value, 6)},
                {"error_bound", r.error_bound.str()},
                {"error_decimal", r.error_bound.decimal(6)}};
}

std::string to_dot(const WitnessSet& s) {
    std::ostringstream out;
    out << "graph witness {\n  node [shape=point];\n";
    for (const auto& [l, p] : s.points()) {
        out << "  \"" << l.hex() << "\" [pos=\"" << decimal_of(p.x, 6) << ","
            << decimal_of(p.y, 6) << "!\"];\n";
    }
    for (const auto& pr : s.pairs()) {
        out << "  \"" << pr.a.hex() << "\" -- \"" << pr.b.hex() << "\"";
        if (pr.role == PairRole::Derived) out << " [style=dashed]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_svg(const WitnessSet& s) {
    // cosmetic float positions; the exact data lives in the JSON form
    struct P {
        double x, y;
    };
    std::vector<P> pos;
    pos.reserve(s.points().size());
    std::unordered_map<Label, size_t, LabelHash> idx;
    double min_x = 0, max_x = 0, min_y = 0, max_y = 0;
    bool first = true;
    for (const auto& [l, p] : s.points()) {
        double x = std::stod(decimal_of(p.x, 6));
        double y = std::stod(decimal_of(p.y, 6));
        idx.emplace(l, pos.size());
        pos.push_back(P{x, y});
        if (first || x < min_x) min_x = x;
        if (first || x > max_x) max_x = x;
        if (first || y < min_y) min_y = y;
        if (first || y > max_y) max_y = y;
        first = false;
    }
    const double span = std::max(std::max(max_x - min_x, max_y - min_y), 1e-9);
    const double margin = 40.0;
    const double scale = (800.0 - 2 * margin) / span;
    auto sx = [&](double x) { return margin + (x - min_x) * scale; };
    auto sy = [&](double y) { return 800.0 - margin - (y - min_y) * scale; };

    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(2);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\">\n";
    for (const auto& pr : s.pairs()) {
        const P& a = pos[idx.at(pr.a)];
        const P& b = pos[idx.at(pr.b)];
        out << "  <line x1=\"" << sx(a.x) << "\" y1=\"" << sy(a.y) << "\" x2=\"" << sx(b.x)
            << "\" y2=\"" << sy(b.y) << "\" stroke=\""
            << (pr.role == PairRole::Unit ? "#222222" : "#cc3333") << "\" stroke-width=\"1\"";
        if (pr.role == PairRole::Derived) out << " stroke-dasharray=\"6 4\"";
        out << "/>\n";
    }
    for (const auto& [l, p] : s.points()) {
        const P& q = pos[idx.at(l)];
        out << "  <circle cx=\"" << sx(q.x) << "\" cy=\"" << sy(q.y)
            << "\" r=\"3.5\" fill=\"#1155cc\"><title>" << l.hex() << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace unitdist
