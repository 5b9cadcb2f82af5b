#include "tverwind/drawings.hpp"

#include "tverwind/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tverwind {

using nlohmann::json;

// ---------------------------------------------------------------- Graph

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0 || n > 64) throw InvalidArgument("graph size must be in 0..64");
    for (auto& [u, v] : edges_) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                  "} out of range");
        if (u == v) throw InvalidArgument("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InvalidArgument("duplicate edge");
    adj_.assign(n, 0);
    for (auto [u, v] : edges_) {
        adj_[u] |= std::uint64_t{1} << v;
        adj_[v] |= std::uint64_t{1} << u;
    }
}

Graph Graph::complete(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    return adj_[u] >> v & 1;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adj_[v] >> u & 1) out.push_back(u);
    return out;
}

int Graph::degree(int v) const { return __builtin_popcountll(adj_.at(v)); }

bool Graph::is_complete() const {
    return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

std::uint64_t Graph::adjacency(int v) const { return adj_.at(v); }

// ---------------------------------------------------------------- Drawing

Drawing::Drawing(Graph graph, std::vector<Rational2> positions)
    : Drawing(std::move(graph), std::move(positions), {}) {}

Drawing::Drawing(Graph graph, std::vector<Rational2> positions,
                 std::vector<std::vector<Rational2>> bends)
    : graph_(std::move(graph)), positions_(std::move(positions)), bends_(std::move(bends)) {
    if (bends_.empty()) bends_.resize(graph_.edge_count());
    validate();
}

void Drawing::validate() const {
    if (positions_.size() != static_cast<std::size_t>(graph_.n()))
        throw InvalidDrawing("drawing has " + std::to_string(positions_.size()) +
                             " positions for " + std::to_string(graph_.n()) + " vertices");
    if (bends_.size() != graph_.edge_count())
        throw InvalidDrawing("bend list count does not match edge count");
    for (std::size_t e = 0; e < graph_.edge_count(); ++e) {
        auto pts = arc(e);
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            if (pts[i] == pts[i + 1]) {
                auto [u, v] = graph_.edges()[e];
                throw InvalidDrawing("arc of edge {" + std::to_string(u) + "," +
                                     std::to_string(v) + "} has a zero-length segment");
            }
    }
}

std::vector<Rational2> Drawing::arc(std::size_t e) const {
    auto [u, v] = graph_.edges().at(e);
    std::vector<Rational2> pts;
    pts.reserve(bends_[e].size() + 2);
    pts.push_back(positions_[u]);
    pts.insert(pts.end(), bends_[e].begin(), bends_[e].end());
    pts.push_back(positions_[v]);
    return pts;
}

std::vector<Segment> Drawing::arc_segments(std::size_t e) const {
    auto pts = arc(e);
    std::vector<Segment> segs;
    segs.reserve(pts.size() - 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) segs.push_back({pts[i], pts[i + 1]});
    return segs;
}

std::vector<Rational2> Drawing::arc_from(int u, int v) const {
    int e = graph_.edge_index(u, v);
    if (e < 0)
        throw MissingEdge("edge {" + std::to_string(u) + "," + std::to_string(v) +
                          "} is not in the graph");
    auto pts = arc(static_cast<std::size_t>(e));
    if (u > v) std::reverse(pts.begin(), pts.end());
    return pts;
}

ClosedPLCurve Drawing::cycle_curve(const std::vector<int>& cycle) const {
    std::vector<Rational2> pts;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        auto a = arc_from(cycle[i], cycle[(i + 1) % cycle.size()]);
        pts.insert(pts.end(), a.begin(), a.end() - 1);
    }
    return ClosedPLCurve(std::move(pts));
}

ClosedPLCurve Drawing::triangle_curve(int u, int v, int w) const { return cycle_curve({u, v, w}); }

bool Drawing::straight_line() const {
    return std::all_of(bends_.begin(), bends_.end(), [](const auto& b) { return b.empty(); });
}

// ---------------------------------------------------------------- generators

Drawing alternating_linear_drawing(int n) {
    if (n < 3) throw InvalidArgument("alternating drawing needs n >= 3");
    Graph g = Graph::complete(n);
    std::vector<Rational2> pos;
    for (int i = 1; i <= n; ++i) pos.emplace_back(Rational(i), Rational(0));

    const Rational quarter(1, 4);
    const Rational n2(n * n);
    std::vector<std::vector<Rational2>> bends;
    for (auto [u, v] : g.edges()) {
        const int i = u + 1, j = v + 1;
        Rational h = Rational(j - i) + Rational(i) / n2;
        if (i % 2 == 0) h = -h;
        bends.push_back({{Rational(i) + quarter, h}, {Rational(j) - quarter, h}});
    }
    return Drawing(std::move(g), std::move(pos), std::move(bends));
}

std::vector<Rational2> sierksma_configuration(int d, int q, const Rational& spread) {
    if (d != 1 && d != 2) throw InvalidArgument("sierksma configuration supports d = 1, 2");
    if (q < 2) throw InvalidArgument("q must be at least 2");
    if (spread <= 0 || spread >= Rational(1, 100))
        throw InvalidArgument("spread must lie in (0, 1/100) of the unit edge length");

    std::vector<Rational2> corners;
    if (d == 1) {
        corners = {{0, 0}, {1, 0}};
    } else {
        // 13/15 approximates sqrt(3)/2.
        corners = {{0, 0}, {1, 0}, {frac(1, 2), frac(13, 15)}};
    }

    std::vector<Rational2> pts;
    for (std::size_t c = 0; c < corners.size(); ++c) {
        for (int k = 1; k < q; ++k) {
            // Points on a small parabola arc, turned differently at each
            // corner, so no three points anywhere are collinear.
            Rational t = frac(k, q);
            Rational a = spread * t / 2, b = spread * t * t / 2;
            Rational2 off;
            if (d == 1) off = {a, 0};
            else if (c == 0) off = {a, b};
            else if (c == 1) off = {-b, a};
            else off = {b, -a};
            pts.push_back(corners[c] + off);
        }
    }
    Rational2 center{0, 0};
    for (const auto& c : corners) center = center + c;
    const Rational k(static_cast<long>(corners.size()));
    pts.push_back({center.x / k, center.y / k});
    return pts;
}

Drawing random_drawing(const Graph& graph, std::uint64_t seed, const Rational& box) {
    if (box <= 0) throw InvalidArgument("box must be positive");
    Rational scaled = box * 8;
    Integer limit = scaled.get_num() / scaled.get_den();
    if (limit < 1) throw InvalidArgument("box too small for the 1/8 grid");
    const auto lim = static_cast<std::int64_t>(limit.get_si());

    Rng rng(seed);
    constexpr int kRetries = 1000;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<Rational2> pos;
        for (int v = 0; v < graph.n(); ++v) {
            auto x = rng.uniform(-lim, lim), y = rng.uniform(-lim, lim);
            pos.emplace_back(frac(x, 8), frac(y, 8));
        }
        try {
            Drawing dr(graph, std::move(pos));
            if (general_position_check(dr).empty()) return dr;
        } catch (const InvalidDrawing&) {
        }
    }
    throw RetriesExhausted("no general-position drawing found in " + std::to_string(kRetries) +
                           " attempts");
}

// ---------------------------------------------------------------- general position

std::string to_string(GPViolation::Kind kind) {
    switch (kind) {
    case GPViolation::Kind::coincident_vertices: return "coincident-vertices";
    case GPViolation::Kind::vertex_on_disjoint_edge: return "vertex-on-disjoint-edge";
    case GPViolation::Kind::disjoint_edges_overlap: return "disjoint-edges-overlap";
    case GPViolation::Kind::triple_point_of_disjoint_edges: return "triple-point-of-disjoint-edges";
    }
    return "unknown";
}

std::vector<GPViolation> general_position_check(const Drawing& dr) {
    const Graph& g = dr.graph();
    std::vector<GPViolation> out;
    auto edge_face = [&](std::size_t e) {
        return Face{g.edges()[e].first, g.edges()[e].second};
    };

    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (dr.position(u) == dr.position(v))
                out.push_back({GPViolation::Kind::coincident_vertices, {Face{u}, Face{v}},
                               dr.position(u)});

    std::vector<std::vector<Segment>> arcs;
    for (std::size_t e = 0; e < g.edge_count(); ++e) arcs.push_back(dr.arc_segments(e));

    for (int v = 0; v < g.n(); ++v)
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            auto [a, b] = g.edges()[e];
            if (a == v || b == v) continue;
            for (const auto& s : arcs[e])
                if (on_segment(dr.position(v), s)) {
                    out.push_back({GPViolation::Kind::vertex_on_disjoint_edge,
                                   {Face{v}, edge_face(e)}, dr.position(v)});
                    break;
                }
        }

    // Crossing points of disjoint edges, with the edges through each.
    std::map<Rational2, std::set<std::size_t>> crossings;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        for (std::size_t f = e + 1; f < g.edge_count(); ++f) {
            auto [a, b] = g.edges()[e];
            auto [c, d] = g.edges()[f];
            if (a == c || a == d || b == c || b == d) continue;
            bool overlapped = false;
            for (const auto& s : arcs[e])
                for (const auto& t : arcs[f]) {
                    auto r = segment_intersect(s, t);
                    if (r.kind == IntersectionResult::Kind::overlap) {
                        if (!overlapped)
                            out.push_back({GPViolation::Kind::disjoint_edges_overlap,
                                           {edge_face(e), edge_face(f)}, r.overlap()});
                        overlapped = true;
                    } else if (r.kind == IntersectionResult::Kind::point) {
                        auto& through = crossings[r.point()];
                        through.insert(e);
                        through.insert(f);
                    }
                }
        }
    }

    for (const auto& [pt, edges] : crossings) {
        if (edges.size() < 3) continue;
        std::vector<std::size_t> es(edges.begin(), edges.end());
        bool found = false;
        for (std::size_t i = 0; i < es.size() && !found; ++i)
            for (std::size_t j = i + 1; j < es.size() && !found; ++j)
                for (std::size_t k = j + 1; k < es.size() && !found; ++k) {
                    Face fi = edge_face(es[i]), fj = edge_face(es[j]), fk = edge_face(es[k]);
                    if (fi.disjoint(fj) && fi.disjoint(fk) && fj.disjoint(fk)) {
                        out.push_back({GPViolation::Kind::triple_point_of_disjoint_edges,
                                       {fi, fj, fk}, pt});
                        found = true;
                    }
                }
    }
    return out;
}

Drawing perturb(const Drawing& dr, std::uint64_t seed, const Rational& magnitude) {
    if (magnitude < 0) throw InvalidArgument("perturbation magnitude must be nonnegative");
    Rng rng(seed);
    Rational mag = magnitude;
    // Offsets per coordinate are mag * k / 2048 with |k| <= 1024, so the
    // offset vector has norm at most mag / sqrt(2).
    auto jitter = [&](const Rational2& p) {
        Rational dx = mag * frac(rng.uniform(-1024, 1024), 2048);
        Rational dy = mag * frac(rng.uniform(-1024, 1024), 2048);
        return Rational2{p.x + dx, p.y + dy};
    };

    constexpr int kRetries = 64;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<Rational2> pos;
        for (const auto& p : dr.positions()) pos.push_back(jitter(p));
        std::vector<std::vector<Rational2>> bends;
        for (const auto& chain : dr.bends()) {
            bends.emplace_back();
            for (const auto& p : chain) bends.back().push_back(jitter(p));
        }
        try {
            Drawing out(dr.graph(), std::move(pos), std::move(bends));
            if (general_position_check(out).empty()) return out;
        } catch (const InvalidDrawing&) {
        }
        mag /= 2;
    }
    throw RetriesExhausted("perturbation did not reach general position in " +
                           std::to_string(kRetries) + " attempts");
}

// ---------------------------------------------------------------- JSON

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j, const std::string& where) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) throw ParseError(where, "expected a rational string");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(where, e.what());
    }
}

json point_to_json(const Rational2& p) { return json::array({to_string(p.x), to_string(p.y)}); }

Rational2 point_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw ParseError(where, "expected [x, y]");
    return {rational_from_json(j[0], where + "[0]"), rational_from_json(j[1], where + "[1]")};
}

json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("", "expected a JSON object");
    if (!j.contains("n") || !j["n"].is_number_integer()) throw ParseError("n", "expected integer");
    const int n = j["n"].get<int>();
    if (!j.contains("edges") || !j["edges"].is_array())
        throw ParseError("edges", "expected array of [u, v] pairs");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& e = j["edges"][i];
        const std::string where = "edges[" + std::to_string(i) + "]";
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw ParseError(where, "expected [u, v]");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph(n, std::move(edges));
    } catch (const InvalidArgument& e) {
        throw ParseError("edges", e.what());
    }
}

json drawing_to_json(const Drawing& dr) {
    json j = graph_to_json(dr.graph());
    json positions = json::object();
    for (int v = 0; v < dr.graph().n(); ++v)
        positions[std::to_string(v)] = point_to_json(dr.position(v));
    json bends = json::object();
    for (std::size_t e = 0; e < dr.graph().edge_count(); ++e) {
        if (dr.bends()[e].empty()) continue;
        auto [u, v] = dr.graph().edges()[e];
        json chain = json::array();
        for (const auto& p : dr.bends()[e]) chain.push_back(point_to_json(p));
        bends[std::to_string(u) + "-" + std::to_string(v)] = chain;
    }
    j["positions"] = positions;
    j["bends"] = bends;
    return j;
}

Drawing drawing_from_json(const json& j) {
    Graph g = graph_from_json(j);
    if (!j.contains("positions") || !j["positions"].is_object())
        throw ParseError("positions", "expected object keyed by vertex");
    const auto& jp = j["positions"];
    for (auto it = jp.begin(); it != jp.end(); ++it) {
        bool known = false;
        for (int v = 0; v < g.n() && !known; ++v) known = it.key() == std::to_string(v);
        if (!known) throw ParseError("positions." + it.key(), "not a vertex of the graph");
    }
    std::vector<Rational2> pos;
    for (int v = 0; v < g.n(); ++v) {
        const std::string key = std::to_string(v);
        if (!jp.contains(key)) throw ParseError("positions." + key, "missing position");
        pos.push_back(point_from_json(jp[key], "positions." + key));
    }

    std::vector<std::vector<Rational2>> bends(g.edge_count());
    if (j.contains("bends")) {
        const auto& jb = j["bends"];
        if (!jb.is_object()) throw ParseError("bends", "expected object keyed by \"u-v\"");
        for (auto it = jb.begin(); it != jb.end(); ++it) {
            const std::string where = "bends." + it.key();
            int u = -1, v = -1;
            auto dash = it.key().find('-');
            try {
                if (dash == std::string::npos) throw std::invalid_argument(it.key());
                std::size_t used = 0;
                u = std::stoi(it.key().substr(0, dash), &used);
                if (used != dash) throw std::invalid_argument(it.key());
                v = std::stoi(it.key().substr(dash + 1), &used);
                if (used != it.key().size() - dash - 1) throw std::invalid_argument(it.key());
            } catch (const std::exception&) {
                throw ParseError(where, "key must have the form \"u-v\"");
            }
            int e = g.edge_index(u, v);
            if (e < 0 || u > v) throw ParseError(where, "not an edge \"u-v\" with u < v");
            if (!it.value().is_array()) throw ParseError(where, "expected array of points");
            for (std::size_t i = 0; i < it.value().size(); ++i)
                bends[e].push_back(
                    point_from_json(it.value()[i], where + "[" + std::to_string(i) + "]"));
        }
    }
    try {
        return Drawing(std::move(g), std::move(pos), std::move(bends));
    } catch (const InvalidDrawing& e) {
        throw ParseError("", e.what());
    }
}

json gp_report_to_json(const std::vector<GPViolation>& violations) {
    json list = json::array();
    for (const auto& v : violations) {
        json faces = json::array();
        for (const auto& f : v.involved) faces.push_back(f.vertices());
        json loc;
        if (const auto* p = std::get_if<Rational2>(&v.location)) loc = {{"point", point_to_json(*p)}};
        else {
            const auto& seg = std::get<Segment>(v.location);
            loc = {{"segment", json::array({point_to_json(seg.a), point_to_json(seg.b)})}};
        }
        list.push_back({{"kind", to_string(v.kind)}, {"faces", faces}, {"location", loc}});
    }
    return {{"general_position", violations.empty()}, {"violations", list}};
}

std::string write_drawing(const Drawing& dr) { return drawing_to_json(dr).dump() + "\n"; }

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col),
                         "malformed JSON");
    }
}

Drawing read_drawing(const std::string& text) { return drawing_from_json(parse_json_text(text)); }

}  // namespace tverwind
