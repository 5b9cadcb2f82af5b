#include "tverwind/qwinding.hpp"

#include "tverwind/errors.hpp"
#include "tverwind/winding.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <set>
#include <stdexcept>

namespace tverwind {

std::uint64_t PathOrCycle::mask() const {
    std::uint64_t m = 0;
    for (int v : vertices) m |= std::uint64_t{1} << v;
    return m;
}

std::string to_string(const PathOrCycle& pc) {
    std::string s = pc.kind == PathOrCycle::Kind::path ? "path(" : "cycle(";
    for (std::size_t i = 0; i < pc.vertices.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(pc.vertices[i]);
    }
    return s + ')';
}

std::string to_string(const PCFamily& fam) {
    std::string s;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        if (i) s += ' ';
        s += to_string(fam.members[i]);
    }
    return s;
}

namespace {

void extend_paths(const Graph& g, int max_len, std::vector<int>& path, std::uint64_t used,
                  std::vector<PathOrCycle>& out) {
    const int last = path.back();
    const int first = path.front();
    if (path.size() == 1) {
        out.push_back({PathOrCycle::Kind::path, path});
    } else if (first < last) {
        out.push_back({PathOrCycle::Kind::path, path});
    }
    // A cycle is recorded from its minimum vertex, heading to the smaller of
    // its two neighbors, so each one appears exactly once.
    if (path.size() >= 3 && g.has_edge(last, first) && first == *std::min_element(path.begin(), path.end()) &&
        path[1] < last)
        out.push_back({PathOrCycle::Kind::cycle, path});
    if (static_cast<int>(path.size()) >= max_len) return;
    for (int w : g.neighbors(last)) {
        if (used >> w & 1) continue;
        path.push_back(w);
        extend_paths(g, max_len, path, used | std::uint64_t{1} << w, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<PathOrCycle> paths_and_cycles(const Graph& g, int max_len) {
    std::vector<PathOrCycle> out;
    if (max_len < 1) return out;
    for (int v = 0; v < g.n(); ++v) {
        std::vector<int> path{v};
        extend_paths(g, max_len, path, std::uint64_t{1} << v, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool choose_disjoint(const std::vector<PathOrCycle>& members, const std::vector<std::uint64_t>& masks,
                     std::size_t start, int remaining, std::uint64_t used, std::vector<std::size_t>& picked,
                     const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (remaining == 0) return visit(picked);
    for (std::size_t i = start; i < members.size(); ++i) {
        if (masks[i] & used) continue;
        picked.push_back(i);
        const bool go = choose_disjoint(members, masks, i + 1, remaining - 1, used | masks[i], picked, visit);
        picked.pop_back();
        if (!go) return false;
    }
    return true;
}

}  // namespace

void for_each_pc_family(const Graph& g, int q, int max_len,
                        const std::function<bool(const PCFamily&)>& visit) {
    if (q < 1 || q > g.n()) return;
    const auto members = paths_and_cycles(g, max_len);
    std::vector<std::uint64_t> masks;
    for (const auto& m : members) masks.push_back(m.mask());
    std::vector<std::size_t> picked;
    choose_disjoint(members, masks, 0, q, 0, picked, [&](const std::vector<std::size_t>& idx) {
        PCFamily fam;
        for (auto i : idx) fam.members.push_back(members[i]);
        return visit(fam);
    });
}

std::vector<PCFamily> enumerate_pc_families(const Graph& g, int q, int max_len) {
    std::vector<PCFamily> out;
    for_each_pc_family(g, q, max_len, [&](const PCFamily& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

namespace {

std::vector<int> member_edges(const Graph& g, const PathOrCycle& pc) {
    std::vector<int> edges;
    const auto& vs = pc.vertices;
    const std::size_t steps = pc.kind == PathOrCycle::Kind::cycle ? vs.size() : vs.size() - 1;
    for (std::size_t i = 0; i < steps; ++i) {
        const int a = vs[i], b = vs[(i + 1) % vs.size()];
        const int e = g.edge_index(a, b);
        if (e < 0)
            throw MissingEdge("edge {" + std::to_string(a) + "," + std::to_string(b) +
                              "} of " + to_string(pc) + " is not in the graph");
        edges.push_back(e);
    }
    return edges;
}

// Whether candidate c lies on the member's image or, for a cycle, in its
// W!=0 set.
bool satisfied(const WitnessTable& table, const PathOrCycle& pc, const std::vector<int>& edges,
               std::size_t c) {
    if (edges.empty()) return table.vertex_candidate(pc.vertices[0]) == c;
    for (int e : edges)
        if (table.on_edge(c, e)) return true;
    if (pc.kind == PathOrCycle::Kind::path) return false;
    const auto& g = table.drawing().graph();
    int w = 0;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int a = pc.vertices[i];
        const int cr = table.crossing(c, edges[i]);
        w += g.edges()[edges[i]].first == a ? cr : -cr;
    }
    return w != 0;
}

}  // namespace

std::optional<QWindingCertificate> has_q_winding_partition(const Drawing& dr, int q, int max_len) {
    const auto& g = dr.graph();
    if (q < 1 || q > g.n()) return std::nullopt;
    const auto members = paths_and_cycles(g, max_len);
    std::vector<std::vector<int>> edges;
    std::vector<std::uint64_t> masks;
    for (const auto& m : members) {
        edges.push_back(member_edges(g, m));
        masks.push_back(m.mask());
    }
    const WitnessTable table(dr);

    for (std::size_t c = 0; c < table.size(); ++c) {
        std::vector<PathOrCycle> live;
        std::vector<std::uint64_t> live_masks;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (satisfied(table, members[i], edges[i], c)) {
                live.push_back(members[i]);
                live_masks.push_back(masks[i]);
            }
        std::optional<QWindingCertificate> found;
        std::vector<std::size_t> picked;
        choose_disjoint(live, live_masks, 0, q, 0, picked, [&](const std::vector<std::size_t>& idx) {
            PCFamily fam;
            for (auto i : idx) fam.members.push_back(live[i]);
            found = QWindingCertificate{std::move(fam), table.point(c)};
            return false;
        });
        if (found) return found;
    }
    return std::nullopt;
}

std::optional<Rational2> certify_pc_family(const Drawing& dr, const PCFamily& family) {
    const auto& g = dr.graph();
    std::vector<std::vector<int>> edges;
    for (const auto& m : family.members) edges.push_back(member_edges(g, m));
    const WitnessTable table(dr);
    for (std::size_t c = 0; c < table.size(); ++c) {
        bool all = true;
        for (std::size_t i = 0; i < family.members.size() && all; ++i)
            all = satisfied(table, family.members[i], edges[i], c);
        if (all) return table.point(c);
    }
    return std::nullopt;
}

Graph delta_to_y(const Graph& g, std::array<int, 3> t) {
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2] || t[0] < 0 || t[2] >= g.n() || !g.has_edge(t[0], t[1]) ||
        !g.has_edge(t[1], t[2]) || !g.has_edge(t[0], t[2]))
        throw NotATriangle("{" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                           std::to_string(t[2]) + "} is not a triangle of the graph");
    const int hub = g.n();
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges()) {
        const bool inside = std::find(t.begin(), t.end(), u) != t.end() &&
                            std::find(t.begin(), t.end(), v) != t.end();
        if (!inside) edges.emplace_back(u, v);
    }
    for (int v : t) edges.emplace_back(v, hub);
    return Graph(g.n() + 1, std::move(edges));
}

Graph y_to_delta(const Graph& g, int v) {
    if (v < 0 || v >= g.n() || g.degree(v) != 3)
        throw NotDegree3("vertex " + std::to_string(v) + " does not have degree 3");
    const auto nb = g.neighbors(v);
    auto relabel = [v](int w) { return w > v ? w - 1 : w; };
    std::set<Edge> edges;
    for (const auto& [a, b] : g.edges())
        if (a != v && b != v) edges.emplace(relabel(a), relabel(b));
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) edges.emplace(relabel(nb[i]), relabel(nb[j]));
    return Graph(g.n() - 1, std::vector<Edge>(edges.begin(), edges.end()));
}

namespace {

bool extend_iso(const Graph& g, const Graph& h, std::vector<int>& map, std::uint64_t used, int v) {
    if (v == g.n()) return true;
    for (int w = 0; w < h.n(); ++w) {
        if (used >> w & 1 || g.degree(v) != h.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u) ok = g.has_edge(u, v) == h.has_edge(map[u], w);
        if (!ok) continue;
        map[v] = w;
        if (extend_iso(g, h, map, used | std::uint64_t{1} << w, v + 1)) return true;
    }
    return false;
}

}  // namespace

bool isomorphic(const Graph& g, const Graph& h) {
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> dg, dh;
    for (int v = 0; v < g.n(); ++v) {
        dg.push_back(g.degree(v));
        dh.push_back(h.degree(v));
    }
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> map(g.n(), -1);
    return extend_iso(g, h, map, 0, 0);
}

namespace {

constexpr int kMaxMinorSearch = 12;

std::vector<int> mask_vertices(std::uint64_t m) {
    std::vector<int> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

// Contracted graph: one entry per branch set (original-vertex mask), with
// adjacency between branch sets as bit masks over branch-set indices.
struct Contraction {
    std::vector<std::uint64_t> sets;
    std::vector<std::uint64_t> adj;
};

std::optional<MinorWitness> find_in_subgraph(const Contraction& c) {
    const int k = static_cast<int>(c.sets.size());
    auto branch = [&](std::initializer_list<int> idx) {
        std::vector<std::vector<int>> out;
        for (int i : idx) out.push_back(mask_vertices(c.sets[i]));
        return out;
    };
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            if (!(c.adj[a] >> b & 1)) continue;
            const std::uint64_t common = c.adj[a] & c.adj[b];
            for (int x : mask_vertices(common))
                for (int y : mask_vertices(common & c.adj[x]))
                    if (y > x) return MinorWitness{"K4", branch({a, b, x, y})};
        }
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) {
            const auto common = mask_vertices(c.adj[a] & c.adj[b]);
            if (common.size() >= 3) return MinorWitness{"K2,3", branch({a, b, common[0], common[1], common[2]})};
        }
    return std::nullopt;
}

Contraction contract(const Contraction& c, int a, int b) {
    Contraction r;
    const int k = static_cast<int>(c.sets.size());
    std::vector<int> index(k);
    for (int i = 0, j = 0; i < k; ++i) index[i] = i == b ? index[a] : j++;
    r.sets.assign(k - 1, 0);
    r.adj.assign(k - 1, 0);
    for (int i = 0; i < k; ++i) {
        r.sets[index[i]] |= c.sets[i];
        for (int j : mask_vertices(c.adj[i]))
            if (index[i] != index[j]) r.adj[index[i]] |= std::uint64_t{1} << index[j];
    }
    return r;
}

std::optional<MinorWitness> search_minor(const Contraction& c, std::set<std::vector<std::uint64_t>>& seen) {
    if (auto w = find_in_subgraph(c)) return w;
    if (c.sets.size() <= 4) return std::nullopt;
    const int k = static_cast<int>(c.sets.size());
    for (int a = 0; a < k; ++a)
        for (int b : mask_vertices(c.adj[a])) {
            if (b <= a) continue;
            Contraction next = contract(c, a, b);
            auto key = next.sets;
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) continue;
            if (auto w = search_minor(next, seen)) return w;
        }
    return std::nullopt;
}

void require_small(const Graph& g) {
    if (g.n() > kMaxMinorSearch)
        throw TooLarge("graph has " + std::to_string(g.n()) + " vertices; the limit is " +
                       std::to_string(kMaxMinorSearch));
}

}  // namespace

std::optional<MinorWitness> find_forbidden_minor(const Graph& g) {
    require_small(g);
    Contraction c;
    for (int v = 0; v < g.n(); ++v) {
        c.sets.push_back(std::uint64_t{1} << v);
        c.adj.push_back(g.adjacency(v));
    }
    std::set<std::vector<std::uint64_t>> seen;
    return search_minor(c, seen);
}

bool verify_minor(const Graph& g, const MinorWitness& w) {
    const std::size_t parts = w.minor == "K4" ? 4 : w.minor == "K2,3" ? 5 : 0;
    if (parts == 0 || w.branch_sets.size() != parts) return false;
    std::vector<std::uint64_t> sets;
    std::uint64_t used = 0;
    for (const auto& bs : w.branch_sets) {
        if (bs.empty()) return false;
        std::uint64_t m = 0;
        for (int v : bs) {
            if (v < 0 || v >= g.n()) return false;
            m |= std::uint64_t{1} << v;
        }
        if (m & used) return false;
        used |= m;
        std::uint64_t reach = m & (~m + 1);
        for (std::uint64_t prev = 0; prev != reach;) {
            prev = reach;
            for (int v : mask_vertices(reach)) reach |= g.adjacency(v) & m;
        }
        if (reach != m) return false;
        sets.push_back(m);
    }
    auto touch = [&](int i, int j) {
        for (int v : mask_vertices(sets[i]))
            if (g.adjacency(v) & sets[j]) return true;
        return false;
    };
    if (parts == 4) {
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (!touch(i, j)) return false;
        return true;
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 2; j < 5; ++j)
            if (!touch(i, j)) return false;
    return true;
}

namespace {

struct CircleSearch {
    const Graph& g;
    std::vector<int> vertices;  // vertices to place
    std::vector<int> pos;
    std::vector<int> order;
    std::vector<Edge> placed_edges;

    bool place() {
        if (order.size() == vertices.size()) return true;
        const int k = static_cast<int>(order.size());
        for (int v : vertices) {
            if (pos[v] >= 0) continue;
            if (k == 0 && v != vertices.front()) continue;  // rotation
            bool ok = true;
            std::vector<Edge> added;
            for (int a : g.neighbors(v)) {
                if (pos[a] < 0) continue;
                const int pa = pos[a];
                for (const auto& [b, c] : placed_edges) {
                    const int pb = std::min(pos[b], pos[c]), pc = std::max(pos[b], pos[c]);
                    if (pb < pa && pa < pc) {
                        ok = false;
                        break;
                    }
                }
                if (!ok) break;
                added.emplace_back(a, v);
            }
            if (!ok) continue;
            pos[v] = k;
            order.push_back(v);
            placed_edges.insert(placed_edges.end(), added.begin(), added.end());
            if (place()) return true;
            placed_edges.resize(placed_edges.size() - added.size());
            order.pop_back();
            pos[v] = -1;
        }
        return false;
    }
};

std::vector<std::vector<int>> components(const Graph& g, std::uint64_t alive) {
    std::vector<std::vector<int>> out;
    std::uint64_t seen = 0;
    for (int v = 0; v < g.n(); ++v) {
        if (!(alive >> v & 1) || seen >> v & 1) continue;
        std::uint64_t comp = std::uint64_t{1} << v;
        for (std::uint64_t prev = 0; prev != comp;) {
            prev = comp;
            for (int u : mask_vertices(comp)) comp |= g.adjacency(u) & alive;
        }
        seen |= comp;
        out.push_back(mask_vertices(comp));
    }
    return out;
}

}  // namespace

OuterplanarResult is_outerplanar(const Graph& g) {
    require_small(g);
    const int n = g.n();

    // Vertices of degree at most one never obstruct; peel them off and
    // reinsert each next to its neighbor afterwards.
    std::uint64_t alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::pair<int, int>> peeled;  // (vertex, neighbor or -1)
    for (bool changed = true; changed;) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!(alive >> v & 1)) continue;
            const std::uint64_t nb = g.adjacency(v) & alive;
            if (std::popcount(nb) <= 1) {
                peeled.emplace_back(v, nb ? std::countr_zero(nb) : -1);
                alive &= ~(std::uint64_t{1} << v);
                changed = true;
            }
        }
    }

    OuterplanarResult result;
    std::vector<int> order;
    for (const auto& comp : components(g, alive)) {
        int edges = 0;
        for (int v : comp) edges += std::popcount(g.adjacency(v) & alive);
        edges /= 2;
        bool ok = edges <= 2 * static_cast<int>(comp.size()) - 3;
        if (ok) {
            CircleSearch s{g, comp, std::vector<int>(n, -1), {}, {}};
            ok = s.place();
            if (ok) order.insert(order.end(), s.order.begin(), s.order.end());
        }
        if (!ok) {
            result.witness = find_forbidden_minor(g);
            if (!result.witness) throw std::logic_error("no forbidden minor in a non-outerplanar graph");
            return result;
        }
    }
    for (auto it = peeled.rbegin(); it != peeled.rend(); ++it) {
        const auto [v, nb] = *it;
        if (nb < 0) order.push_back(v);
        else order.insert(std::find(order.begin(), order.end(), nb) + 1, v);
    }
    result.outerplanar = true;
    result.circle_order = std::move(order);
    return result;
}

Drawing convex_position_drawing(const Graph& g) {
    const auto res = is_outerplanar(g);
    if (!res.outerplanar)
        throw NotOuterplanar("graph contains a " + res.witness->minor + " minor");
    const int n = g.n();
    std::vector<Rational2> pos(n);
    for (int k = 0; k < n; ++k) {
        const Rational t = frac(2 * k - (n - 1), std::max(n, 1));
        const Rational denom = 1 + t * t;
        pos[res.circle_order[k]] = {(1 - t * t) / denom, 2 * t / denom};
    }
    return Drawing(g, std::move(pos));
}

namespace {

Graph complete_minus(int n, std::vector<Edge> removed) {
    const Graph full = Graph::complete(n);
    std::vector<Edge> edges;
    for (const auto& e : full.edges())
        if (std::find(removed.begin(), removed.end(), e) == removed.end()) edges.push_back(e);
    return Graph(n, std::move(edges));
}

std::optional<int> suffix_int(const std::string& name, std::size_t skip) {
    int v = 0;
    const char* first = name.data() + skip;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
    return v;
}

}  // namespace

Graph graph_preset(const std::string& name) {
    // Vertex labels are 0-based: label i in the alternating drawing is vertex i-1.
    if (name == "K7_minus_matching") return complete_minus(7, {{0, 1}, {2, 3}, {4, 5}});
    if (name == "K7_minus_star2") return complete_minus(7, {{0, 6}, {2, 6}});
    if (name == "K10_minus_star3") return complete_minus(10, {{0, 9}, {2, 9}, {4, 9}});
    if (name == "K2_3") return Graph(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    if (name.size() > 1 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P')) {
        if (auto n = suffix_int(name, 1); n && *n >= 1 && *n <= 64) {
            if (name[0] == 'K') return Graph::complete(*n);
            std::vector<Edge> edges;
            for (int i = 0; i + 1 < *n; ++i) edges.emplace_back(i, i + 1);
            if (name[0] == 'C') {
                if (*n < 3) throw InvalidArgument("cycle preset needs at least 3 vertices");
                edges.emplace_back(0, *n - 1);
            }
            return Graph(*n, std::move(edges));
        }
    }
    throw InvalidArgument("unknown graph preset '" + name + "'");
}

Drawing restrict_drawing(const Drawing& dr, const Graph& sub) {
    if (sub.n() != dr.graph().n()) throw SizeMismatch("subgraph has a different vertex count");
    std::vector<std::vector<Rational2>> bends;
    for (const auto& [u, v] : sub.edges()) {
        const int e = dr.graph().edge_index(u, v);
        if (e < 0)
            throw MissingEdge("edge {" + std::to_string(u) + "," + std::to_string(v) +
                              "} is not drawn");
        bends.push_back(dr.bends()[e]);
    }
    return Drawing(sub, dr.positions(), std::move(bends));
}

nlohmann::json pc_family_to_json(const PCFamily& fam) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : fam.members)
        members.push_back({{"kind", m.kind == PathOrCycle::Kind::path ? "path" : "cycle"},
                           {"vertices", m.vertices}});
    return {{"members", members}};
}

nlohmann::json minor_witness_to_json(const MinorWitness& w) {
    return {{"minor", w.minor}, {"branch_sets", w.branch_sets}};
}

}  // namespace tverwind
