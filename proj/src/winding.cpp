#include "tverwind/winding.hpp"

#include "tverwind/errors.hpp"
#include "tverwind/exactgeom.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tverwind {

using nlohmann::json;

std::string to_string(WindingEvidence::Kind kind) {
    switch (kind) {
    case WindingEvidence::Kind::vertex_hit: return "vertex-hit";
    case WindingEvidence::Kind::on_edge_arc: return "on-edge-arc";
    case WindingEvidence::Kind::on_cycle_image: return "on-cycle-image";
    case WindingEvidence::Kind::winding: return "winding";
    }
    return "unknown";
}

bool CandidateSet::contains(const Rational2& p) const {
    return std::binary_search(points.begin(), points.end(), p);
}

namespace {

struct Tagged {
    Rational2 p;
    unsigned tag;
};

/// Sorts, merges duplicates (OR-ing their tags) and fills the set.
CandidateSet collect(std::vector<Tagged> raw) {
    std::sort(raw.begin(), raw.end(), [](const Tagged& a, const Tagged& b) { return a.p < b.p; });
    CandidateSet out;
    for (auto& t : raw) {
        if (!out.points.empty() && out.points.back() == t.p) {
            out.tags.back() |= t.tag;
        } else {
            out.points.push_back(std::move(t.p));
            out.tags.push_back(t.tag);
        }
    }
    return out;
}

/// Arrangement points of a segment soup: endpoints are added by the caller;
/// this adds pairwise intersection points and overlap midpoints.
void add_intersections(const std::vector<Segment>& segs, std::vector<Tagged>& raw) {
    for (std::size_t i = 0; i < segs.size(); ++i)
        for (std::size_t j = i + 1; j < segs.size(); ++j) {
            auto r = segment_intersect(segs[i], segs[j]);
            if (r.kind == IntersectionResult::Kind::point) {
                raw.push_back({r.point(), CandidateSet::crossing});
            } else if (r.kind == IntersectionResult::Kind::overlap) {
                const auto& o = r.overlap();
                raw.push_back({o.a, CandidateSet::crossing});
                raw.push_back({o.b, CandidateSet::crossing});
                raw.push_back({Rational2{(o.a.x + o.b.x) / 2, (o.a.y + o.b.y) / 2},
                               CandidateSet::overlap_midpoint});
            }
        }
}

void check_face(const Drawing& dr, const Face& f) {
    if (f.dim() > 2) throw InvalidArgument("face " + to_string(f) + " has dimension above 2");
    if (f.vertices().back() >= dr.graph().n())
        throw InvalidArgument("face " + to_string(f) + " uses a vertex outside the drawing");
    const auto& vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!dr.graph().has_edge(vs[i], vs[j]))
                throw MissingEdge("face " + to_string(f) + " needs the missing edge {" +
                                  std::to_string(vs[i]) + "," + std::to_string(vs[j]) + "}");
}

bool on_arc(const Drawing& dr, int u, int v, const Rational2& p) {
    const auto pts = dr.arc_from(u, v);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i)
        if (on_segment(p, {pts[i], pts[i + 1]})) return true;
    return false;
}

}  // namespace

CandidateSet candidate_points(const Drawing& dr) {
    std::vector<Tagged> raw;
    std::vector<Segment> segs;
    for (const auto& p : dr.positions()) raw.push_back({p, CandidateSet::vertex_image});
    for (std::size_t e = 0; e < dr.graph().edge_count(); ++e) {
        for (const auto& b : dr.bends()[e]) raw.push_back({b, CandidateSet::bend_point});
        auto s = dr.arc_segments(e);
        segs.insert(segs.end(), s.begin(), s.end());
    }
    add_intersections(segs, raw);
    return collect(std::move(raw));
}

std::optional<WindingEvidence> face_evidence(const Drawing& dr, const Face& face, const Rational2& p) {
    check_face(dr, face);
    const auto& v = face.vertices();
    switch (face.dim()) {
    case 0:
        if (dr.position(v[0]) == p) return WindingEvidence{WindingEvidence::Kind::vertex_hit};
        return std::nullopt;
    case 1:
        if (on_arc(dr, v[0], v[1], p)) return WindingEvidence{WindingEvidence::Kind::on_edge_arc};
        return std::nullopt;
    default: {
        auto curve = dr.triangle_curve(v[0], v[1], v[2]);
        if (point_on_curve(p, curve)) return WindingEvidence{WindingEvidence::Kind::on_cycle_image};
        int w = winding_number(curve, p);
        if (w != 0) return WindingEvidence{WindingEvidence::Kind::winding, w};
        return std::nullopt;
    }
    }
}

std::optional<WindingCertificate> is_winding_partition(const Drawing& dr, const FaceFamily& family) {
    for (const auto& f : family.faces()) check_face(dr, f);

    // Candidates come from the arrangement of the family's own arcs.
    std::vector<Tagged> raw;
    std::vector<Segment> segs;
    const Face* first_vertex = nullptr;
    const Face* first_edge = nullptr;
    for (const auto& f : family.faces()) {
        const auto& v = f.vertices();
        for (int u : v) raw.push_back({dr.position(u), CandidateSet::vertex_image});
        if (f.dim() == 0 && !first_vertex) first_vertex = &f;
        if (f.dim() == 1 && !first_edge) first_edge = &f;
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) {
                auto e = static_cast<std::size_t>(dr.graph().edge_index(v[i], v[j]));
                for (const auto& b : dr.bends()[e]) raw.push_back({b, CandidateSet::bend_point});
                auto s = dr.arc_segments(e);
                segs.insert(segs.end(), s.begin(), s.end());
            }
    }

    std::vector<Rational2> cands;
    if (first_vertex) {
        cands.push_back(dr.position(first_vertex->front()));
    } else {
        add_intersections(segs, raw);
        auto all = collect(std::move(raw));
        for (auto& p : all.points) {
            if (first_edge && !on_arc(dr, first_edge->vertices()[0], first_edge->vertices()[1], p))
                continue;
            cands.push_back(std::move(p));
        }
    }

    for (const auto& p : cands) {
        WindingCertificate cert{family, p, {}};
        bool ok = true;
        for (const auto& f : family.faces()) {
            auto ev = face_evidence(dr, f, p);
            if (!ev) {
                ok = false;
                break;
            }
            cert.evidence.push_back(*ev);
        }
        if (ok) return cert;
    }
    return std::nullopt;
}

bool verify_certificate(const Drawing& dr, const WindingCertificate& cert) {
    if (cert.evidence.size() != cert.family.size()) return false;
    for (std::size_t i = 0; i < cert.family.size(); ++i) {
        auto ev = face_evidence(dr, cert.family.faces()[i], cert.witness);
        if (!ev || *ev != cert.evidence[i]) return false;
    }
    return true;
}

// ---------------------------------------------------------------- WitnessTable

WitnessTable::WitnessTable(const Drawing& dr)
    : dr_(&dr), cands_(candidate_points(dr)), edges_(dr.graph().edge_count()) {
    const std::size_t C = cands_.points.size();
    on_.assign(C * edges_, 0);
    cross_.assign(C * edges_, 0);
    on_arc_.assign(edges_, {});

    std::vector<std::vector<Segment>> arcs;
    for (std::size_t e = 0; e < edges_; ++e) arcs.push_back(dr.arc_segments(e));

    for (std::size_t c = 0; c < C; ++c) {
        const Rational2& p = cands_.points[c];
        for (std::size_t e = 0; e < edges_; ++e) {
            bool on = false;
            int w = 0;
            for (const auto& s : arcs[e]) {
                if (!on && on_segment(p, s)) on = true;
                w += ray_crossing(s.a, s.b, p);
            }
            on_[c * edges_ + e] = on;
            cross_[c * edges_ + e] = static_cast<std::int8_t>(w);
            if (on) on_arc_[e].push_back(static_cast<std::uint32_t>(c));
        }
    }

    for (const auto& p : dr.positions()) {
        auto it = std::lower_bound(cands_.points.begin(), cands_.points.end(), p);
        vertex_cand_.push_back(static_cast<std::size_t>(it - cands_.points.begin()));
    }
}

std::optional<WindingEvidence> WitnessTable::triangle(std::size_t c_idx, int a, int b, int c) const {
    const auto& g = dr_->graph();
    const auto eab = static_cast<std::size_t>(g.edge_index(a, b));
    const auto ebc = static_cast<std::size_t>(g.edge_index(b, c));
    const auto eac = static_cast<std::size_t>(g.edge_index(a, c));
    if (on_edge(c_idx, eab) || on_edge(c_idx, ebc) || on_edge(c_idx, eac))
        return WindingEvidence{WindingEvidence::Kind::on_cycle_image};
    // Curve a -> b -> c -> a; the edge {a,c} arc runs from a to c, so it enters reversed.
    int w = crossing(c_idx, eab) + crossing(c_idx, ebc) - crossing(c_idx, eac);
    if (w != 0) return WindingEvidence{WindingEvidence::Kind::winding, w};
    return std::nullopt;
}

// ---------------------------------------------------------------- enumeration

namespace {

struct Triangle {
    int a, b, c;
    std::uint64_t mask;
};

struct WorkItem {
    int vertex = -1;          // vertex-plus-triangles shape
    std::size_t e = 0, f = 0; // two-edges-plus-triangles shape
};

class CoverSearch {
public:
    CoverSearch(const WitnessTable& table, const std::vector<Triangle>& tris, int n)
        : table_(table), tris_(tris), by_min_(n) {}

    /// Calls emit(chosen triangles) for every cover of `remaining` by
    /// triangles whose W!=0 set contains candidate c.
    template <class Emit>
    void run(std::size_t c, std::uint64_t remaining, Emit&& emit) {
        for (auto& bucket : by_min_) bucket.clear();
        for (std::size_t t = 0; t < tris_.size(); ++t) {
            const auto& tri = tris_[t];
            if ((tri.mask & remaining) != tri.mask) continue;
            if (table_.triangle(c, tri.a, tri.b, tri.c)) by_min_[tri.a].push_back(t);
        }
        chosen_.clear();
        recurse(remaining, emit);
    }

private:
    template <class Emit>
    void recurse(std::uint64_t remaining, Emit& emit) {
        if (remaining == 0) {
            emit(chosen_);
            return;
        }
        const int v = __builtin_ctzll(remaining);
        for (std::size_t t : by_min_[v]) {
            const auto& tri = tris_[t];
            if ((tri.mask & remaining) != tri.mask) continue;
            chosen_.push_back(t);
            recurse(remaining & ~tri.mask, emit);
            chosen_.pop_back();
        }
    }

    const WitnessTable& table_;
    const std::vector<Triangle>& tris_;
    std::vector<std::vector<std::size_t>> by_min_;
    std::vector<std::size_t> chosen_;
};

WindingCertificate make_certificate(const WitnessTable& table, std::size_t c, std::vector<Face> faces) {
    WindingCertificate cert{FaceFamily(std::move(faces)), table.point(c), {}};
    for (const auto& f : cert.family.faces()) {
        const auto& v = f.vertices();
        if (f.dim() == 0) {
            cert.evidence.push_back({WindingEvidence::Kind::vertex_hit});
        } else if (f.dim() == 1) {
            cert.evidence.push_back({WindingEvidence::Kind::on_edge_arc});
        } else {
            cert.evidence.push_back(*table.triangle(c, v[0], v[1], v[2]));
        }
    }
    return cert;
}

std::vector<WindingCertificate> enumerate_kernel(const Drawing& dr, int jobs,
                                                 const ProgressFn& progress) {
    const Graph& g = dr.graph();
    const int n = g.n();
    const WitnessTable table(dr);

    std::vector<Triangle> tris;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c))
                    tris.push_back({a, b, c, (1ull << a) | (1ull << b) | (1ull << c)});

    std::vector<WorkItem> items;
    for (int v = 0; v < n; ++v) items.push_back({v, 0, 0});
    for (std::size_t e = 0; e < g.edge_count(); ++e)
        for (std::size_t f = e + 1; f < g.edge_count(); ++f) {
            auto [a, b] = g.edges()[e];
            auto [c, d] = g.edges()[f];
            if (a == c || a == d || b == c || b == d) continue;
            items.push_back({-1, e, f});
        }

    const std::uint64_t all = n == 64 ? ~0ull : (1ull << n) - 1;
    std::vector<std::vector<WindingCertificate>> found(items.size());
    std::size_t done = 0, total_found = 0;
    const long count = static_cast<long>(items.size());

#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
#endif
    {
        CoverSearch search(table, tris, n);
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 1)
#endif
        for (long i = 0; i < count; ++i) {
            const auto& item = items[i];
            auto& out = found[i];
            auto faces_for = [&](const std::vector<std::size_t>& chosen, std::vector<Face> base) {
                for (std::size_t t : chosen) base.push_back(Face{tris[t].a, tris[t].b, tris[t].c});
                return base;
            };

            if (item.vertex >= 0) {
                const std::size_t c = table.vertex_candidate(item.vertex);
                search.run(c, all & ~(1ull << item.vertex), [&](const auto& chosen) {
                    out.push_back(make_certificate(table, c, faces_for(chosen, {Face{item.vertex}})));
                });
            } else {
                auto [a, b] = g.edges()[item.e];
                auto [c2, d] = g.edges()[item.f];
                const auto on_e = table.on_arc(item.e);
                const auto on_f = table.on_arc(item.f);
                std::vector<std::uint32_t> shared;
                std::set_intersection(on_e.begin(), on_e.end(), on_f.begin(), on_f.end(),
                                      std::back_inserter(shared));
                const std::uint64_t rest =
                    all & ~((1ull << a) | (1ull << b) | (1ull << c2) | (1ull << d));
                std::map<FaceFamily, WindingCertificate> local;
                for (std::uint32_t c : shared) {
                    search.run(c, rest, [&](const auto& chosen) {
                        auto cert = make_certificate(
                            table, c, faces_for(chosen, {Face{a, b}, Face{c2, d}}));
                        local.try_emplace(cert.family, std::move(cert));
                    });
                }
                for (auto& [fam, cert] : local) out.push_back(std::move(cert));
            }

            if (progress) {
#ifdef _OPENMP
#pragma omp critical(tverwind_progress)
#endif
                {
                    ++done;
                    total_found += out.size();
                    progress(done, items.size(), total_found);
                }
            }
        }
    }
    (void)jobs;

    std::vector<WindingCertificate> result;
    for (auto& v : found)
        for (auto& cert : v) result.push_back(std::move(cert));
    std::sort(result.begin(), result.end(),
              [](const auto& x, const auto& y) { return x.family < y.family; });
    return result;
}

void check_order(const Drawing& dr, int q) {
    if (q < 2) throw InvalidArgument("q must be at least 2");
    if (dr.graph().n() != 3 * q - 2)
        throw WrongGraph("winding partitions for q = " + std::to_string(q) + " need " +
                         std::to_string(3 * q - 2) + " vertices, the drawing has " +
                         std::to_string(dr.graph().n()));
}

}  // namespace

std::vector<WindingCertificate> enumerate_winding(const Drawing& dr, int q, int jobs,
                                                  const ProgressFn& progress) {
    check_order(dr, q);
    if (!dr.graph().is_complete())
        throw WrongGraph("enumerate_winding needs a drawing of the complete graph K_" +
                         std::to_string(3 * q - 2));
    return enumerate_kernel(dr, jobs, progress);
}

std::vector<WindingCertificate> enumerate_winding_subgraph(const Drawing& dr, int q, int jobs,
                                                           const ProgressFn& progress) {
    check_order(dr, q);
    return enumerate_kernel(dr, jobs, progress);
}

std::vector<WindingCertificate> enumerate_winding_reference(const Drawing& dr, int q) {
    check_order(dr, q);
    const Graph& g = dr.graph();
    std::vector<WindingCertificate> out;
    for (const auto& shape : admissible_shapes(2, q)) {
        for_each_face_family(g.n() - 1, q, shape, [&](const FaceFamily& fam) {
            for (const auto& f : fam.faces()) {
                const auto& v = f.vertices();
                for (std::size_t i = 0; i < v.size(); ++i)
                    for (std::size_t j = i + 1; j < v.size(); ++j)
                        if (!g.has_edge(v[i], v[j])) return true;
            }
            if (auto cert = is_winding_partition(dr, fam)) out.push_back(std::move(*cert));
            return true;
        });
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.family < y.family; });
    return out;
}

std::vector<FaceFamily> winding_partitions_1d(const std::vector<Rational>& values, int q) {
    if (q < 1) throw InvalidArgument("q must be positive");
    if (values.size() != static_cast<std::size_t>(2 * q - 1))
        throw SizeMismatch("expected " + std::to_string(2 * q - 1) + " values, got " +
                           std::to_string(values.size()));
    std::vector<int> order(values.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    for (std::size_t i = 0; i + 1 < order.size(); ++i)
        if (values[order[i]] == values[order[i + 1]])
            throw TiedMedian("values are not distinct; the median block is not unique");

    const int median = order[q - 1];
    std::vector<int> low(order.begin(), order.begin() + (q - 1));
    std::vector<int> high(order.begin() + q, order.end());
    std::sort(high.begin(), high.end());

    std::vector<FaceFamily> out;
    do {
        std::vector<Face> faces{Face{median}};
        for (int i = 0; i < q - 1; ++i) faces.push_back(Face{low[i], high[i]});
        out.emplace_back(std::move(faces));
    } while (std::next_permutation(high.begin(), high.end()));
    std::sort(out.begin(), out.end());
    return out;
}

json family_to_json(const FaceFamily& fam) {
    json out = json::array();
    for (const auto& f : fam.faces()) out.push_back(f.vertices());
    return out;
}

json certificate_to_json(const WindingCertificate& cert) {
    json ev = json::array();
    for (const auto& e : cert.evidence) {
        json item{{"kind", to_string(e.kind)}};
        if (e.kind == WindingEvidence::Kind::winding) item["winding"] = e.winding;
        ev.push_back(item);
    }
    return {{"family", family_to_json(cert.family)},
            {"witness", point_to_json(cert.witness)},
            {"evidence", ev}};
}

}  // namespace tverwind
