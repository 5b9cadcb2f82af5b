#include "tverwind/tverberg.hpp"

#include "tverwind/drawings.hpp"
#include "tverwind/errors.hpp"
#include "tverwind/exactgeom.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tverwind {

void PointConfig::validate() const {
    if (d != 1 && d != 2)
        throw UnsupportedDimension("point configurations support d = 1, 2 only");
    if (q < 2) throw InvalidArgument("q must be at least 2");
    const std::size_t expected = static_cast<std::size_t>((d + 1) * (q - 1) + 1);
    if (points.size() != expected)
        throw SizeMismatch("configuration has " + std::to_string(points.size()) +
                           " points; d = " + std::to_string(d) + ", q = " + std::to_string(q) +
                           " needs " + std::to_string(expected));
}

std::vector<Rational2> convex_hull(std::vector<Rational2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<Rational2> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
        while (k >= lower && orient(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

bool in_convex_hull(const Rational2& p, std::span<const Rational2> pts, int d) {
    if (pts.empty()) return false;
    if (d == 1) {
        auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                            [](const auto& a, const auto& b) { return a.x < b.x; });
        return lo->x <= p.x && p.x <= hi->x;
    }
    auto hull = convex_hull(std::vector<Rational2>(pts.begin(), pts.end()));
    if (hull.size() == 1) return hull[0] == p;
    if (hull.size() == 2) return on_segment(p, {hull[0], hull[1]});
    for (std::size_t i = 0; i < hull.size(); ++i)
        if (orient(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
    return true;
}

std::optional<Rational2> hulls_intersect(const std::vector<std::vector<Rational2>>& blocks, int d) {
    for (const auto& b : blocks)
        if (b.empty()) throw InvalidArgument("hull blocks must be nonempty");
    if (blocks.empty()) return std::nullopt;

    if (d == 1) {
        Rational lo = blocks[0][0].x, hi = blocks[0][0].x;
        bool first = true;
        for (const auto& b : blocks) {
            auto [mn, mx] = std::minmax_element(
                b.begin(), b.end(), [](const auto& a, const auto& c) { return a.x < c.x; });
            if (first || mn->x > lo) lo = mn->x;
            if (first || mx->x < hi) hi = mx->x;
            first = false;
        }
        if (lo > hi) return std::nullopt;
        return Rational2{lo, 0};
    }

    std::vector<std::vector<Rational2>> hulls;
    for (const auto& b : blocks) hulls.push_back(convex_hull(b));
    auto inside_all = [&](const Rational2& p) {
        return std::all_of(hulls.begin(), hulls.end(), [&](const auto& h) {
            return in_convex_hull(p, h, 2);
        });
    };

    std::vector<Rational2> candidates;
    for (const auto& h : hulls) candidates.insert(candidates.end(), h.begin(), h.end());
    auto edges_of = [](const std::vector<Rational2>& h) {
        std::vector<Segment> es;
        if (h.size() == 2) es.push_back({h[0], h[1]});
        if (h.size() >= 3)
            for (std::size_t i = 0; i < h.size(); ++i) es.push_back({h[i], h[(i + 1) % h.size()]});
        return es;
    };
    for (std::size_t i = 0; i < hulls.size(); ++i)
        for (std::size_t j = i + 1; j < hulls.size(); ++j)
            for (const auto& s : edges_of(hulls[i]))
                for (const auto& t : edges_of(hulls[j])) {
                    auto r = segment_intersect(s, t);
                    if (r.kind == IntersectionResult::Kind::point) candidates.push_back(r.point());
                    else if (r.kind == IntersectionResult::Kind::overlap) {
                        candidates.push_back(r.overlap().a);
                        candidates.push_back(r.overlap().b);
                    }
                }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    for (const auto& c : candidates)
        if (inside_all(c)) return c;
    return std::nullopt;
}

std::vector<TverbergCertificate> enumerate_tverberg(const PointConfig& config, int jobs) {
    config.validate();
    const int N = static_cast<int>(config.points.size()) - 1;
    std::vector<FaceFamily> families;
    for (const auto& shape : admissible_shapes(config.d, config.q))
        for_each_face_family(N, config.q, shape, [&](const FaceFamily& f) {
            families.push_back(f);
            return true;
        });

    std::vector<std::optional<Rational2>> witness(families.size());
    const long count = static_cast<long>(families.size());
#ifdef _OPENMP
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 64) num_threads(threads)
#endif
    for (long i = 0; i < count; ++i) {
        std::vector<std::vector<Rational2>> blocks;
        for (const auto& face : families[i].faces()) {
            blocks.emplace_back();
            for (int v : face.vertices()) blocks.back().push_back(config.points[v]);
        }
        witness[i] = hulls_intersect(blocks, config.d);
    }
    (void)jobs;

    std::vector<TverbergCertificate> out;
    for (std::size_t i = 0; i < families.size(); ++i)
        if (witness[i]) out.push_back({families[i], *witness[i]});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.family < b.family; });
    return out;
}

std::size_t count_tverberg(const PointConfig& config, int jobs) {
    return enumerate_tverberg(config, jobs).size();
}

nlohmann::json point_config_to_json(const PointConfig& c) {
    nlohmann::json pts = nlohmann::json::array();
    for (const auto& p : c.points) {
        if (c.d == 1) pts.push_back(nlohmann::json::array({to_string(p.x)}));
        else pts.push_back(point_to_json(p));
    }
    return {{"d", c.d}, {"q", c.q}, {"points", pts}};
}

PointConfig point_config_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw ParseError("", "expected a JSON object");
    for (const char* key : {"d", "q"})
        if (!j.contains(key) || !j[key].is_number_integer())
            throw ParseError(key, "expected integer");
    if (!j.contains("points") || !j["points"].is_array())
        throw ParseError("points", "expected array of points");
    PointConfig c;
    c.d = j["d"].get<int>();
    c.q = j["q"].get<int>();
    for (std::size_t i = 0; i < j["points"].size(); ++i) {
        const auto& p = j["points"][i];
        const std::string where = "points[" + std::to_string(i) + "]";
        if (p.is_array() && p.size() == 1)
            c.points.push_back({rational_from_json(p[0], where + "[0]"), 0});
        else
            c.points.push_back(point_from_json(p, where));
    }
    c.validate();
    return c;
}

}  // namespace tverwind
