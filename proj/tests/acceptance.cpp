// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria. Pass --long to include the K10 - X instance.

#include "fixtures.hpp"
#include "oracles.hpp"
#include "tverwind/bounds.hpp"
#include "tverwind/complexes.hpp"
#include "tverwind/drawings.hpp"
#include "tverwind/exactgeom.hpp"
#include "tverwind/qwinding.hpp"
#include "tverwind/tverberg.hpp"
#include "tverwind/winding.hpp"

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

using namespace tverwind;

namespace {

// Wall-clock limits in seconds.
constexpr double kA1Limit = 1.0;
constexpr double kA2Q4Limit = 300.0;
constexpr double kA4Limit = 10.0;
constexpr double kA6Limit = 60.0;

struct Outcome {
    bool ok = true;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

long factorial(int n) {
    long r = 1;
    for (int k = 2; k <= n; ++k) r *= k;
    return r;
}

Outcome a1() {
    Rng rng(101);
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    int runs = 0;
    for (int q = 2; q <= 5; ++q)
        for (int i = 0; i < 50; ++i) {
            std::set<Rational> seen;
            std::vector<Rational> values;
            while (static_cast<int>(values.size()) < 2 * q - 1) {
                Rational v(static_cast<long>(rng.uniform(-1000, 1000)), static_cast<long>(rng.uniform(1, 7)));
                v.canonicalize();
                if (seen.insert(v).second) values.push_back(v);
            }
            const auto parts = winding_partitions_1d(values, q);
            ++runs;
            if (static_cast<long>(parts.size()) != factorial(q - 1)) {
                out.ok = false;
                out.detail = "q=" + std::to_string(q) + " gave " + std::to_string(parts.size());
            }
        }
    const double t = seconds_since(t0);
    if (t >= kA1Limit) out.ok = false;
    if (out.detail.empty()) out.detail = std::to_string(runs) + " configurations";
    out.detail += ", " + std::to_string(t) + " s";
    return out;
}

Outcome a2() {
    Outcome out;
    std::ostringstream d;
    const long expect[] = {1, 4, 36};
    for (int q = 2; q <= 4; ++q) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto certs = enumerate_winding(alternating_linear_drawing(3 * q - 2), q, 1);
        const double t = seconds_since(t0);
        bool verified = true;
        for (const auto& c : certs) verified = verified && verify_certificate(alternating_linear_drawing(3 * q - 2), c);
        d << "q=" << q << ": " << certs.size() << " (" << t << " s) ";
        if (static_cast<long>(certs.size()) != expect[q - 2] || !verified) out.ok = false;
        if (q == 4 && t >= kA2Q4Limit) out.ok = false;
    }
    out.detail = d.str();
    return out;
}

Outcome a3() {
    const auto dr = alternating_linear_drawing(7);
    const auto cert = is_winding_partition(dr, parse_family("4|0,1,6|2,3,5"));
    Outcome out;
    out.ok = cert && cert->witness == dr.position(4) && verify_certificate(dr, *cert);
    out.detail = cert ? "witness " + to_string(cert->witness) : "not certified";
    return out;
}

Outcome a4() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto c3 = count_tverberg({2, 3, sierksma_configuration(2, 3)});
    const auto c2 = count_tverberg({2, 2, sierksma_configuration(2, 2)});
    const double t = seconds_since(t0);
    Outcome out;
    out.ok = c3 == 4 && c2 == 1 && t < kA4Limit;
    out.detail = "(2,3): " + std::to_string(c3) + ", (2,2): " + std::to_string(c2) + ", " + std::to_string(t) + " s";
    return out;
}

Outcome a5() {
    Rng rng(105);
    Outcome out;
    std::size_t lo = ~std::size_t{0};
    for (int i = 0; i < 100; ++i) {
        PointConfig c{2, 3, {}};
        for (;;) {
            c.points.clear();
            for (int k = 0; k < 7; ++k) c.points.push_back(fixtures::grid_point(rng, -50, 50));
            bool gp = true;
            for (int a = 0; a < 7 && gp; ++a)
                for (int b = a + 1; b < 7 && gp; ++b)
                    for (int e = b + 1; e < 7 && gp; ++e) gp = orient(c.points[a], c.points[b], c.points[e]) != 0;
            if (gp) break;
        }
        lo = std::min(lo, count_tverberg(c));
    }
    out.ok = lo >= 2;
    out.detail = "minimum count " + std::to_string(lo) + " over 100 configurations";
    return out;
}

Outcome a6(bool long_run) {
    Outcome out;
    std::ostringstream d;
    const auto t0 = std::chrono::steady_clock::now();
    const auto dr = restrict_drawing(alternating_linear_drawing(7), graph_preset("K7_minus_star2"));
    const auto faces = enumerate_winding_subgraph(dr, 3);
    const auto paths = has_q_winding_partition(dr, 3, 7);
    const double t = seconds_since(t0);
    out.ok = faces.empty() && !paths && t < kA6Limit;
    d << "K7-X: " << faces.size() << " face families, " << (paths ? "a" : "no") << " path/cycle family ("
      << t << " s)";
    if (long_run) {
        const auto t1 = std::chrono::steady_clock::now();
        const auto dr10 = restrict_drawing(alternating_linear_drawing(10), graph_preset("K10_minus_star3"));
        const auto f10 = enumerate_winding_subgraph(dr10, 4);
        const auto p10 = has_q_winding_partition(dr10, 4, 3);
        out.ok = out.ok && f10.empty() && !p10;
        d << "; K10-X: " << f10.size() << " face families, " << (p10 ? "a" : "no") << " path/cycle family ("
          << seconds_since(t1) << " s)";
    }
    out.detail = d.str();
    return out;
}

Graph random_outerplanar(Rng& rng) {
    const int n = static_cast<int>(rng.uniform(4, 9));
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        if (rng.uniform(0, 4) != 0 || i == 0) edges.emplace_back(i, (i + 1) % n);
    // Non-crossing chords of the cycle order 0..n-1.
    std::vector<Edge> chords;
    for (int tries = 0; tries < 3 * n; ++tries) {
        int a = static_cast<int>(rng.uniform(0, n - 1)), b = static_cast<int>(rng.uniform(0, n - 1));
        if (a > b) std::swap(a, b);
        if (b - a < 2 || (a == 0 && b == n - 1)) continue;
        bool ok = true;
        for (const auto& [c, e] : chords) {
            const bool inter = (a < c && c < b && b < e) || (c < a && a < e && e < b);
            ok = ok && !inter && !(c == a && e == b);
        }
        if (ok) chords.emplace_back(a, b);
    }
    for (auto [a, b] : chords) edges.emplace_back(a, b);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform(0, i)]);
    std::set<Edge> relabeled;
    for (auto [a, b] : edges) {
        int u = perm[a], v = perm[b];
        if (u > v) std::swap(u, v);
        relabeled.emplace(u, v);
    }
    return Graph(n, {relabeled.begin(), relabeled.end()});
}

// Every graph on 7 vertices arises from a 6-vertex class by adding a
// vertex with some neighbourhood; the result is reduced to one
// representative per class.
std::vector<Graph> graphs_on_seven() {
    std::vector<int> perm(7);
    for (int i = 0; i < 7; ++i) perm[i] = i;
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    int bit[7][7];
    for (int u = 0, b = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v, ++b) bit[u][v] = bit[v][u] = b;

    std::set<std::uint64_t> canon;
    for (const auto& base : oracle::graphs_up_to_iso(6))
        for (int s = 0; s < 64; ++s) {
            std::vector<Edge> edges = base.edges();
            for (int v = 0; v < 6; ++v)
                if (s >> v & 1) edges.emplace_back(v, 6);
            std::uint64_t best = ~std::uint64_t{0};
            for (const auto& p : perms) {
                std::uint64_t m = 0;
                for (auto [u, v] : edges) m |= std::uint64_t{1} << bit[p[u]][p[v]];
                best = std::min(best, m);
            }
            canon.insert(best);
        }
    std::vector<Graph> out;
    for (auto m : canon) out.push_back(oracle::graph_from_mask(7, m));
    return out;
}

Outcome a7() {
    Outcome out;
    std::ostringstream d;
    int k4 = 0, k23 = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        k4 += has_q_winding_partition(random_drawing(Graph::complete(4), 7000 + seed, 20), 2, 4).has_value();
        k23 += has_q_winding_partition(random_drawing(graph_preset("K2_3"), 8000 + seed, 20), 2, 5).has_value();
    }
    d << "K4 " << k4 << "/100, K2,3 " << k23 << "/100";
    out.ok = k4 == 100 && k23 == 100;

    Rng rng(107);
    int none = 0;
    for (int i = 0; i < 10; ++i) {
        const Graph g = random_outerplanar(rng);
        const bool outer = is_outerplanar(g).outerplanar;
        none += outer && !has_q_winding_partition(convex_position_drawing(g), 2, g.n());
    }
    d << ", outerplanar without partition " << none << "/10";
    out.ok = out.ok && none == 10;

    std::size_t graphs = 0, agree = 0;
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::graphs_up_to_iso(n)) {
            ++graphs;
            agree += is_outerplanar(g).outerplanar == oracle::outerplanar_by_minors(g);
        }
    for (const auto& g : graphs_on_seven()) {
        ++graphs;
        agree += is_outerplanar(g).outerplanar == oracle::outerplanar_by_minors(g);
    }
    d << ", minor oracle agrees on " << agree << "/" << graphs << " graphs";
    out.ok = out.ok && agree == graphs;
    out.detail = d.str();
    return out;
}

Outcome a8() {
    Rng rng(108);
    int checked = 0, agree = 0, multi = 0;
    while (checked < 500) {
        const auto pts = fixtures::random_curve(rng);
        const Rational2 p = fixtures::grid_point(rng, -12, 12, 2);
        if (oracle::on_polyline(p, pts, true)) continue;
        ++checked;
        const int w = winding_number(ClosedPLCurve(pts), p);
        agree += w == oracle::angle_winding(pts, p);
        multi += std::abs(w) > 1;
    }
    return {agree == checked,
            std::to_string(agree) + "/" + std::to_string(checked) + " agree, " + std::to_string(multi) +
                " with |w| > 1"};
}

// Brute force: every face of the complete graph evaluated at every oracle
// point, then each family checked for a point where all its faces hold.
int a9_disagreements(const Drawing& dr, int q) {
    const int n = dr.graph().n();
    std::map<std::vector<int>, int> index;
    for (std::uint64_t m = 1; m < (std::uint64_t{1} << n); ++m)
        if (std::popcount(m) <= 3) {
            std::vector<int> f;
            for (int v = 0; v < n; ++v)
                if (m >> v & 1) f.push_back(v);
            index.emplace(f, static_cast<int>(index.size()));
        }
    std::vector<std::vector<bool>> holds;
    for (const auto& p : oracle::brute_points(dr, 6)) {
        std::vector<bool> row(index.size());
        for (const auto& [f, i] : index) row[i] = oracle::face_holds(dr, f, p);
        holds.push_back(std::move(row));
    }
    int bad = 0;
    for (const auto& shape : admissible_shapes(2, q))
        for_each_face_family(n - 1, q, shape, [&](const FaceFamily& fam) {
            bool brute = false;
            for (const auto& row : holds) {
                bool all = true;
                for (const auto& f : fam.faces()) all = all && row[index.at(f.vertices())];
                if (all) {
                    brute = true;
                    break;
                }
            }
            const auto cert = is_winding_partition(dr, fam);
            if (brute != cert.has_value() || (cert && !verify_certificate(dr, *cert))) ++bad;
            return true;
        });
    return bad;
}

Outcome a9() {
    Rng rng(109);
    int bad = 0, drawings = 0;
    for (int i = 0; i < 150; ++i, ++drawings) bad += a9_disagreements(fixtures::degenerate_drawing(Graph::complete(4), rng, 3), 2);
    for (int i = 0; i < 50; ++i, ++drawings) bad += a9_disagreements(fixtures::degenerate_drawing(Graph::complete(7), rng, 3), 3);
    return {bad == 0, std::to_string(drawings) + " drawings, " + std::to_string(bad) + " disagreements"};
}

Outcome a10() {
    Outcome out;
    std::ostringstream d;
    for (int q : {2, 3, 4, 5, 7, 8, 9})
        if (d2_winding_bound(q) * Rational(factorial(q - 1)) != hell_bound(3, q)) {
            out.ok = false;
            d << "identity fails at q=" << q << "; ";
        }
    for (int q = 2; q <= 4; ++q)
        if (sierksma_bound(2, q) != static_cast<long>(enumerate_winding(alternating_linear_drawing(3 * q - 2), q).size()))
            out.ok = false, d << "A2 count differs at q=" << q << "; ";
    if (sierksma_bound(2, 3) != static_cast<long>(count_tverberg({2, 3, sierksma_configuration(2, 3)})) ||
        sierksma_bound(2, 2) != static_cast<long>(count_tverberg({2, 2, sierksma_configuration(2, 2)})))
        out.ok = false, d << "A4 count differs; ";
    out.detail = out.ok ? "identity holds for q in {2,3,4,5,7,8,9}; counts match" : d.str();
    return out;
}

Outcome a11() {
    const Graph y = delta_to_y(Graph::complete(4), {0, 1, 2});
    const bool iso = isomorphic(y, graph_preset("K2_3"));
    const bool inv = y_to_delta(y, 4) == Graph::complete(4);
    return {iso && inv, std::string(iso ? "isomorphic to K2,3" : "not isomorphic") + ", " +
                            (inv ? "inverse recovers K4" : "inverse fails")};
}

}  // namespace

int main(int argc, char** argv) {
    bool long_run = false;
    for (int i = 1; i < argc; ++i) long_run = long_run || std::strcmp(argv[i], "--long") == 0;

    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"A1 d=1 partition counts", a1},
        {"A2 alternating drawing counts", a2},
        {"A3 example witness", a3},
        {"A4 Sierksma configuration", a4},
        {"A5 prime q floor", a5},
        {"A6 K7 minus X refutation", [&] { return a6(long_run); }},
        {"A7 2-winding classification", a7},
        {"A8 winding number oracle", a8},
        {"A9 candidate completeness", a9},
        {"A10 bounds identities", a10},
        {"A11 delta-to-Y", a11},
    };
    int failed = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += !o.ok;
        std::printf("%s %-32s %s\n", o.ok ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    return failed;
}
