#pragma once

#include "tverwind/complexes.hpp"
#include "tverwind/exactgeom.hpp"
#include "tverwind/rational.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

namespace tverwind {

using Edge = std::pair<int, int>;  // always u < v

/// Simple undirected graph on vertices 0..n-1 with a sorted edge list.
class Graph {
public:
    Graph() = default;
    /// Normalizes each edge to (min, max) and sorts. Throws InvalidArgument on
    /// loops, duplicate edges, or out-of-range endpoints.
    Graph(int n, std::vector<Edge> edges);

    static Graph complete(int n);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_edge(int u, int v) const;
    /// Index into edges(), or -1.
    int edge_index(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    int degree(int v) const;
    bool is_complete() const;
    std::uint64_t adjacency(int v) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adj_;
};

/// PL map of a graph into the plane: vertex positions plus, per edge, the
/// interior bend points of its arc from the smaller to the larger endpoint.
class Drawing {
public:
    Drawing() = default;
    /// Straight-line drawing. Throws InvalidDrawing on size mismatch or a
    /// zero-length edge.
    Drawing(Graph graph, std::vector<Rational2> positions);
    /// bends is indexed like graph.edges().
    Drawing(Graph graph, std::vector<Rational2> positions,
            std::vector<std::vector<Rational2>> bends);

    const Graph& graph() const { return graph_; }
    const std::vector<Rational2>& positions() const { return positions_; }
    const Rational2& position(int v) const { return positions_.at(v); }
    const std::vector<std::vector<Rational2>>& bends() const { return bends_; }

    /// Points of the arc of edge index e, from edges()[e].first to .second.
    std::vector<Rational2> arc(std::size_t e) const;
    std::vector<Segment> arc_segments(std::size_t e) const;
    /// Arc of edge {u,v} traversed from u to v. Throws MissingEdge.
    std::vector<Rational2> arc_from(int u, int v) const;
    /// Closed curve of the triangle u -> v -> w -> u. Throws MissingEdge.
    ClosedPLCurve triangle_curve(int u, int v, int w) const;
    /// Closed curve along the cycle through the listed vertices. Throws MissingEdge.
    ClosedPLCurve cycle_curve(const std::vector<int>& cycle) const;

    bool straight_line() const;

    friend bool operator==(const Drawing&, const Drawing&) = default;

private:
    void validate() const;

    Graph graph_;
    std::vector<Rational2> positions_;
    std::vector<std::vector<Rational2>> bends_;
};

/// Vertices at (i, 0) for labels i = 1..n (graph vertex i-1); edge {i, j}
/// drawn as the arch (i,0), (i+1/4, h), (j-1/4, h), (j,0) with
/// h = (j - i) + i/n^2, above the line when the left label i is odd and
/// below otherwise.
Drawing alternating_linear_drawing(int n);

/// d+1 clusters of q-1 points within `spread` of the corners of a rational
/// simplex of unit scale, plus its barycenter. For d = 1 the y-coordinates are 0.
/// Throws InvalidArgument if q < 2, d not in {1,2}, or spread >= 1/100.
std::vector<Rational2> sierksma_configuration(int d, int q, const Rational& spread = Rational(1, 1000));

/// Straight-line drawing with vertices on the grid (1/8)Z^2 within
/// [-box, box]^2, resampled until it is in general position.
Drawing random_drawing(const Graph& graph, std::uint64_t seed, const Rational& box = 100);

struct GPViolation {
    enum class Kind {
        coincident_vertices,
        vertex_on_disjoint_edge,
        disjoint_edges_overlap,
        triple_point_of_disjoint_edges,
    };
    Kind kind;
    std::vector<Face> involved;
    std::variant<Rational2, Segment> location;
};

std::string to_string(GPViolation::Kind kind);

/// Empty when the drawing is in general position.
std::vector<GPViolation> general_position_check(const Drawing& dr);

/// Moves every position and bend by an independent rational offset of norm at
/// most `magnitude`, halving the magnitude after each attempt that fails the
/// general position check. Throws RetriesExhausted.
Drawing perturb(const Drawing& dr, std::uint64_t seed, const Rational& magnitude);

// JSON wire format. Rationals are strings "p/q" (or "p"); keys are sorted.
nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json point_to_json(const Rational2& p);
Rational2 point_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json graph_to_json(const Graph& g);
/// Accepts any object with "n" and "edges" (so drawing files work too).
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json drawing_to_json(const Drawing& dr);
Drawing drawing_from_json(const nlohmann::json& j);

/// {"general_position": bool, "violations": [{"kind", "faces", "location"}]}
nlohmann::json gp_report_to_json(const std::vector<GPViolation>& violations);

std::string write_drawing(const Drawing& dr);
/// Throws ParseError naming the offending field.
Drawing read_drawing(const std::string& text);

/// Parses text as JSON, mapping syntax errors to ParseError with line/column.
nlohmann::json parse_json_text(const std::string& text);

/// Seeded generator for every randomized routine. The mt19937_64 stream is
/// fully specified by the standard; the mappings below avoid the
/// implementation-defined std distributions so outputs match across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    std::uint64_t next() { return engine_(); }
    /// Integer in [lo, hi] (modulo reduction; bias is irrelevant here).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    /// Double in [0, 1).
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

}  // namespace tverwind
