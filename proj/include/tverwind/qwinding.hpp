#pragma once

#include "tverwind/drawings.hpp"
#include "tverwind/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace tverwind {

/// A path (possibly a single vertex) or a cycle of at least 3 vertices,
/// stored in canonical traversal: paths start at the smaller end, cycles
/// start at their minimum vertex and continue toward the smaller neighbor.
struct PathOrCycle {
    enum class Kind { path, cycle };
    Kind kind = Kind::path;
    std::vector<int> vertices;

    std::uint64_t mask() const;
    friend bool operator==(const PathOrCycle&, const PathOrCycle&) = default;
    friend auto operator<=>(const PathOrCycle&, const PathOrCycle&) = default;
};

std::string to_string(const PathOrCycle& pc);

struct PCFamily {
    std::vector<PathOrCycle> members;

    friend bool operator==(const PCFamily&, const PCFamily&) = default;
};

std::string to_string(const PCFamily& fam);

/// Canonical paths and cycles of g with at most max_len vertices, sorted.
std::vector<PathOrCycle> paths_and_cycles(const Graph& g, int max_len);

/// Visits every set of q pairwise vertex-disjoint paths/cycles with at most
/// max_len vertices each. Visitor returns false to stop.
void for_each_pc_family(const Graph& g, int q, int max_len,
                        const std::function<bool(const PCFamily&)>& visit);
std::vector<PCFamily> enumerate_pc_families(const Graph& g, int q, int max_len);

struct QWindingCertificate {
    PCFamily family;
    Rational2 witness;
};

/// The first q-winding partition found (candidates in lexicographic order,
/// then families in enumeration order), or nullopt.
std::optional<QWindingCertificate> has_q_winding_partition(const Drawing& dr, int q, int max_len);

/// Witness for one given family, or nullopt. Throws MissingEdge if a member
/// walks along an edge the drawing lacks.
std::optional<Rational2> certify_pc_family(const Drawing& dr, const PCFamily& family);

/// Replaces triangle {a,b,c} by a new vertex n joined to a, b, c.
/// Throws NotATriangle.
Graph delta_to_y(const Graph& g, std::array<int, 3> triangle);
/// Removes the degree-3 vertex v (relabeling later vertices down by one) and
/// joins its three neighbors pairwise. Throws NotDegree3.
Graph y_to_delta(const Graph& g, int v);

/// Brute-force isomorphism test (backtracking over degree-compatible maps).
bool isomorphic(const Graph& g, const Graph& h);

struct MinorWitness {
    std::string minor;  // "K4" or "K2,3"
    std::vector<std::vector<int>> branch_sets;
};

/// Searches all contractions of g (memoized) for a K4 or K2,3 subgraph.
/// Throws TooLarge above 12 vertices.
std::optional<MinorWitness> find_forbidden_minor(const Graph& g);

/// Checks that the branch sets are disjoint, connected, and pairwise
/// adjacent as the named minor requires.
bool verify_minor(const Graph& g, const MinorWitness& w);

struct OuterplanarResult {
    bool outerplanar = false;
    std::vector<int> circle_order;         // when outerplanar
    std::optional<MinorWitness> witness;   // when not
};

/// Decides outerplanarity by searching for a cyclic vertex order in which
/// no two edges interleave; on failure returns a forbidden-minor witness.
/// Throws TooLarge above 12 vertices.
OuterplanarResult is_outerplanar(const Graph& g);

/// Straight-line drawing with vertices on the unit circle (rational points)
/// in a crossing-free cyclic order. Throws NotOuterplanar.
Drawing convex_position_drawing(const Graph& g);

/// Named graphs: "K<n>", "K2_3", "K7_minus_matching", "K7_minus_star2",
/// "K10_minus_star3". Throws InvalidArgument for unknown names.
Graph graph_preset(const std::string& name);

/// Drawing of a subgraph of dr's graph on the same vertex set, keeping the
/// arcs of the surviving edges. Throws MissingEdge.
Drawing restrict_drawing(const Drawing& dr, const Graph& sub);

nlohmann::json pc_family_to_json(const PCFamily& fam);
nlohmann::json minor_witness_to_json(const MinorWitness& w);

}  // namespace tverwind
