#pragma once

#include "tverwind/complexes.hpp"
#include "tverwind/drawings.hpp"
#include "tverwind/rational.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

namespace tverwind {

/// How a witness point satisfies one face of a winding partition.
struct WindingEvidence {
    enum class Kind { vertex_hit, on_edge_arc, on_cycle_image, winding };
    Kind kind;
    int winding = 0;  // nonzero iff kind == winding

    friend bool operator==(const WindingEvidence&, const WindingEvidence&) = default;
};

std::string to_string(WindingEvidence::Kind kind);

struct WindingCertificate {
    FaceFamily family;
    Rational2 witness;
    std::vector<WindingEvidence> evidence;  // parallel to family.faces()
};

/// Finite witness search space of a drawing.
struct CandidateSet {
    enum Tag : unsigned {
        vertex_image = 1u << 0,
        bend_point = 1u << 1,
        crossing = 1u << 2,
        overlap_midpoint = 1u << 3,
    };
    std::vector<Rational2> points;  // sorted, unique
    std::vector<unsigned> tags;     // bitmask of Tag per point

    bool contains(const Rational2& p) const;
};

/// Vertex images, bend points, every point shared by two arc segments, and
/// midpoints of collinear overlaps.
CandidateSet candidate_points(const Drawing& dr);

/// Evidence that p satisfies a vertex, edge, or triangle face of the drawing,
/// computed directly from the exact predicates. Throws MissingEdge.
std::optional<WindingEvidence> face_evidence(const Drawing& dr, const Face& face, const Rational2& p);

/// Searches the candidate points of the family's own arcs for a common
/// witness. Throws MissingEdge if a face uses an edge the graph lacks and
/// InvalidArgument for faces of dimension above 2.
std::optional<WindingCertificate> is_winding_partition(const Drawing& dr, const FaceFamily& family);

/// Re-checks a certificate face by face with the exact predicates.
bool verify_certificate(const Drawing& dr, const WindingCertificate& cert);

/// Per-drawing table of candidate witnesses with, for every (candidate,
/// edge), whether the arc passes through the candidate and the arc's signed
/// ray-crossing contribution. Triangle winding numbers are sums of three
/// table entries. Immutable once built; shared read-only by worker threads.
class WitnessTable {
public:
    explicit WitnessTable(const Drawing& dr);

    const Drawing& drawing() const { return *dr_; }
    const CandidateSet& candidates() const { return cands_; }
    std::size_t size() const { return cands_.points.size(); }
    const Rational2& point(std::size_t c) const { return cands_.points[c]; }

    /// Candidate index of a vertex image.
    std::size_t vertex_candidate(int v) const { return vertex_cand_[v]; }
    bool on_edge(std::size_t c, std::size_t e) const { return on_[c * edges_ + e] != 0; }
    int crossing(std::size_t c, std::size_t e) const { return cross_[c * edges_ + e]; }
    /// Candidates lying on the arc of edge e, ascending.
    std::span<const std::uint32_t> on_arc(std::size_t e) const { return on_arc_[e]; }

    /// Evidence for the triangle a < b < c at candidate c_idx, or nullopt if
    /// the candidate is outside its W!=0 set. All three edges must exist.
    std::optional<WindingEvidence> triangle(std::size_t c_idx, int a, int b, int c) const;

private:
    const Drawing* dr_;
    CandidateSet cands_;
    std::size_t edges_;
    std::vector<std::uint8_t> on_;
    std::vector<std::int8_t> cross_;
    std::vector<std::vector<std::uint32_t>> on_arc_;
    std::vector<std::size_t> vertex_cand_;
};

/// Progress hook: (work items done, total items, families found so far).
using ProgressFn = std::function<void(std::size_t, std::size_t, std::size_t)>;

/// All winding partitions of a drawing of K_{3q-2}, one certificate per
/// family, sorted by family. Witness-first search: each candidate point fixes
/// the vertex or edge pair, then triangles through it are assembled by exact
/// cover. Parallel over witnesses with OpenMP; jobs <= 0 uses the default
/// thread count. Output is identical for every job count.
/// Throws WrongGraph unless the drawn graph is K_{3q-2}.
std::vector<WindingCertificate> enumerate_winding(const Drawing& dr, int q, int jobs = 1,
                                                  const ProgressFn& progress = {});

/// Same as enumerate_winding, but accepts any graph on 3q-2 vertices and
/// only considers faces whose edges are present (used for subgraph hunts).
std::vector<WindingCertificate> enumerate_winding_subgraph(const Drawing& dr, int q, int jobs = 1,
                                                           const ProgressFn& progress = {});

/// Serial reference: runs is_winding_partition on every covering face
/// family of every admissible shape.
std::vector<WindingCertificate> enumerate_winding_reference(const Drawing& dr, int q);

/// Winding partitions of 2q-1 distinct values on the line: the median alone
/// plus a bijection between the q-1 lower and q-1 upper values. Blocks are
/// index sets into `values`. Throws SizeMismatch or TiedMedian.
std::vector<FaceFamily> winding_partitions_1d(const std::vector<Rational>& values, int q);

nlohmann::json certificate_to_json(const WindingCertificate& cert);
nlohmann::json family_to_json(const FaceFamily& fam);

}  // namespace tverwind
