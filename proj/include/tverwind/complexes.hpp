#pragma once

#include "tverwind/rational.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace tverwind {

/// A face of a simplex skeleton, stored as its sorted vertex set.
class Face {
public:
    Face() = default;
    /// Sorts the vertices; throws InvalidArgument if empty or repeated.
    explicit Face(std::vector<int> vertices);
    Face(std::initializer_list<int> vertices) : Face(std::vector<int>(vertices)) {}

    const std::vector<int>& vertices() const { return vertices_; }
    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    int front() const { return vertices_.front(); }
    std::uint64_t mask() const;
    bool disjoint(const Face& other) const { return (mask() & other.mask()) == 0; }

    friend auto operator<=>(const Face&, const Face&) = default;
    friend bool operator==(const Face&, const Face&) = default;

private:
    std::vector<int> vertices_;
};

std::string to_string(const Face& f);

/// Pairwise vertex-disjoint faces, kept in canonical order (by smallest vertex).
class FaceFamily {
public:
    FaceFamily() = default;
    /// Throws InvalidArgument if two faces share a vertex.
    explicit FaceFamily(std::vector<Face> faces);

    const std::vector<Face>& faces() const { return faces_; }
    std::size_t size() const { return faces_.size(); }
    std::uint64_t mask() const;

    friend auto operator<=>(const FaceFamily&, const FaceFamily&) = default;
    friend bool operator==(const FaceFamily&, const FaceFamily&) = default;

private:
    std::vector<Face> faces_;
};

std::string to_string(const FaceFamily& f);

/// Parses "4|0,1,6|2,3,5" (faces separated by '|' or ';', vertices by ',').
FaceFamily parse_family(const std::string& spec);

/// Multiset of face dimensions, sorted ascending.
struct PartitionShape {
    std::vector<int> dims;

    int blocks() const { return static_cast<int>(dims.size()); }
    /// Number of vertices a covering family of this shape uses.
    int vertex_count() const;

    friend bool operator==(const PartitionShape&, const PartitionShape&) = default;
    friend auto operator<=>(const PartitionShape&, const PartitionShape&) = default;
};

std::string to_string(const PartitionShape& s);

/// Every shape (k_1 <= ... <= k_q) with 0 <= k_i <= d and
/// sum(k_i + 1) = (d + 1)(q - 1) + 1. Throws UnsupportedDimension unless d is 1 or 2.
std::vector<PartitionShape> admissible_shapes(int d, int q);

/// Visits every covering family of the given shape on vertices 0..N in
/// lexicographic order of the canonical face list. The visitor returns false
/// to stop early. Throws ShapeMismatch unless q matches the shape and
/// N + 1 equals shape.vertex_count().
void for_each_face_family(int N, int q, const PartitionShape& shape,
                          const std::function<bool(const FaceFamily&)>& visit);

std::vector<FaceFamily> enumerate_face_families(int N, int q, const PartitionShape& shape);

/// Closed form (N+1)! / (prod s_i! * prod m_j!) over block sizes s_i and
/// multiplicities m_j of equal sizes.
Integer family_count(int N, int q, const PartitionShape& shape);

}  // namespace tverwind
