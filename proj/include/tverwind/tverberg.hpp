#pragma once

#include "tverwind/complexes.hpp"
#include "tverwind/rational.hpp"

#include <optional>
#include <span>
#include <vector>

#include "json.hpp"

namespace tverwind {

/// Vertex images of a linear map from the ((d+1)(q-1))-simplex to R^d.
/// For d = 1 only the x-coordinates are used (y is 0).
struct PointConfig {
    int d = 2;
    int q = 2;
    std::vector<Rational2> points;

    /// Throws SizeMismatch unless points.size() == (d+1)(q-1)+1, and
    /// UnsupportedDimension unless d is 1 or 2.
    void validate() const;
};

struct TverbergCertificate {
    FaceFamily family;
    Rational2 witness;
};

/// Exact membership in the convex hull of a finite point set (d = 2), or in
/// the interval spanned by the x-coordinates (d = 1).
bool in_convex_hull(const Rational2& p, std::span<const Rational2> pts, int d);

/// Convex hull vertices in counterclockwise order (monotone chain, collinear
/// points dropped). Degenerate inputs give 1 or 2 points.
std::vector<Rational2> convex_hull(std::vector<Rational2> pts);

/// A point common to all block hulls, or nullopt. For d = 2 the search runs
/// over block points and pairwise crossings of hull edges, which contains an
/// extreme point of any nonempty intersection of convex polygons.
std::optional<Rational2> hulls_intersect(const std::vector<std::vector<Rational2>>& blocks, int d);

/// Every covering family over the admissible shapes whose block hulls
/// share a point, sorted by family. `jobs` <= 0 uses the OpenMP default.
std::vector<TverbergCertificate> enumerate_tverberg(const PointConfig& config, int jobs = 1);

std::size_t count_tverberg(const PointConfig& config, int jobs = 1);

nlohmann::json point_config_to_json(const PointConfig& c);
/// Throws ParseError for schema violations and SizeMismatch for a wrong point count.
PointConfig point_config_from_json(const nlohmann::json& j);

}  // namespace tverwind
