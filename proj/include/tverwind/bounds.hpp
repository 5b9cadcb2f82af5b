#pragma once

#include "tverwind/rational.hpp"

#include <optional>
#include <utility>

#include "json.hpp"

namespace tverwind {

/// ((q-1)!)^d, the conjectured minimum number of Tverberg partitions.
Integer sierksma_bound(int d, int q);

/// (p, r) with q = p^r and p prime, or nullopt.
std::optional<std::pair<int, int>> prime_power(int q);

/// 1/(q-1)! * (q/(r+1))^ceil((d+1)(q-1)/2) for q = p^r. Throws NotPrimePower.
Rational hell_bound(int d, int q);

/// Lower bound on winding partitions of a map of K_{3q-2} into the plane:
/// 1/((q-1)!)^2 * (q/(r+1))^(2(q-1)). Throws NotPrimePower.
Rational d2_winding_bound(int q);

struct BoundReport {
    int d = 0;
    int q = 0;
    Integer sierksma;
    std::optional<std::pair<int, int>> prime_power;
    std::optional<Rational> hell_bound;
    std::optional<Rational> d2_winding_bound;
    std::optional<long long> observed;

    /// True when an observed count is below the ceiling of the proved bound.
    bool flagged() const;
};

/// Throws InvalidArgument unless d >= 1 and q >= 2.
BoundReport bound_report(int d, int q, std::optional<long long> observed = std::nullopt);

nlohmann::json bound_report_to_json(const BoundReport& r);

}  // namespace tverwind
