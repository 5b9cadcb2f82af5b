#pragma once

// Random instance generators shared by the test binaries.

#include "tverwind/drawings.hpp"
#include "tverwind/errors.hpp"
#include "tverwind/exactgeom.hpp"

#include <vector>

namespace fixtures {

using tverwind::Rational;
using tverwind::Rational2;
using tverwind::Rng;

inline Rational2 grid_point(Rng& rng, int lo, int hi, int den = 1) {
    return {tverwind::frac(rng.uniform(lo, hi), den), tverwind::frac(rng.uniform(lo, hi), den)};
}

// Closed curve with k random vertices on a coarse grid (coarse so that rays
// through vertices and horizontal edges happen often); sometimes traversed
// several times over to get multi-loop curves.
inline std::vector<Rational2> random_curve(Rng& rng) {
    const int k = static_cast<int>(rng.uniform(3, 9));
    std::vector<Rational2> pts;
    for (bool valid = false; !valid;) {
        pts.clear();
        for (int i = 0; i < k; ++i) pts.push_back(grid_point(rng, -6, 6));
        valid = true;
        for (int i = 0; i < k; ++i) valid = valid && pts[i] != pts[(i + 1) % k];
    }
    const int loops = rng.uniform(0, 3) == 0 ? static_cast<int>(rng.uniform(2, 3)) : 1;
    std::vector<Rational2> out;
    for (int i = 0; i < loops; ++i) out.insert(out.end(), pts.begin(), pts.end());
    return out;
}

// Drawing of g with vertices on a tiny integer grid and an occasional bend,
// so that degenerate incidences are common.
inline tverwind::Drawing degenerate_drawing(const tverwind::Graph& g, Rng& rng, int box = 4) {
    for (;;) {
        std::vector<Rational2> pos;
        for (int v = 0; v < g.n(); ++v) pos.push_back(grid_point(rng, 0, box));
        std::vector<std::vector<Rational2>> bends(g.edge_count());
        for (auto& b : bends)
            if (rng.uniform(0, 4) == 0) b.push_back(grid_point(rng, 0, 2 * box, 2));
        try {
            return tverwind::Drawing(g, std::move(pos), std::move(bends));
        } catch (const tverwind::Error&) {
            // zero-length segment; draw again
        }
    }
}

}  // namespace fixtures
