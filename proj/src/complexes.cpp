#include "tverwind/complexes.hpp"

#include "tverwind/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tverwind {

Face::Face(std::vector<int> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw InvalidArgument("face must be nonempty");
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw InvalidArgument("face " + to_string(*this) + " repeats a vertex");
    if (vertices_.front() < 0 || vertices_.back() >= 64)
        throw InvalidArgument("face vertex out of range 0..63");
}

std::uint64_t Face::mask() const {
    std::uint64_t m = 0;
    for (int v : vertices_) m |= std::uint64_t{1} << v;
    return m;
}

std::string to_string(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.vertices().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f.vertices()[i]);
    }
    return s + "}";
}

FaceFamily::FaceFamily(std::vector<Face> faces) : faces_(std::move(faces)) {
    std::sort(faces_.begin(), faces_.end(),
              [](const Face& a, const Face& b) { return a.front() < b.front(); });
    std::uint64_t seen = 0;
    for (const auto& f : faces_) {
        if (seen & f.mask())
            throw InvalidArgument("faces of a family must be pairwise disjoint");
        seen |= f.mask();
    }
}

std::uint64_t FaceFamily::mask() const {
    std::uint64_t m = 0;
    for (const auto& f : faces_) m |= f.mask();
    return m;
}

std::string to_string(const FaceFamily& fam) {
    std::string s;
    for (std::size_t i = 0; i < fam.faces().size(); ++i) {
        if (i) s += " ";
        s += to_string(fam.faces()[i]);
    }
    return s;
}

FaceFamily parse_family(const std::string& spec) {
    std::vector<Face> faces;
    std::string block;
    auto flush = [&](const std::string& text) {
        std::vector<int> verts;
        std::istringstream in(text);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            if (tok.empty()) continue;
            try {
                std::size_t used = 0;
                int v = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument(tok);
                verts.push_back(v);
            } catch (const std::exception&) {
                throw ParseError("family", "bad vertex '" + tok + "'");
            }
        }
        if (verts.empty()) throw ParseError("family", "empty face in '" + spec + "'");
        try {
            faces.emplace_back(std::move(verts));
        } catch (const InvalidArgument& e) {
            throw ParseError("family", e.what());
        }
    };
    std::string normalized = spec;
    std::replace(normalized.begin(), normalized.end(), ';', '|');
    std::istringstream in(normalized);
    while (std::getline(in, block, '|')) flush(block);
    if (faces.empty()) throw ParseError("family", "no faces in '" + spec + "'");
    try {
        return FaceFamily(std::move(faces));
    } catch (const InvalidArgument& e) {
        throw ParseError("family", e.what());
    }
}

int PartitionShape::vertex_count() const {
    return std::accumulate(dims.begin(), dims.end(), 0) + blocks();
}

std::string to_string(const PartitionShape& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.dims.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s.dims[i]);
    }
    return out + ")";
}

std::vector<PartitionShape> admissible_shapes(int d, int q) {
    if (d != 1 && d != 2)
        throw UnsupportedDimension("shape enumeration supports d = 1, 2 only (got " +
                                   std::to_string(d) + ")");
    if (q < 2) throw InvalidArgument("q must be at least 2");
    const int total = (d + 1) * (q - 1) + 1;

    std::vector<PartitionShape> out;
    std::vector<int> dims;
    // Non-decreasing dims, so each multiset appears once.
    auto rec = [&](auto&& self, int lo, int remaining) -> void {
        if (static_cast<int>(dims.size()) == q) {
            if (remaining == 0) out.push_back({dims});
            return;
        }
        for (int k = lo; k <= d; ++k) {
            if (k + 1 > remaining) break;
            dims.push_back(k);
            self(self, k, remaining - (k + 1));
            dims.pop_back();
        }
    };
    rec(rec, 0, total);
    return out;
}

namespace {

void check_shape(int N, int q, const PartitionShape& shape) {
    if (shape.blocks() != q)
        throw ShapeMismatch("shape " + to_string(shape) + " has " +
                            std::to_string(shape.blocks()) + " blocks, expected " +
                            std::to_string(q));
    if (shape.vertex_count() != N + 1)
        throw ShapeMismatch("shape " + to_string(shape) + " covers " +
                            std::to_string(shape.vertex_count()) + " vertices, not N+1 = " +
                            std::to_string(N + 1));
    if (N + 1 > 64) throw ShapeMismatch("at most 64 vertices supported");
    for (int k : shape.dims)
        if (k < 0) throw ShapeMismatch("negative face dimension");
}

}  // namespace

void for_each_face_family(int N, int q, const PartitionShape& shape,
                          const std::function<bool(const FaceFamily&)>& visit) {
    check_shape(N, q, shape);
    const int n = N + 1;

    // Remaining block sizes, as counts per size.
    std::map<int, int> remaining;
    for (int k : shape.dims) ++remaining[k + 1];

    std::vector<Face> chosen;
    std::uint64_t used = 0;
    bool stop = false;

    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        int v = 0;
        while (v < n && (used >> v & 1)) ++v;
        if (v == n) {
            if (!visit(FaceFamily(chosen))) stop = true;
            return;
        }
        std::vector<int> free;
        for (int u = v + 1; u < n; ++u)
            if (!(used >> u & 1)) free.push_back(u);

        // All faces through v of an available size, in lexicographic order.
        std::vector<std::vector<int>> candidates;
        for (auto [size, count] : remaining) {
            if (count == 0 || size - 1 > static_cast<int>(free.size())) continue;
            std::vector<int> pick(size - 1);
            auto choose = [&](auto&& choose_self, std::size_t from, std::size_t depth) -> void {
                if (depth == pick.size()) {
                    std::vector<int> f{v};
                    f.insert(f.end(), pick.begin(), pick.end());
                    candidates.push_back(std::move(f));
                    return;
                }
                for (std::size_t i = from; i + (pick.size() - depth) <= free.size(); ++i) {
                    pick[depth] = free[i];
                    choose_self(choose_self, i + 1, depth + 1);
                }
            };
            choose(choose, 0, 0);
        }
        std::sort(candidates.begin(), candidates.end());

        for (auto& verts : candidates) {
            Face face(verts);
            --remaining[static_cast<int>(verts.size())];
            used |= face.mask();
            chosen.push_back(std::move(face));
            self(self);
            used &= ~chosen.back().mask();
            chosen.pop_back();
            ++remaining[static_cast<int>(verts.size())];
            if (stop) return;
        }
    };
    rec(rec);
}

std::vector<FaceFamily> enumerate_face_families(int N, int q, const PartitionShape& shape) {
    std::vector<FaceFamily> out;
    for_each_face_family(N, q, shape, [&](const FaceFamily& f) {
        out.push_back(f);
        return true;
    });
    return out;
}

Integer family_count(int N, int q, const PartitionShape& shape) {
    check_shape(N, q, shape);
    Integer count;
    mpz_fac_ui(count.get_mpz_t(), static_cast<unsigned long>(N + 1));
    std::map<int, int> multiplicity;
    for (int k : shape.dims) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k + 1));
        count /= f;
        ++multiplicity[k];
    }
    for (auto [k, m] : multiplicity) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m));
        count /= f;
    }
    return count;
}

}  // namespace tverwind
