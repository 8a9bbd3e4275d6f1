#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace unicorn {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Side slot of an oriented triangle. Side s runs from corner s to corner
// (s+1)%3; corners are counterclockwise. The corner opposite side s is s+2,
// and the side opposite corner c is (c+1)%3.
struct Slot {
    int tri = -1;
    int side = -1;
    auto operator<=>(const Slot&) const = default;
};

struct CornerRef {
    int tri = -1;
    int corner = -1;
    auto operator<=>(const CornerRef&) const = default;
};

// Raw, possibly-incomplete triangulation data. `glue[t][s]` is the slot glued
// to (t,s) or an invalid Slot when dangling. Gluings are orientation-reversing
// by convention: the point at parameter u along (t,s) matches 1-u on the
// partner.
struct SurfaceData {
    int genus = 0;
    int punctures = 0;
    std::vector<std::array<Slot, 3>> glue;
    std::vector<std::array<int, 3>> corner_puncture; // corner -> puncture label
};

struct SurfaceDefect {
    std::string kind;
    std::string detail;
};

struct ValidationReport {
    std::vector<SurfaceDefect> defects;
    int triangle_count = 0;
    int edge_count = 0;
    int vertex_count = 0;
    int euler_characteristic = 0; // of the punctured surface: V' - E + F with V' = 0 (ideal)
    int genus = -1;
    int puncture_count = 0;
    bool ok() const { return defects.empty(); }
};

ValidationReport validate_surface(const SurfaceData& data);

// Immutable validated surface. Values are shared by const pointer; all
// operations downstream key surfaces by identity hash.
class Surface {
public:
    static std::shared_ptr<const Surface> create(SurfaceData data);

    int triangle_count() const { return static_cast<int>(data_.glue.size()); }
    int edge_count() const { return triangle_count() * 3 / 2; }
    int genus() const { return data_.genus; }
    int punctures() const { return data_.punctures; }
    int euler_characteristic() const { return 2 - 2 * data_.genus - data_.punctures; }

    Slot glued(Slot s) const { return data_.glue[s.tri][s.side]; }
    int puncture_at(CornerRef c) const { return data_.corner_puncture[c.tri][c.corner]; }
    const SurfaceData& data() const { return data_; }

    // Stable content hash (hex), used in file headers and cache keys.
    const std::string& hash() const { return hash_; }

    // Walking around a vertex: successor of corner (t,c) in counterclockwise
    // order around its puncture.
    CornerRef next_corner_ccw(CornerRef c) const;

    // Corner cycle around each puncture, starting from the minimal corner.
    std::vector<std::vector<CornerRef>> puncture_corner_cycles() const;

    // Orientation-preserving simplicial automorphisms, as maps triangle ->
    // (triangle, rotation). rotation r sends corner c to corner (c+r)%3.
    struct Automorphism {
        std::vector<int> tri_image;
        std::vector<int> rot; // corner c of t -> corner (c+rot[t])%3 of tri_image[t]
    };
    const std::vector<Automorphism>& automorphisms() const { return autos_; }

private:
    Surface(SurfaceData data, std::string hash);
    SurfaceData data_;
    std::string hash_;
    std::vector<Automorphism> autos_;
};

using SurfacePtr = std::shared_ptr<const Surface>;

// Fixed ideal triangulation for genus g with n >= 1 punctures, chi < 0.
// Polygon word a1 b1 a1' b1' ... ag bg ag' bg' c1 c1' ... c_{n-1} c_{n-1}',
// fan-triangulated from corner 0. Deterministic for given (g, n).
SurfacePtr build_standard_surface(int genus, int punctures);

std::string print_surface(const Surface& s);
SurfacePtr parse_surface(const std::string& text);

inline Slot slot_apply(const Surface::Automorphism& a, Slot s) {
    // side s spans corners s, s+1; its image spans (s+rot), (s+rot+1) = side s+rot
    return {a.tri_image[s.tri], (s.side + a.rot[s.tri]) % 3};
}
inline CornerRef corner_apply(const Surface::Automorphism& a, CornerRef c) {
    return {a.tri_image[c.tri], (c.corner + a.rot[c.tri]) % 3};
}

} // namespace unicorn
