#pragma once

#include "unicorn/arc.hpp"
#include "unicorn/geom.hpp"

#include <map>
#include <vector>

namespace unicorn {

// One strand of a joint diagram: an oriented arc or an unoriented closed
// curve (traversed in its stored direction).
struct Strand {
    bool is_curve = false;
    Arc arc;
    Curve curve;

    static Strand of_arc(Arc a) {
        Strand s;
        s.arc = std::move(a);
        return s;
    }
    static Strand of_curve(Curve c) {
        Strand s;
        s.is_curve = true;
        s.curve = std::move(c);
        return s;
    }
    const SurfacePtr& surface() const { return is_curve ? curve.surface : arc.surface; }
    int length() const { return is_curve ? curve.length() : arc.length(); }
    Slot word_at(int i) const { return is_curve ? curve.word[i] : arc.word[i]; }
};

// One edge-crossing event: strand k at position i of its word.
struct PointRef {
    int strand = -1;
    int pos = -1;
    auto operator<=>(const PointRef&) const = default;
};

// One in-triangle segment (chord) of a strand. Arcs with word length L have
// segments 0..L (a crossing-free arc is the single hug chord 0); curves have
// segments 0..L-1, segment i ending at crossing i.
struct ChordRef {
    int strand = -1;
    int seg = -1;
    auto operator<=>(const ChordRef&) const = default;
};

// Transverse crossing of two chords inside a triangle.
struct Crossing {
    int tri = -1;
    ChordRef a, b; // a < b
    int sign = 0;  // +1 iff (direction of a, direction of b) is positively oriented
};

// Canonical minimal-position placement of a system of normalized strands.
// Per-edge crossing orders follow the geodesic ordering rule: positions along
// an edge are compared by the divergence of the strands' continuations, which
// reproduces the order of geodesic representatives. Parallel duplicates
// (equal or reversed classes) are laid out as nested pushoffs of a single
// representative.
class Realization {
public:
    explicit Realization(std::vector<Strand> strands);

    const SurfacePtr& surface() const { return surface_; }
    int strand_count() const { return static_cast<int>(strands_.size()); }
    const Strand& strand(int k) const { return strands_[k]; }

    const std::vector<Crossing>& crossings() const { return crossings_; }
    long pair_count(int i, int j) const;
    long self_count(int i) const { return pair_count(i, i); }

    // crossing indices involving strands i and j (or all, j = -1), in order
    // along strand i
    std::vector<int> crossings_along(int i, int j = -1) const;

    int segment_count(int k) const;
    int segment_triangle(int k, int seg) const;

    // global order key of a crossing along strand k: (segment, rank in chord)
    std::pair<int, int> order_key(int crossing_index, int k) const;

    // --- placement data (rendering, regions, oracle cross-checks) ---
    int edge_count() const { return static_cast<int>(edge_slots_.size()); }
    Slot canonical_slot(int edge_id) const { return edge_slots_[edge_id]; }
    int edge_of_slot(Slot s) const { return slot_edge_.at(s); }
    const std::vector<std::vector<PointRef>>& edge_orders() const { return edge_points_; }

    // chords living in triangle t
    const std::vector<ChordRef>& chords_in_triangle(int t) const { return tri_chords_[t]; }
    bool chord_is_hug(ChordRef c) const;
    // crossing ids on a chord, ordered along the strand's travel direction
    const std::vector<int>& chord_crossing_list(ChordRef c) const;

    // Anchors of a chord in its triangle, in travel order.
    // kind 0: corner (corner index, fan_rank used for cusp fans)
    // kind 1: edge point (local side, local index along the side's own
    //         orientation)
    struct Anchor {
        int kind = 0;
        int corner = -1;
        int side = -1;
        int idx = -1;
    };
    std::pair<Anchor, Anchor> chord_anchors(ChordRef c) const;
    Pt anchor_point(const Anchor& a, const int pts[3]) const;
    int points_on_side(int tri, int side) const;

    // Strand-ends around each puncture in counterclockwise order.
    struct FanEntry {
        int strand;
        bool at_start;
        auto operator<=>(const FanEntry&) const = default;
    };
    const std::vector<std::vector<FanEntry>>& puncture_fans() const { return fans_; }

    // duplicates bookkeeping (copies are nested pushoffs of their rep)
    int rep_of(int k) const { return rep_of_[k]; }
    bool reversed_of_rep(int k) const { return rev_of_rep_[k]; }

private:
    int compare_points(const PointRef& a, const PointRef& b, int edge_id) const;
    void build_edges();
    void dedupe();
    void place_points();
    void build_chords();
    void find_crossings();
    void build_fans();

    SurfacePtr surface_;
    std::vector<Strand> strands_;
    std::vector<int> rep_of_;
    std::vector<bool> rev_of_rep_;
    std::vector<int> depth_;

    std::vector<Slot> edge_slots_;
    std::map<Slot, int> slot_edge_;
    std::vector<std::vector<PointRef>> edge_points_;
    // (strand,pos) -> (edge id, index in edge order)
    std::vector<std::vector<std::pair<int, int>>> point_where_;

    std::vector<std::vector<ChordRef>> tri_chords_;
    std::vector<Crossing> crossings_;
    std::map<ChordRef, std::vector<int>> chord_cross_;
    std::map<std::pair<int, int>, long> pair_counts_;
    std::vector<std::vector<FanEntry>> fans_;
};

bool arc_is_normal(const Arc& a);
bool curve_is_normal(const Curve& c);

// Zero self-intersections in the canonical placement.
bool is_simple(const Arc& a);
bool is_simple(const Curve& c);

struct IntersectionPoint {
    int idx_along_a = -1; // rank along a
    int idx_along_b = -1; // rank along b
    int seg_a = -1, seg_b = -1;
    int tri = -1;
    int sign = 0;
};

// Minimal-position transverse intersection record of two arcs; points are
// listed in order along the first arc.
struct IntersectionData {
    long count = 0;
    std::vector<IntersectionPoint> points;
};

IntersectionData intersection_data(const Arc& a, const Arc& b);
bool are_disjoint(const Arc& a, const Arc& b);
long intersection_count(const Arc& a, const Arc& b);
long intersection_count(const Curve& c, const Arc& a);
long intersection_count(const Curve& c, const Curve& d);

} // namespace unicorn
