#pragma once

#include "unicorn/surface.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace unicorn {

// Oriented simple essential arc between punctures, stored as its edge-crossing
// sequence. `word[i]` is the slot through which the arc exits its current
// triangle; the arc then continues in `glued(word[i]).tri`. Normal form:
//  - the first segment leaves the start corner through the opposite side,
//  - no segment enters and leaves a triangle through the same side,
//  - the last segment reaches the end corner from the opposite side,
//  - a crossing-free arc is stored in the canonical triangle of the side it
//    runs along (the lexicographically smaller slot).
// Normal forms are unique per proper-homotopy class, so value equality is
// class equality.
struct Arc {
    SurfacePtr surface;
    CornerRef start;
    std::vector<Slot> word;
    CornerRef end;

    int length() const { return static_cast<int>(word.size()); }
    int start_puncture() const { return surface->puncture_at(start); }
    int end_puncture() const { return surface->puncture_at(end); }

    bool same_value(const Arc& o) const {
        return surface->hash() == o.surface->hash() && start == o.start && end == o.end &&
               word == o.word;
    }
    friend bool operator==(const Arc& a, const Arc& b) { return a.same_value(b); }
    std::strong_ordering operator<=>(const Arc& o) const;
};

// Unoriented essential simple closed curve as a cyclic crossing word,
// canonically rotated (and reflected) after normalization.
struct Curve {
    SurfacePtr surface;
    std::vector<Slot> word;

    int length() const { return static_cast<int>(word.size()); }
    friend bool operator==(const Curve& a, const Curve& b) {
        return a.surface->hash() == b.surface->hash() && a.word == b.word;
    }
    std::strong_ordering operator<=>(const Curve& o) const;
};

// Structural well-formedness of the crossing word (triangle chaining).
void check_arc_wellformed(const Arc& a);
void check_curve_wellformed(const Curve& c);

// Word reduction to normal form. Throws DataError for inessential arcs
// (the crossing list empties into a puncture-hugging loop) and malformed
// words. Does not check embeddedness; see canonicalize_arc.
Arc normalize_arc(Arc a);

// Reduction + simplicity certificate (zero self-intersections in the
// canonical placement). The public entry point for raw arcs.
Arc canonicalize_arc(const Arc& raw);

Arc reverse_arc(const Arc& a);

// Normalizes a cyclic word. Returns nullopt if the curve is null-homotopic.
// Does not check simplicity or peripherality.
std::optional<Curve> normalize_curve(Curve c);

Curve reverse_curve(const Curve& c);

// The two oriented arcs running along a triangulation edge.
Arc edge_arc(const SurfacePtr& s, Slot edge_slot, bool forward);

// For a crossing-free arc: the slot of the side it runs along (canonical
// triangle), and whether it runs with the side's orientation.
std::pair<Slot, bool> hug_slot(const Arc& a);

std::string arc_token(const Arc& a);
Arc parse_arc_token(const SurfacePtr& s, const std::string& token);
std::string curve_token(const Curve& c);
Curve parse_curve_token(const SurfacePtr& s, const std::string& token);

} // namespace unicorn
