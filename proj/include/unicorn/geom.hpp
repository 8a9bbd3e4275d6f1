#pragma once

#include <gmpxx.h>
#include <optional>
#include <string>

namespace unicorn {

using Rat = mpq_class;

struct Pt {
    Rat x, y;
};

inline Pt operator-(const Pt& a, const Pt& b) { return {a.x - b.x, a.y - b.y}; }
inline Pt operator+(const Pt& a, const Pt& b) { return {a.x + b.x, a.y + b.y}; }
inline bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }

inline Rat cross(const Pt& a, const Pt& b) { return a.x * b.y - a.y * b.x; }

// Sign of the signed area of (a,b,c): >0 for counterclockwise.
inline int orient(const Pt& a, const Pt& b, const Pt& c) {
    Rat v = cross(b - a, c - a);
    return sgn(v);
}

inline Pt lerp(const Pt& p, const Pt& q, const Rat& t) {
    return {p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
}

// Proper (interior) intersection of segments ab and cd. Endpoint touches are
// not reported.
inline std::optional<Pt> seg_intersect_interior(const Pt& a, const Pt& b,
                                                const Pt& c, const Pt& d) {
    Rat r = cross(b - a, d - c);
    if (r == 0) return std::nullopt;
    Rat t = cross(c - a, d - c) / r;
    Rat u = cross(c - a, b - a) / r;
    if (t <= 0 || t >= 1 || u <= 0 || u >= 1) return std::nullopt;
    return lerp(a, b, t);
}

// Parameter t of point p on segment ab (assumes p collinear on ab, a != b).
inline Rat param_on_segment(const Pt& a, const Pt& b, const Pt& p) {
    Pt d = b - a;
    if (d.x != 0) return (p.x - a.x) / d.x;
    return (p.y - a.y) / d.y;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

} // namespace unicorn
