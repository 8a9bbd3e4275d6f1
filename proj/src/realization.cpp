#include "unicorn/realization.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace unicorn {

namespace {

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Pt corner_pt(int c) {
    switch (c) {
        case 0: return {Rat(0), Rat(0)};
        case 1: return {Rat(1), Rat(0)};
        default: return {Rat(0), Rat(1)};
    }
}

} // namespace

bool arc_is_normal(const Arc& a) {
    const Surface& S = *a.surface;
    if (a.word.empty()) {
        if (a.start.corner == a.end.corner) return false;
        auto [slot, fwd] = hug_slot(a);
        (void)fwd;
        return slot <= S.glued(slot);
    }
    if (a.word[0].side != (a.start.corner + 1) % 3) return false;
    Slot entry = S.glued(a.word.back());
    if (a.end.corner != (entry.side + 2) % 3) return false;
    for (size_t i = 0; i + 1 < a.word.size(); ++i)
        if (a.word[i + 1] == S.glued(a.word[i])) return false;
    return true;
}

bool curve_is_normal(const Curve& c) {
    const Surface& S = *c.surface;
    int n = c.length();
    for (int i = 0; i < n; ++i)
        if (n > 1 && c.word[(i + 1) % n] == S.glued(c.word[i])) return false;
    return n >= 1;
}

// ---------------------------------------------------------------------------
// Walk: advances a strand continuation triangle by triangle. The walk is
// inside via.tri, having entered through slot `via`; each step reports the
// fan rank of the continuation relative to the entry side and advances.
// Ranks along the entered side, measured from its tail corner:
//   0 = exits through side (s+2), 1 = ends at the opposite corner,
//   2 = exits through side (s+1).
// Comparing two continuations by the rank at their first divergence yields
// the order of the geodesic crossing points along the entered side.
// ---------------------------------------------------------------------------
namespace {

struct Walk {
    const Strand* strand = nullptr;
    const Surface* surf = nullptr;
    int dir = +1;
    int next = 0;
    Slot via;
};

int walk_step(Walk& w) {
    const Strand& st = *w.strand;
    const Surface& S = *w.surf;
    int L = st.length();
    int s = w.via.side;
    auto finish_exit = [&](Slot x) -> int {
        if (x.tri != w.via.tri || x.side == s)
            throw InternalError("walk: inconsistent continuation");
        int rank = (x.side == (s + 2) % 3) ? 0 : 2;
        w.via = S.glued(x);
        return rank;
    };
    if (st.is_curve) {
        Slot x = (w.dir > 0) ? st.word_at(w.next) : S.glued(st.word_at(w.next));
        w.next = (w.next + w.dir + L) % L;
        return finish_exit(x);
    }
    if (w.dir > 0) {
        if (w.next < L) {
            Slot x = st.word_at(w.next);
            ++w.next;
            return finish_exit(x);
        }
        if (st.arc.end.tri != w.via.tri || st.arc.end.corner != (s + 2) % 3)
            throw InternalError("walk: non-normal arc end");
        return 1;
    }
    if (w.next >= 0) {
        Slot x = S.glued(st.word_at(w.next));
        --w.next;
        return finish_exit(x);
    }
    if (st.arc.start.tri != w.via.tri || st.arc.start.corner != (s + 2) % 3)
        throw InternalError("walk: non-normal arc start");
    return 1;
}

// Continuation of crossing p into the side of `via_slot`.
Walk make_walk(const Strand& st, const Surface& S, const PointRef& p, Slot via_slot) {
    Walk w;
    w.strand = &st;
    w.surf = &S;
    Slot x = st.word_at(p.pos);
    int L = st.length();
    if (S.glued(x) == via_slot) {
        w.dir = +1;
        w.next = st.is_curve ? (p.pos + 1) % L : p.pos + 1;
    } else {
        if (x != via_slot) throw InternalError("walk: point not on slot");
        w.dir = -1;
        w.next = st.is_curve ? (p.pos - 1 + L) % L : p.pos - 1;
    }
    w.via = via_slot;
    return w;
}

int compare_walks(Walk w1, Walk w2) {
    int cap = 2 * (w1.strand->length() + w2.strand->length()) + 8;
    for (int steps = 0; steps <= cap; ++steps) {
        int r1 = walk_step(w1);
        int r2 = walk_step(w2);
        if (r1 != r2) return r1 < r2 ? -1 : +1;
        if (r1 == 1) return 0;
    }
    return 0; // parallel beyond any divergence bound: same class
}

} // namespace

int Realization::compare_points(const PointRef& a, const PointRef& b, int edge_id) const {
    Slot D = edge_slots_[edge_id];
    const Surface& S = *surface_;
    int c = compare_walks(make_walk(strands_[a.strand], S, a, D),
                          make_walk(strands_[b.strand], S, b, D));
    if (c != 0) return c;
    int c2 = compare_walks(make_walk(strands_[a.strand], S, a, S.glued(D)),
                           make_walk(strands_[b.strand], S, b, S.glued(D)));
    return -c2;
}

// ---------------------------------------------------------------------------
// construction
// ---------------------------------------------------------------------------

Realization::Realization(std::vector<Strand> strands) : strands_(std::move(strands)) {
    if (strands_.empty()) throw DataError("realization of empty system");
    surface_ = strands_[0].surface();
    for (auto& s : strands_) {
        if (s.surface()->hash() != surface_->hash()) throw DataError("surface mismatch");
        if (s.is_curve) {
            if (!curve_is_normal(s.curve)) throw DataError("curve not normalized");
        } else {
            if (!arc_is_normal(s.arc)) throw DataError("arc not normalized");
        }
    }
    build_edges();
    dedupe();
    place_points();
    build_chords();
    find_crossings();
    build_fans();

    // nested pushoffs must not cross their representative or each other
    for (int k = 0; k < strand_count(); ++k)
        for (int j = 0; j < k; ++j)
            if (rep_of_[k] == rep_of_[j] && pair_count(k, j) != 0)
                throw InternalError("parallel duplicates cross");
}

void Realization::build_edges() {
    const Surface& S = *surface_;
    for (int t = 0; t < S.triangle_count(); ++t) {
        for (int s = 0; s < 3; ++s) {
            Slot a{t, s};
            Slot b = S.glued(a);
            Slot canon = std::min(a, b);
            if (!slot_edge_.count(canon)) {
                slot_edge_[canon] = static_cast<int>(edge_slots_.size());
                edge_slots_.push_back(canon);
            }
            slot_edge_[a] = slot_edge_[canon];
        }
    }
    edge_points_.assign(edge_slots_.size(), {});
}

void Realization::dedupe() {
    int n = strand_count();
    rep_of_.assign(n, -1);
    rev_of_rep_.assign(n, false);
    depth_.assign(n, 0);
    std::map<std::string, std::vector<int>> groups;
    for (int k = 0; k < n; ++k) {
        std::string key;
        if (strands_[k].is_curve) {
            key = "c|" + curve_token(strands_[k].curve);
        } else {
            Arc r = reverse_arc(strands_[k].arc);
            key = "a|" + std::min(arc_token(strands_[k].arc), arc_token(r));
        }
        groups[key].push_back(k);
    }
    for (auto& [key, members] : groups) {
        (void)key;
        int rep = members[0];
        for (size_t d = 0; d < members.size(); ++d) {
            int k = members[d];
            rep_of_[k] = rep;
            depth_[k] = static_cast<int>(d);
            rev_of_rep_[k] =
                !strands_[k].is_curve && !(strands_[k].arc == strands_[rep].arc);
        }
    }
}

void Realization::place_points() {
    int n = strand_count();
    point_where_.assign(n, {});
    for (int k = 0; k < n; ++k)
        point_where_[k].assign(strands_[k].length(), {-1, -1});

    // representative points per edge, sorted by the continuation comparator
    std::vector<std::vector<PointRef>> reps(edge_slots_.size());
    for (int k = 0; k < n; ++k) {
        if (rep_of_[k] != k) continue;
        for (int i = 0; i < strands_[k].length(); ++i)
            reps[slot_edge_.at(strands_[k].word_at(i))].push_back({k, i});
    }
    for (size_t e = 0; e < reps.size(); ++e) {
        auto& v = reps[e];
        std::sort(v.begin(), v.end(), [&](const PointRef& a, const PointRef& b) {
            if (a == b) return false;
            int c = compare_points(a, b, static_cast<int>(e));
            if (c == 0) throw InternalError("tied representative crossings");
            return c < 0;
        });
    }

    // duplicates become nested pushoffs on the representative's left
    std::vector<std::vector<int>> copies_of(n);
    for (int k = 0; k < n; ++k)
        if (rep_of_[k] != k) copies_of[rep_of_[k]].push_back(k);

    for (size_t e = 0; e < reps.size(); ++e) {
        auto& out = edge_points_[e];
        for (const PointRef& rp : reps[e]) {
            int L = strands_[rp.strand].length();
            std::vector<PointRef> before, after;
            for (int k : copies_of[rp.strand]) {
                int pos = rev_of_rep_[k] ? (L - 1 - rp.pos) : rp.pos;
                Slot x = strands_[rp.strand].word_at(rp.pos);
                bool left_is_after = (x == edge_slots_[e]);
                if (left_is_after)
                    after.push_back({k, pos});
                else
                    before.push_back({k, pos});
            }
            std::reverse(before.begin(), before.end());
            for (auto& p : before) out.push_back(p);
            out.push_back(rp);
            for (auto& p : after) out.push_back(p);
        }
        for (size_t i = 0; i < out.size(); ++i)
            point_where_[out[i].strand][out[i].pos] = {static_cast<int>(e),
                                                       static_cast<int>(i)};
    }
}

int Realization::segment_count(int k) const {
    const Strand& s = strands_[k];
    if (s.is_curve) return s.length();
    return s.length() + 1;
}

int Realization::segment_triangle(int k, int seg) const {
    const Strand& s = strands_[k];
    const Surface& S = *surface_;
    if (s.is_curve) return s.word_at(seg).tri;
    int L = s.length();
    if (L == 0) return s.arc.start.tri;
    if (seg == 0) return s.arc.start.tri;
    if (seg == L) return s.arc.end.tri;
    return S.glued(s.word_at(seg - 1)).tri;
}

void Realization::build_chords() {
    tri_chords_.assign(surface_->triangle_count(), {});
    for (int k = 0; k < strand_count(); ++k)
        for (int seg = 0; seg < segment_count(k); ++seg)
            tri_chords_[segment_triangle(k, seg)].push_back({k, seg});
}

bool Realization::chord_is_hug(ChordRef c) const {
    const Strand& s = strands_[c.strand];
    return !s.is_curve && s.length() == 0;
}

int Realization::points_on_side(int tri, int side) const {
    return static_cast<int>(edge_points_[slot_edge_.at(Slot{tri, side})].size());
}

std::pair<Realization::Anchor, Realization::Anchor> Realization::chord_anchors(ChordRef c) const {
    const Strand& st = strands_[c.strand];
    const Surface& S = *surface_;
    auto edge_anchor = [&](int pos, Slot local_slot) {
        auto [e, idx] = point_where_[c.strand][pos];
        int m = static_cast<int>(edge_points_[e].size());
        int local = (edge_slots_[e] == local_slot) ? idx : (m - 1 - idx);
        Anchor a;
        a.kind = 1;
        a.side = local_slot.side;
        a.idx = local;
        return a;
    };
    auto corner_anchor = [&](int corner) {
        Anchor a;
        a.kind = 0;
        a.corner = corner;
        return a;
    };
    if (st.is_curve) {
        int L = st.length();
        int prev = (c.seg - 1 + L) % L;
        return {edge_anchor(prev, S.glued(st.word_at(prev))), edge_anchor(c.seg, st.word_at(c.seg))};
    }
    int L = st.length();
    if (L == 0) return {corner_anchor(st.arc.start.corner), corner_anchor(st.arc.end.corner)};
    if (c.seg == 0)
        return {corner_anchor(st.arc.start.corner), edge_anchor(0, st.word_at(0))};
    if (c.seg == L)
        return {edge_anchor(L - 1, S.glued(st.word_at(L - 1))), corner_anchor(st.arc.end.corner)};
    return {edge_anchor(c.seg - 1, S.glued(st.word_at(c.seg - 1))), edge_anchor(c.seg, st.word_at(c.seg))};
}

Pt Realization::anchor_point(const Anchor& a, const int pts[3]) const {
    if (a.kind == 0) return corner_pt(a.corner);
    Rat t(a.idx + 1, pts[a.side] + 1);
    return lerp(corner_pt(a.side), corner_pt((a.side + 1) % 3), t);
}

namespace {

// scalar position of an anchor on the triangle boundary cycle
long boundary_key(const Realization::Anchor& a, long big) {
    if (a.kind == 0) return a.corner * big;
    return a.side * big + 1 + a.idx;
}

bool cyclic_interleaved(long a1, long a2, long b1, long b2, long n) {
    auto in_arc = [&](long x, long from, long to) {
        // x in open cyclic interval (from,to)
        long rel_x = ((x - from) % n + n) % n;
        long rel_to = ((to - from) % n + n) % n;
        return rel_x > 0 && rel_x < rel_to;
    };
    bool b1in = in_arc(b1, a1, a2);
    bool b2in = in_arc(b2, a1, a2);
    return b1in != b2in;
}

struct ChordGeom {
    ChordRef ref;
    Realization::Anchor from, to;
    bool hug = false;
    int hug_side = -1;
    int hug_depth = 0;
    bool hug_forward = true; // travels with the side orientation
    Pt p_from, p_to;         // valid for non-hug chords (corners exact)
    long k_from = 0, k_to = 0;
};

} // namespace

void Realization::find_crossings() {
    const Surface& S = *surface_;
    struct PendingKey {
        int band;     // -1 / 0 / +1
        Rat t;        // along-chord parameter for band 0
        int hugdepth; // for hug bands
        ChordRef other;
        int sign_rel; // sign with this chord first
    };
    std::map<ChordRef, std::vector<std::pair<PendingKey, int>>> pending;

    for (int t = 0; t < S.triangle_count(); ++t) {
        int pts[3];
        for (int s = 0; s < 3; ++s) pts[s] = points_on_side(t, s);
        long big = std::max({pts[0], pts[1], pts[2]}) + 2;
        long cycle = 3 * big;

        std::vector<ChordGeom> chords;
        for (ChordRef cr : tri_chords_[t]) {
            ChordGeom g;
            g.ref = cr;
            auto [f, to] = chord_anchors(cr);
            g.from = f;
            g.to = to;
            if (chord_is_hug(cr)) {
                g.hug = true;
                auto [slot, fwd] = hug_slot(strands_[cr.strand].arc);
                g.hug_side = slot.side;
                g.hug_forward = fwd;
                g.hug_depth = depth_[cr.strand];
            } else {
                g.p_from = anchor_point(f, pts);
                g.p_to = anchor_point(to, pts);
            }
            g.k_from = boundary_key(f, big);
            g.k_to = boundary_key(to, big);
            chords.push_back(g);
        }

        for (size_t i = 0; i < chords.size(); ++i) {
            for (size_t j = i + 1; j < chords.size(); ++j) {
                const ChordGeom& A = chords[i];
                const ChordGeom& B = chords[j];
                if (A.hug && B.hug) continue;
                if (A.hug || B.hug) {
                    const ChordGeom& H = A.hug ? A : B;
                    const ChordGeom& C = A.hug ? B : A;
                    // the hug crosses exactly the chords attached to the
                    // interior of its side
                    int band = 0;
                    const Anchor* att = nullptr;
                    if (C.from.kind == 1 && C.from.side == H.hug_side) {
                        att = &C.from;
                        band = -1;
                    } else if (C.to.kind == 1 && C.to.side == H.hug_side) {
                        att = &C.to;
                        band = +1;
                    } else {
                        continue;
                    }
                    Pt hs = corner_pt(H.hug_side);
                    Pt he = corner_pt((H.hug_side + 1) % 3);
                    Pt dirH = H.hug_forward ? (he - hs) : (hs - he);
                    Pt att_pt = anchor_point(*att, pts);
                    Pt other_pt = anchor_point(band < 0 ? C.to : C.from, pts);
                    Pt dirC = (band < 0) ? (other_pt - att_pt) : (att_pt - other_pt);
                    int sgn_hc = sgn(cross(dirH, dirC));
                    if (sgn_hc == 0) throw InternalError("degenerate hug crossing");

                    Crossing cr;
                    cr.tri = t;
                    cr.a = std::min(H.ref, C.ref);
                    cr.b = std::max(H.ref, C.ref);
                    cr.sign = (cr.a == H.ref) ? sgn_hc : -sgn_hc;
                    int id = static_cast<int>(crossings_.size());
                    crossings_.push_back(cr);

                    // along the hug: position of the attachment in hug travel
                    int local = att->idx;
                    int m = pts[H.hug_side];
                    Rat th(H.hug_forward ? local : (m - 1 - local));
                    pending[H.ref].push_back({{0, th, 0, C.ref, sgn_hc}, id});
                    pending[C.ref].push_back({{band, Rat(0), H.hug_depth, H.ref, -sgn_hc}, id});
                    continue;
                }
                // plain chords: shared corner anchors never cross
                if (A.from.kind == 0 && ((B.from.kind == 0 && B.from.corner == A.from.corner) ||
                                         (B.to.kind == 0 && B.to.corner == A.from.corner)))
                    continue;
                if (A.to.kind == 0 && ((B.from.kind == 0 && B.from.corner == A.to.corner) ||
                                       (B.to.kind == 0 && B.to.corner == A.to.corner)))
                    continue;
                if (!cyclic_interleaved(A.k_from, A.k_to, B.k_from, B.k_to, cycle)) continue;
                auto ip = seg_intersect_interior(A.p_from, A.p_to, B.p_from, B.p_to);
                if (!ip) throw InternalError("interleaved chords without crossing point");
                Pt dirA = A.p_to - A.p_from;
                Pt dirB = B.p_to - B.p_from;
                int sgn_ab = sgn(cross(dirA, dirB));
                if (sgn_ab == 0) throw InternalError("tangent chords");

                Crossing cr;
                cr.tri = t;
                cr.a = std::min(A.ref, B.ref);
                cr.b = std::max(A.ref, B.ref);
                cr.sign = (cr.a == A.ref) ? sgn_ab : -sgn_ab;
                int id = static_cast<int>(crossings_.size());
                crossings_.push_back(cr);

                Rat ta = param_on_segment(A.p_from, A.p_to, *ip);
                Rat tb = param_on_segment(B.p_from, B.p_to, *ip);
                pending[A.ref].push_back({{0, ta, 0, B.ref, sgn_ab}, id});
                pending[B.ref].push_back({{0, tb, 0, A.ref, -sgn_ab}, id});
            }
        }
    }

    // order the crossings along every chord
    for (auto& [chord, list] : pending) {
        std::sort(list.begin(), list.end(), [&](const auto& x, const auto& y) {
            const PendingKey& p = x.first;
            const PendingKey& q = y.first;
            if (p.band != q.band) return p.band < q.band;
            if (p.band == -1) return p.hugdepth < q.hugdepth;
            if (p.band == +1) return p.hugdepth > q.hugdepth;
            if (p.t != q.t) return p.t < q.t;
            // coincident crossings: symbolic perturbation, chords shifted to
            // their left in increasing id order
            if (p.other == q.other) throw InternalError("duplicate crossing on chord");
            if (p.other < q.other) return p.sign_rel > 0;
            return q.sign_rel < 0;
        });
        auto& out = chord_cross_[chord];
        for (auto& [key, id] : list) out.push_back(id);
    }

    // pair counts
    for (const Crossing& c : crossings_) {
        int i = std::min(c.a.strand, c.b.strand);
        int j = std::max(c.a.strand, c.b.strand);
        pair_counts_[{i, j}]++;
    }
}

const std::vector<int>& Realization::chord_crossing_list(ChordRef c) const {
    static const std::vector<int> empty;
    auto it = chord_cross_.find(c);
    return it == chord_cross_.end() ? empty : it->second;
}

long Realization::pair_count(int i, int j) const {
    auto it = pair_counts_.find({std::min(i, j), std::max(i, j)});
    return it == pair_counts_.end() ? 0 : it->second;
}

std::pair<int, int> Realization::order_key(int crossing_index, int k) const {
    const Crossing& c = crossings_[crossing_index];
    ChordRef ch;
    if (c.a.strand == k)
        ch = c.a;
    else if (c.b.strand == k)
        ch = c.b;
    else
        throw InternalError("order_key: crossing not on strand");
    // both chords may belong to k (self-crossing); prefer the matching one(s)
    const auto& list = chord_crossing_list(ch);
    for (size_t r = 0; r < list.size(); ++r)
        if (list[r] == crossing_index) return {ch.seg, static_cast<int>(r)};
    throw InternalError("order_key: crossing missing from chord list");
}

std::vector<int> Realization::crossings_along(int i, int j) const {
    std::vector<int> out;
    for (int seg = 0; seg < segment_count(i); ++seg) {
        for (int id : chord_crossing_list({i, seg})) {
            const Crossing& c = crossings_[id];
            ChordRef other = (c.a == ChordRef{i, seg}) ? c.b : c.a;
            if (c.a.strand == i && c.b.strand == i) {
                // self-crossing appears on both chords; keep each occurrence
                if (j != -1 && j != i) continue;
                out.push_back(id);
                continue;
            }
            if (ChordRef{i, seg} != c.a && ChordRef{i, seg} != c.b) continue;
            if (j == -1 || other.strand == j) out.push_back(id);
        }
    }
    return out;
}

void Realization::build_fans() {
    const Surface& S = *surface_;
    fans_.assign(S.punctures(), {});

    struct CornerEnd {
        int group; // 0 = hug of side c, 1 = radial, 2 = hug of side c+2
        int key1;  // depth or v
        FanEntry entry;
    };
    std::map<std::pair<int, int>, std::vector<CornerEnd>> per_corner;

    for (int k = 0; k < strand_count(); ++k) {
        const Strand& st = strands_[k];
        if (st.is_curve) continue;
        const Arc& a = st.arc;
        if (a.length() == 0) {
            auto [slot, fwd] = hug_slot(a);
            (void)fwd;
            int t = slot.tri, s = slot.side;
            // ends at corner s (group depends on viewpoint) and corner s+1
            // at corner s the hug runs along side s: group 0
            // at corner s+1 it runs along side s = side ((s+1)+2)%3: group 2
            CornerEnd e1{0, depth_[k], {k, a.start.corner == s}};
            per_corner[{t, s}].push_back(e1);
            CornerEnd e2{2, depth_[k], {k, a.start.corner == (s + 1) % 3}};
            per_corner[{t, (s + 1) % 3}].push_back(e2);
            continue;
        }
        // radial ends: segment 0 at start, segment L at end
        auto add_radial = [&](CornerRef c, int pos, Slot local_slot, bool at_start) {
            auto [e, idx] = point_where_[k][pos];
            int m = static_cast<int>(edge_points_[e].size());
            int local = (edge_slots_[e] == local_slot) ? idx : (m - 1 - idx);
            per_corner[{c.tri, c.corner}].push_back({1, local, {k, at_start}});
        };
        add_radial(a.start, 0, a.word[0], true);
        add_radial(a.end, a.length() - 1, S.glued(a.word.back()), false);
    }

    auto cycles = S.puncture_corner_cycles();
    for (int p = 0; p < S.punctures(); ++p) {
        for (CornerRef c : cycles[p]) {
            auto it = per_corner.find({c.tri, c.corner});
            if (it == per_corner.end()) continue;
            auto& v = it->second;
            std::sort(v.begin(), v.end(), [](const CornerEnd& x, const CornerEnd& y) {
                if (x.group != y.group) return x.group < y.group;
                if (x.group == 2) return x.key1 > y.key1;
                return x.key1 < y.key1;
            });
            for (auto& e : v) fans_[p].push_back(e.entry);
        }
    }
}

// ---------------------------------------------------------------------------
// public helpers
// ---------------------------------------------------------------------------

bool is_simple(const Arc& a) {
    Realization r({Strand::of_arc(a)});
    return r.self_count(0) == 0;
}

bool is_simple(const Curve& c) {
    Realization r({Strand::of_curve(c)});
    return r.self_count(0) == 0;
}

Arc canonicalize_arc(const Arc& raw) {
    Arc n = normalize_arc(raw);
    if (!is_simple(n))
        throw DataError("arc is not embeddable: normal form has self-intersections");
    return n;
}

IntersectionData intersection_data(const Arc& a, const Arc& b) {
    if (a.surface->hash() != b.surface->hash()) throw DataError("surface mismatch");
    Realization r({Strand::of_arc(a), Strand::of_arc(b)});
    IntersectionData out;
    std::vector<int> along_a = r.crossings_along(0, 1);
    out.count = static_cast<long>(along_a.size());
    // ranks along b
    std::vector<int> along_b = r.crossings_along(1, 0);
    std::map<int, int> rank_b;
    for (size_t i = 0; i < along_b.size(); ++i) rank_b[along_b[i]] = static_cast<int>(i);
    for (size_t i = 0; i < along_a.size(); ++i) {
        const Crossing& c = r.crossings()[along_a[i]];
        IntersectionPoint p;
        p.idx_along_a = static_cast<int>(i);
        p.idx_along_b = rank_b.at(along_a[i]);
        ChordRef ca = (c.a.strand == 0) ? c.a : c.b;
        ChordRef cb = (c.a.strand == 1) ? c.a : c.b;
        p.seg_a = ca.seg;
        p.seg_b = cb.seg;
        p.tri = c.tri;
        p.sign = (c.a.strand == 0) ? c.sign : -c.sign;
        out.points.push_back(p);
    }
    return out;
}

bool are_disjoint(const Arc& a, const Arc& b) {
    return intersection_count(a, b) == 0;
}

long intersection_count(const Arc& a, const Arc& b) {
    if (a.surface->hash() != b.surface->hash()) throw DataError("surface mismatch");
    Realization r({Strand::of_arc(a), Strand::of_arc(b)});
    return r.pair_count(0, 1);
}

long intersection_count(const Curve& c, const Arc& a) {
    if (c.surface->hash() != a.surface->hash()) throw DataError("surface mismatch");
    Realization r({Strand::of_curve(c), Strand::of_arc(a)});
    return r.pair_count(0, 1);
}

long intersection_count(const Curve& c, const Curve& d) {
    if (c.surface->hash() != d.surface->hash()) throw DataError("surface mismatch");
    Realization r({Strand::of_curve(c), Strand::of_curve(d)});
    return r.pair_count(0, 1);
}

} // namespace unicorn
