#include "unicorn/arc.hpp"

#include <algorithm>
#include <sstream>

namespace unicorn {

namespace {

int opposite_side(int corner) { return (corner + 1) % 3; }
int opposite_corner(int side) { return (side + 2) % 3; }

std::strong_ordering cmp_words(const std::vector<Slot>& a, const std::vector<Slot>& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (size_t i = 0; i < a.size(); ++i)
        if (auto c = a[i] <=> b[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

} // namespace

std::strong_ordering Arc::operator<=>(const Arc& o) const {
    if (auto c = surface->hash() <=> o.surface->hash(); c != 0) return c;
    if (auto c = start <=> o.start; c != 0) return c;
    if (auto c = end <=> o.end; c != 0) return c;
    return cmp_words(word, o.word);
}

std::strong_ordering Curve::operator<=>(const Curve& o) const {
    if (auto c = surface->hash() <=> o.surface->hash(); c != 0) return c;
    return cmp_words(word, o.word);
}

void check_arc_wellformed(const Arc& a) {
    if (!a.surface) throw DataError("arc without surface");
    auto bad = [&](const std::string& m) { throw DataError("malformed arc: " + m); };
    int nt = a.surface->triangle_count();
    auto ok_corner = [&](CornerRef c) {
        return c.tri >= 0 && c.tri < nt && c.corner >= 0 && c.corner < 3;
    };
    if (!ok_corner(a.start) || !ok_corner(a.end)) bad("corner out of range");
    int cur = a.start.tri;
    for (const Slot& s : a.word) {
        if (s.tri != cur || s.side < 0 || s.side >= 3) bad("word breaks triangle chaining");
        cur = a.surface->glued(s).tri;
    }
    if (a.end.tri != cur) bad("end corner not in final triangle");
    if (a.word.empty() && a.start.corner == a.end.corner) bad("zero-length loop");
}

void check_curve_wellformed(const Curve& c) {
    if (!c.surface) throw DataError("curve without surface");
    if (c.word.empty()) throw DataError("malformed curve: empty word");
    int n = static_cast<int>(c.word.size());
    for (int i = 0; i < n; ++i) {
        Slot cur = c.word[i];
        Slot nxt = c.word[(i + 1) % n];
        if (cur.side < 0 || cur.side >= 3 || cur.tri < 0 || cur.tri >= c.surface->triangle_count())
            throw DataError("malformed curve: slot out of range");
        if (nxt.tri != c.surface->glued(cur).tri)
            throw DataError("malformed curve: word breaks triangle chaining");
    }
}

std::pair<Slot, bool> hug_slot(const Arc& a) {
    if (!a.word.empty()) throw DataError("hug_slot on crossing arc");
    int cs = a.start.corner, ce = a.end.corner;
    // side connecting corners c and c+1 is side c
    if ((cs + 1) % 3 == ce) return {{a.start.tri, cs}, true};
    return {{a.start.tri, ce}, false};
}

Arc edge_arc(const SurfacePtr& s, Slot edge_slot, bool forward) {
    Slot g = s->glued(edge_slot);
    Slot canon = std::min(edge_slot, g);
    Arc a;
    a.surface = s;
    if (forward) {
        a.start = {canon.tri, canon.side};
        a.end = {canon.tri, (canon.side + 1) % 3};
    } else {
        a.start = {canon.tri, (canon.side + 1) % 3};
        a.end = {canon.tri, canon.side};
    }
    return a;
}

Arc normalize_arc(Arc a) {
    check_arc_wellformed(a);
    const Surface& S = *a.surface;
    bool changed = true;
    while (changed) {
        changed = false;
        // same-side returns
        for (size_t i = 0; i + 1 < a.word.size();) {
            if (a.word[i + 1] == S.glued(a.word[i])) {
                a.word.erase(a.word.begin() + i, a.word.begin() + i + 2);
                changed = true;
                if (i > 0) --i;
            } else {
                ++i;
            }
        }
        // start corner must leave through the opposite side
        if (!a.word.empty() && a.word[0].side != opposite_side(a.start.corner)) {
            Slot x = a.word[0];
            Slot g = S.glued(x);
            int c = a.start.corner;
            int nc = (c == x.side) ? (g.side + 1) % 3 : g.side;
            a.start = {g.tri, nc};
            a.word.erase(a.word.begin());
            changed = true;
        }
        // end corner must be opposite the entering side
        if (!a.word.empty()) {
            Slot last = a.word.back();
            Slot entry = S.glued(last);
            if (a.end.corner != opposite_corner(entry.side)) {
                int c = a.end.corner;
                int nc = (c == entry.side) ? (last.side + 1) % 3 : last.side;
                a.end = {last.tri, nc};
                a.word.pop_back();
                changed = true;
            }
        }
    }
    if (a.word.empty()) {
        if (a.start.corner == a.end.corner)
            throw DataError("inessential arc: normalization emptied the crossing list");
        // canonical triangle for the side the arc runs along
        auto [slot, fwd] = hug_slot(a);
        Slot g = S.glued(slot);
        Slot canon = std::min(slot, g);
        if (canon != slot) {
            a.start = {canon.tri, fwd ? canon.side : (canon.side + 1) % 3};
            a.end = {canon.tri, fwd ? (canon.side + 1) % 3 : canon.side};
        }
    }
    return a;
}

Arc reverse_arc(const Arc& a) {
    Arc r;
    r.surface = a.surface;
    r.start = a.end;
    r.end = a.start;
    r.word.reserve(a.word.size());
    for (auto it = a.word.rbegin(); it != a.word.rend(); ++it)
        r.word.push_back(a.surface->glued(*it));
    if (r.word.empty()) return normalize_arc(r);
    return r;
}

std::optional<Curve> normalize_curve(Curve c) {
    check_curve_wellformed(c);
    const Surface& S = *c.surface;
    bool changed = true;
    while (changed) {
        changed = false;
        int n = static_cast<int>(c.word.size());
        if (n == 0) break;
        for (int i = 0; i < n; ++i) {
            int j = (i + 1) % n;
            if (i != j && c.word[j] == S.glued(c.word[i])) {
                if (j > i) {
                    c.word.erase(c.word.begin() + j);
                    c.word.erase(c.word.begin() + i);
                } else {
                    c.word.erase(c.word.begin() + i);
                    c.word.erase(c.word.begin() + j);
                }
                changed = true;
                break;
            }
        }
    }
    if (c.word.size() < 2) return std::nullopt; // null-homotopic
    // canonical rotation over both traversal directions
    auto min_rotation = [](std::vector<Slot> w) {
        std::vector<Slot> best = w;
        int n = static_cast<int>(w.size());
        for (int r = 1; r < n; ++r) {
            std::rotate(w.begin(), w.begin() + 1, w.end());
            if (cmp_words(w, best) < 0) best = w;
        }
        return best;
    };
    std::vector<Slot> fwd = min_rotation(c.word);
    std::vector<Slot> rev = min_rotation(reverse_curve(c).word);
    c.word = (cmp_words(rev, fwd) < 0) ? rev : fwd;
    return c;
}

Curve reverse_curve(const Curve& c) {
    // Backward traversal exits each triangle through the slot it entered.
    int m = static_cast<int>(c.word.size());
    Curve r;
    r.surface = c.surface;
    r.word.reserve(m);
    for (int k = 0; k < m; ++k) {
        int idx = (m - 2 - k % m + 2 * m) % m;
        r.word.push_back(c.surface->glued(c.word[idx]));
    }
    return r;
}

namespace {

std::string slot_str(Slot s) { return std::to_string(s.tri) + ":" + std::to_string(s.side); }

Slot parse_slot(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw DataError("bad slot token " + s);
    return {std::stoi(s.substr(0, colon)), std::stoi(s.substr(colon + 1))};
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

std::string arc_token(const Arc& a) {
    std::ostringstream os;
    os << a.start.tri << ":" << a.start.corner << "/";
    for (size_t i = 0; i < a.word.size(); ++i) {
        if (i) os << ",";
        os << slot_str(a.word[i]);
    }
    os << "/" << a.end.tri << ":" << a.end.corner;
    return os.str();
}

Arc parse_arc_token(const SurfacePtr& s, const std::string& token) {
    auto parts = split(token, '/');
    if (parts.size() != 3) throw DataError("bad arc token " + token);
    Arc a;
    a.surface = s;
    Slot st = parse_slot(parts[0]);
    a.start = {st.tri, st.side};
    if (!parts[1].empty())
        for (auto& p : split(parts[1], ',')) a.word.push_back(parse_slot(p));
    Slot en = parse_slot(parts[2]);
    a.end = {en.tri, en.side};
    check_arc_wellformed(a);
    return a;
}

std::string curve_token(const Curve& c) {
    std::ostringstream os;
    os << "~";
    for (size_t i = 0; i < c.word.size(); ++i) {
        if (i) os << ",";
        os << slot_str(c.word[i]);
    }
    return os.str();
}

Curve parse_curve_token(const SurfacePtr& s, const std::string& token) {
    if (token.empty() || token[0] != '~') throw DataError("bad curve token " + token);
    Curve c;
    c.surface = s;
    for (auto& p : split(token.substr(1), ',')) c.word.push_back(parse_slot(p));
    check_curve_wellformed(c);
    return c;
}

} // namespace unicorn
