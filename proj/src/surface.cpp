#include "unicorn/surface.hpp"
#include "unicorn/io.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace unicorn {

namespace {

struct DSU {
    std::vector<int> p;
    explicit DSU(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

bool slot_valid(const SurfaceData& d, Slot s) {
    return s.tri >= 0 && s.tri < static_cast<int>(d.glue.size()) && s.side >= 0 && s.side < 3;
}

} // namespace

ValidationReport validate_surface(const SurfaceData& data) {
    ValidationReport rep;
    const int nt = static_cast<int>(data.glue.size());
    rep.triangle_count = nt;
    auto defect = [&](const std::string& kind, const std::string& detail) {
        rep.defects.push_back({kind, detail});
    };

    if (nt == 0) {
        defect("empty", "no triangles");
        return rep;
    }
    if (nt % 2 != 0) defect("odd triangle count", std::to_string(nt));
    if (data.corner_puncture.size() != data.glue.size())
        defect("corner table size", "corner_puncture rows != triangle count");

    // Gluing involution without fixed slots.
    for (int t = 0; t < nt; ++t) {
        for (int s = 0; s < 3; ++s) {
            Slot g = data.glue[t][s];
            if (!slot_valid(data, g)) {
                defect("dangling side", "triangle " + std::to_string(t) + " side " + std::to_string(s));
                continue;
            }
            if (g == Slot{t, s}) {
                defect("self-glued slot", "triangle " + std::to_string(t) + " side " + std::to_string(s));
                continue;
            }
            Slot back = data.glue[g.tri][g.side];
            if (back != Slot{t, s})
                defect("non-involutive gluing",
                       "triangle " + std::to_string(t) + " side " + std::to_string(s));
        }
    }
    if (!rep.ok()) return rep;

    // Connectivity over the dual graph.
    {
        DSU dsu(nt);
        for (int t = 0; t < nt; ++t)
            for (int s = 0; s < 3; ++s) dsu.unite(t, data.glue[t][s].tri);
        std::set<int> roots;
        for (int t = 0; t < nt; ++t) roots.insert(dsu.find(t));
        if (roots.size() > 1) defect("disconnected", std::to_string(roots.size()) + " components");
    }

    // Vertex classes. Corner c of t is identified across the two incident
    // sides: side c (as its tail) and side (c+2) (as its head). Under an
    // orientation-reversing gluing of side s, tail corner s maps to the head
    // corner of the partner slot and vice versa.
    DSU corners(nt * 3);
    auto cid = [&](int t, int c) { return t * 3 + c; };
    for (int t = 0; t < nt; ++t) {
        for (int s = 0; s < 3; ++s) {
            Slot g = data.glue[t][s];
            // tail of (t,s) = corner s  <->  head of g = corner (g.side+1)%3
            corners.unite(cid(t, s), cid(g.tri, (g.side + 1) % 3));
            corners.unite(cid(t, (s + 1) % 3), cid(g.tri, g.side));
        }
    }
    std::map<int, std::vector<int>> classes;
    for (int i = 0; i < nt * 3; ++i) classes[corners.find(i)].push_back(i);
    rep.vertex_count = static_cast<int>(classes.size());
    rep.edge_count = nt * 3 / 2;

    // Euler characteristic of the punctured surface: ideal vertices removed.
    rep.euler_characteristic = rep.vertex_count - rep.edge_count + rep.triangle_count
                               - rep.vertex_count; // = F - E
    rep.puncture_count = rep.vertex_count;
    int chi_closed = rep.vertex_count - rep.edge_count + rep.triangle_count;
    if (chi_closed % 2 != 0) {
        defect("non-orientable or broken complex", "odd closed Euler characteristic");
        return rep;
    }
    rep.genus = (2 - chi_closed) / 2;
    if (rep.genus < 0) defect("negative genus", std::to_string(rep.genus));
    if (rep.euler_characteristic >= 0)
        defect("non-negative Euler characteristic", std::to_string(rep.euler_characteristic));

    // Declared invariants must match the complex.
    if (data.genus != rep.genus)
        defect("genus mismatch", "declared " + std::to_string(data.genus) + " computed " + std::to_string(rep.genus));
    if (data.punctures != rep.puncture_count)
        defect("puncture count mismatch",
               "declared " + std::to_string(data.punctures) + " computed " + std::to_string(rep.puncture_count));

    // Corner labels consistent with vertex classes and stable (class labelled
    // by order of minimal corner id).
    if (rep.ok()) {
        std::map<int, int> class_label;
        for (int i = 0; i < nt * 3; ++i) {
            int r = corners.find(i);
            if (!class_label.count(r)) class_label[r] = -1;
        }
        int next = 0;
        for (int i = 0; i < nt * 3; ++i) {
            int r = corners.find(i);
            if (class_label[r] < 0) class_label[r] = next++;
        }
        for (int t = 0; t < nt; ++t)
            for (int c = 0; c < 3; ++c)
                if (data.corner_puncture[t][c] != class_label[corners.find(cid(t, c))])
                    defect("non-puncture vertex labelling",
                           "triangle " + std::to_string(t) + " corner " + std::to_string(c));
    }
    return rep;
}

Surface::Surface(SurfaceData data, std::string hash)
    : data_(std::move(data)), hash_(std::move(hash)) {
    // Enumerate orientation-preserving simplicial automorphisms.
    const int nt = triangle_count();
    for (int t0 = 0; t0 < nt; ++t0) {
        for (int r0 = 0; r0 < 3; ++r0) {
            std::vector<int> ti(nt, -1), rot(nt, -1);
            ti[0] = t0;
            rot[0] = r0;
            std::vector<int> stack = {0};
            bool ok = true;
            while (ok && !stack.empty()) {
                int t = stack.back();
                stack.pop_back();
                for (int s = 0; s < 3; ++s) {
                    Slot g = data_.glue[t][s];
                    Slot img_slot = {ti[t], (s + rot[t]) % 3};
                    Slot img_glued = data_.glue[img_slot.tri][img_slot.side];
                    // image of g must be img_glued with matching rotation
                    int want_tri = img_glued.tri;
                    int want_rot = (img_glued.side - g.side + 6) % 3;
                    if (ti[g.tri] == -1) {
                        ti[g.tri] = want_tri;
                        rot[g.tri] = want_rot;
                        stack.push_back(g.tri);
                    } else if (ti[g.tri] != want_tri || rot[g.tri] != want_rot) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) continue;
            // must be a bijection
            std::vector<int> seen(nt, 0);
            for (int t = 0; t < nt; ++t) {
                if (ti[t] < 0) { ok = false; break; }
                seen[ti[t]]++;
            }
            if (!ok || *std::max_element(seen.begin(), seen.end()) != 1) continue;
            autos_.push_back({ti, rot});
        }
    }
}

SurfacePtr Surface::create(SurfaceData data) {
    ValidationReport rep = validate_surface(data);
    if (!rep.ok()) {
        std::string msg = "invalid surface:";
        for (auto& d : rep.defects) msg += " [" + d.kind + ": " + d.detail + "]";
        throw DataError(msg);
    }
    SurfaceData copy = data;
    // hash over the canonical print of the raw data
    std::ostringstream os;
    os << copy.genus << "|" << copy.punctures;
    for (size_t t = 0; t < copy.glue.size(); ++t) {
        for (int s = 0; s < 3; ++s)
            os << "|" << copy.glue[t][s].tri << ":" << copy.glue[t][s].side;
        for (int c = 0; c < 3; ++c) os << "|" << copy.corner_puncture[t][c];
    }
    std::string h = sha256_hex(os.str()).substr(0, 16);
    return std::shared_ptr<const Surface>(new Surface(std::move(copy), h));
}

CornerRef Surface::next_corner_ccw(CornerRef c) const {
    // Rotate ccw around the vertex: leave through side (c.corner+2)%3.
    Slot g = glued({c.tri, (c.corner + 2) % 3});
    return {g.tri, g.side};
}

std::vector<std::vector<CornerRef>> Surface::puncture_corner_cycles() const {
    std::vector<std::vector<CornerRef>> out(punctures());
    std::set<CornerRef> used;
    for (int t = 0; t < triangle_count(); ++t) {
        for (int c = 0; c < 3; ++c) {
            CornerRef start{t, c};
            if (used.count(start)) continue;
            std::vector<CornerRef> cyc;
            CornerRef cur = start;
            do {
                cyc.push_back(cur);
                used.insert(cur);
                cur = next_corner_ccw(cur);
            } while (cur != start);
            out[puncture_at(start)] = cyc;
        }
    }
    return out;
}

SurfacePtr build_standard_surface(int genus, int punctures) {
    if (punctures < 1) throw DataError("standard surface requires punctures >= 1");
    if (2 - 2 * genus - punctures >= 0)
        throw DataError("standard surface requires negative Euler characteristic");

    // Polygon with K sides; side j runs corner j -> j+1.
    const int K = 4 * genus + 2 * (punctures - 1);
    // side pairing of the polygon word
    std::vector<int> mate(K, -1);
    for (int i = 0; i < genus; ++i) {
        mate[4 * i + 0] = 4 * i + 2;
        mate[4 * i + 2] = 4 * i + 0;
        mate[4 * i + 1] = 4 * i + 3;
        mate[4 * i + 3] = 4 * i + 1;
    }
    for (int i = 0; i < punctures - 1; ++i) {
        int b = 4 * genus + 2 * i;
        mate[b] = b + 1;
        mate[b + 1] = b;
    }

    // Fan triangulation from polygon corner 0: triangle i = (0, i+1, i+2),
    // i in [0, K-3]. Triangle-local sides: side 0 = diagonal (0, i+1)
    // (polygon side 0 when i = 0), side 1 = polygon side i+1, side 2 =
    // diagonal (i+2, 0) (polygon side K-1 when i = K-3).
    const int nt = K - 2;
    SurfaceData d;
    d.genus = genus;
    d.punctures = punctures;
    d.glue.assign(nt, {Slot{}, Slot{}, Slot{}});

    // map polygon side j to its triangle slot
    auto poly_slot = [&](int j) -> Slot {
        if (j == 0) return {0, 0};
        if (j == K - 1) return {nt - 1, 2};
        return {j - 1, 1};
    };
    // interior diagonals: d_i between triangles i-1 and i (diagonal (0,i+1))
    for (int i = 1; i <= nt - 1; ++i) {
        Slot a{i - 1, 2}, b{i, 0};
        d.glue[a.tri][a.side] = b;
        d.glue[b.tri][b.side] = a;
    }
    for (int j = 0; j < K; ++j) {
        Slot a = poly_slot(j), b = poly_slot(mate[j]);
        d.glue[a.tri][a.side] = b;
        d.glue[b.tri][b.side] = a;
    }

    // corner labels: derive from the complex itself
    d.corner_puncture.assign(nt, {0, 0, 0});
    {
        DSU corners(nt * 3);
        auto cid = [&](int t, int c) { return t * 3 + c; };
        for (int t = 0; t < nt; ++t)
            for (int s = 0; s < 3; ++s) {
                Slot g = d.glue[t][s];
                corners.unite(cid(t, s), cid(g.tri, (g.side + 1) % 3));
                corners.unite(cid(t, (s + 1) % 3), cid(g.tri, g.side));
            }
        std::map<int, int> label;
        int next = 0;
        for (int i = 0; i < nt * 3; ++i) {
            int r = corners.find(i);
            if (!label.count(r)) label[r] = next++;
        }
        for (int t = 0; t < nt; ++t)
            for (int c = 0; c < 3; ++c) d.corner_puncture[t][c] = label[corners.find(cid(t, c))];
    }
    return Surface::create(std::move(d));
}

std::string print_surface(const Surface& s) {
    std::ostringstream os;
    os << "unicorn-surface v1\n";
    os << "genus " << s.genus() << "\n";
    os << "punctures " << s.punctures() << "\n";
    os << "triangles " << s.triangle_count() << "\n";
    for (int t = 0; t < s.triangle_count(); ++t) {
        os << "tri " << t << " glue";
        for (int side = 0; side < 3; ++side) {
            Slot g = s.glued({t, side});
            os << " " << g.tri << ":" << g.side;
        }
        os << " corners";
        for (int c = 0; c < 3; ++c) os << " " << s.puncture_at({t, c});
        os << "\n";
    }
    return os.str();
}

SurfacePtr parse_surface(const std::string& text) {
    std::istringstream is(text);
    std::string tok;
    is >> tok;
    if (tok != "unicorn-surface") throw DataError("bad surface header");
    is >> tok;
    if (tok != "v1") throw DataError("unsupported surface version " + tok);
    SurfaceData d;
    int nt = 0;
    is >> tok;
    if (tok != "genus") throw DataError("expected genus");
    is >> d.genus;
    is >> tok;
    if (tok != "punctures") throw DataError("expected punctures");
    is >> d.punctures;
    is >> tok;
    if (tok != "triangles") throw DataError("expected triangles");
    is >> nt;
    if (nt <= 0 || nt > 100000) throw DataError("bad triangle count");
    d.glue.assign(nt, {Slot{}, Slot{}, Slot{}});
    d.corner_puncture.assign(nt, {0, 0, 0});
    for (int i = 0; i < nt; ++i) {
        int t;
        is >> tok >> t;
        if (tok != "tri" || t != i) throw DataError("expected tri " + std::to_string(i));
        is >> tok;
        if (tok != "glue") throw DataError("expected glue");
        for (int s = 0; s < 3; ++s) {
            std::string pair;
            is >> pair;
            auto colon = pair.find(':');
            if (colon == std::string::npos) throw DataError("bad slot " + pair);
            d.glue[i][s] = {std::stoi(pair.substr(0, colon)), std::stoi(pair.substr(colon + 1))};
        }
        is >> tok;
        if (tok != "corners") throw DataError("expected corners");
        for (int c = 0; c < 3; ++c) is >> d.corner_puncture[i][c];
    }
    return Surface::create(std::move(d));
}

} // namespace unicorn
