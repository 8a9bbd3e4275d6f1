#include "doctest.h"

#include "unicorn/surface.hpp"

using namespace unicorn;

TEST_CASE("standard once-punctured torus") {
    auto s = build_standard_surface(1, 1);
    CHECK(s->triangle_count() == 2);
    CHECK(s->euler_characteristic() == -1);
    CHECK(s->punctures() == 1);
    auto rep = validate_surface(s->data());
    CHECK(rep.ok());
    CHECK(rep.euler_characteristic == -1);
}

TEST_CASE("standard four-punctured sphere") {
    auto s = build_standard_surface(0, 4);
    CHECK(s->triangle_count() == 4);
    CHECK(s->euler_characteristic() == -2);
    CHECK(s->punctures() == 4);
    CHECK(validate_surface(s->data()).ok());
}

TEST_CASE("degenerate cases rejected") {
    CHECK_THROWS_AS(build_standard_surface(0, 2), DataError);
    CHECK_THROWS_AS(build_standard_surface(0, 1), DataError);
    CHECK_THROWS_AS(build_standard_surface(1, 0), DataError);
}

TEST_CASE("genus two surface triangle count matches -2*chi") {
    auto s = build_standard_surface(2, 1);
    CHECK(s->triangle_count() == 6);
    auto rep = validate_surface(s->data());
    CHECK(rep.ok());
    CHECK(rep.euler_characteristic == -3);
    CHECK(rep.vertex_count == 1);
    CHECK(rep.edge_count == 9);
}

TEST_CASE("validation reports dangling side") {
    auto s = build_standard_surface(1, 1);
    SurfaceData d = s->data();
    d.glue[0][1] = Slot{-1, -1};
    auto rep = validate_surface(d);
    CHECK(!rep.ok());
    bool found = false;
    for (auto& def : rep.defects)
        if (def.kind == "dangling side") found = true;
    CHECK(found);
}

TEST_CASE("validation clean for the shipped range") {
    for (int g = 0; g <= 3; ++g) {
        for (int n = 1; n <= 4; ++n) {
            if (2 - 2 * g - n >= 0) continue;
            auto s = build_standard_surface(g, n);
            auto rep = validate_surface(s->data());
            CHECK(rep.ok());
            CHECK(rep.euler_characteristic == 2 - 2 * g - n);
            CHECK(s->triangle_count() == -2 * (2 - 2 * g - n));
        }
    }
}

TEST_CASE("print/parse round trip and determinism") {
    auto s = build_standard_surface(1, 2);
    std::string text = print_surface(*s);
    auto t = parse_surface(text);
    CHECK(print_surface(*t) == text);
    auto s2 = build_standard_surface(1, 2);
    CHECK(print_surface(*s2) == text);
    CHECK(s2->hash() == s->hash());
}

TEST_CASE("corner cycles cover all corners") {
    auto s = build_standard_surface(0, 4);
    auto cycles = s->puncture_corner_cycles();
    int total = 0;
    for (auto& c : cycles) total += static_cast<int>(c.size());
    CHECK(total == s->triangle_count() * 3);
}

TEST_CASE("automorphisms contain the identity") {
    auto s = build_standard_surface(1, 1);
    const auto& autos = s->automorphisms();
    bool has_identity = false;
    for (const auto& a : autos) {
        bool id = true;
        for (int t = 0; t < s->triangle_count(); ++t)
            if (a.tri_image[t] != t || a.rot[t] != 0) id = false;
        if (id) has_identity = true;
    }
    CHECK(has_identity);
}
