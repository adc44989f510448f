#include <stdexcept>

#include "doctest.h"
#include "multicurve/surface.hpp"

using namespace mcv;

TEST_CASE("derived constants") {
    auto sd = build_surface(2);
    CHECK(sd.surface.h() == 6);
    CHECK(sd.surface.num_cuffs() == 3);
    CHECK(sd.surface.num_pants() == 2);

    auto sd3 = build_surface(3);
    CHECK(sd3.surface.h() == 12);
    CHECK(sd3.surface.num_cuffs() == 6);
    CHECK(sd3.surface.num_pants() == 4);
}

TEST_CASE("genus below 2 rejected") {
    CHECK_THROWS_AS(build_surface(1), std::invalid_argument);
    CHECK_THROWS_AS(build_surface(0), std::invalid_argument);
    CHECK_THROWS_AS(build_surface(-3), std::invalid_argument);
}

TEST_CASE("genus 2 is the theta decomposition") {
    auto sd = build_surface(2);
    for (int i = 0; i < 3; ++i) {
        CHECK(sd.pants.cuff_sides[i][0] == SlotRef{0, i});
        CHECK(sd.pants.cuff_sides[i][1] == SlotRef{1, i});
        CHECK_FALSE(sd.pants.is_self_glued(i));
    }
}

TEST_CASE("gluing involution is fixed-point free with Euler characteristic 2-2g") {
    for (int g = 2; g <= 6; ++g) {
        auto sd = build_surface(g);
        REQUIRE(sd.pants.num_cuffs() == 3 * g - 3);
        for (int p = 0; p < sd.pants.num_pants(); ++p)
            for (int s = 0; s < 3; ++s) {
                SlotRef me{p, s};
                SlotRef other = sd.pants.partner(me);
                CHECK(other != me);
                CHECK(sd.pants.partner(other) == me);
            }
        CHECK(sd.pants.euler_characteristic_cells() == 2 - 2 * g);
    }
}

TEST_CASE("build_surface is deterministic") {
    for (int g = 2; g <= 5; ++g) {
        auto a = build_surface(g), b = build_surface(g);
        CHECK(a.pants.slot_cuff == b.pants.slot_cuff);
        REQUIRE(a.pants.num_cuffs() == b.pants.num_cuffs());
        for (int i = 0; i < a.pants.num_cuffs(); ++i)
            CHECK(a.pants.cuff_sides[i] == b.pants.cuff_sides[i]);
    }
}

TEST_CASE("surface info json mentions the pieces") {
    auto sd = build_surface(2);
    auto j = surface_info_json(sd);
    CHECK(j.find("\"genus\": 2") != std::string::npos);
    CHECK(j.find("\"num_cuffs\": 3") != std::string::npos);
}
