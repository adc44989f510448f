#include <set>

#include <stdexcept>

#include "doctest.h"
#include "multicurve/multicurve.hpp"
#include "multicurve/type_invariant.hpp"

using namespace mcv;

namespace {

// every valid coordinate vector of genus 2 with norm at most L, by brute force
std::vector<DTCoordinates> genus2_ball(const SurfaceData& sd, int64_t L) {
    std::vector<DTCoordinates> out;
    for (int64_t m1 = 0; m1 <= L; ++m1)
        for (int64_t m2 = 0; m1 + m2 <= L; ++m2)
            for (int64_t m3 = 0; m1 + m2 + m3 <= L; ++m3) {
                int64_t rest = L - m1 - m2 - m3;
                for (int64_t t1 = -rest; t1 <= rest; ++t1)
                    for (int64_t t2 = -(rest - std::abs(t1)); std::abs(t1) + std::abs(t2) <= rest;
                         ++t2)
                        for (int64_t t3 = -(rest - std::abs(t1) - std::abs(t2));
                             std::abs(t1) + std::abs(t2) + std::abs(t3) <= rest; ++t3) {
                            DTCoordinates c{{m1, m2, m3}, {t1, t2, t3}};
                            if (c.is_zero()) continue;
                            if (validate(sd, c).ok) out.push_back(c);
                        }
            }
    return out;
}

}  // namespace

TEST_CASE("decode: cuff components") {
    auto sd = build_surface(2);
    auto mc = decode(sd, {{0, 0, 0}, {0, 5, 0}});
    REQUIRE(mc.components.size() == 1);
    CHECK(mc.components[0].is_cuff);
    CHECK(mc.components[0].cuff == 1);
    CHECK(mc.components[0].weight == 5);
}

TEST_CASE("decode: empty lamination") {
    auto sd = build_surface(2);
    CHECK(decode(sd, {{0, 0, 0}, {0, 0, 0}}).empty());
}

TEST_CASE("decode: rejects invalid input") {
    auto sd = build_surface(2);
    CHECK_THROWS_AS(decode(sd, {{1, 1, 1}, {0, 0, 0}}), std::domain_error);
}

TEST_CASE("decode: re-measure reproduces m (spec example)") {
    auto sd = build_surface(2);
    auto mc = decode(sd, {{2, 2, 2}, {0, 0, 0}});
    CHECK(mc.remeasure(3) == std::vector<int64_t>{2, 2, 2});
}

TEST_CASE("decode: scaling multiplies weights") {
    auto sd = build_surface(2);
    auto one = decode(sd, {{2, 0, 0}, {0, 0, 0}});
    REQUIRE(one.components.size() == 1);
    CHECK(one.components[0].weight == 1);
    CHECK(one.components[0].crossings == std::vector<int64_t>{2, 0, 0});

    auto two = decode(sd, {{4, 0, 0}, {0, 0, 0}});
    REQUIRE(two.components.size() == 1);
    CHECK(two.components[0].weight == 2);
    CHECK(two.components[0].crossings == std::vector<int64_t>{2, 0, 0});

    auto three = decode(sd, {{6, 0, 0}, {0, 0, 0}});
    REQUIRE(three.components.size() == 1);
    CHECK(three.components[0].weight == 3);
}

TEST_CASE("decode: round-trip over the whole norm-8 ball, genus 2") {
    auto sd = build_surface(2);
    for (const auto& c : genus2_ball(sd, 8)) {
        auto mc = decode(sd, c);
        CHECK(mc.remeasure(3) == c.m);
    }
}

TEST_CASE("topological_type: empty multicurve") {
    auto sd = build_surface(2);
    auto ti = topological_type(sd, decode(sd, {{0, 0, 0}, {0, 0, 0}}));
    REQUIRE(ti.vertices.size() == 1);
    CHECK(ti.vertices[0] == TypeVertex{2, 0});
    CHECK(ti.edges.empty());
}

TEST_CASE("topological_type: one cuff is nonseparating") {
    auto sd = build_surface(2);
    auto ti = topological_type(sd, decode(sd, {{0, 0, 0}, {1, 0, 0}}));
    REQUIRE(ti.vertices.size() == 1);
    CHECK(ti.vertices[0] == TypeVertex{1, 2});
    REQUIRE(ti.edges.size() == 1);
    CHECK(ti.edges[0].weight == 1);
    CHECK(ti.edges[0].u == 0);
    CHECK(ti.edges[0].v == 0);

    auto ti3 = topological_type(sd, decode(sd, {{0, 0, 0}, {3, 0, 0}}));
    REQUIRE(ti3.edges.size() == 1);
    CHECK(ti3.edges[0].weight == 3);
    CHECK(ti3.vertices == ti.vertices);
}

TEST_CASE("topological_type: all three cuffs have the same type") {
    auto sd = build_surface(2);
    auto a = topological_type(sd, decode(sd, {{0, 0, 0}, {1, 0, 0}}));
    auto b = topological_type(sd, decode(sd, {{0, 0, 0}, {0, 1, 0}}));
    auto c = topological_type(sd, decode(sd, {{0, 0, 0}, {0, 0, 1}}));
    CHECK(a.key() == b.key());
    CHECK(b.key() == c.key());
}

TEST_CASE("topological_type: (2,0,0) separates genus 2 into two handles") {
    auto sd = build_surface(2);
    auto ti = topological_type(sd, decode(sd, {{2, 0, 0}, {0, 0, 0}}));
    REQUIRE(ti.vertices.size() == 2);
    CHECK(ti.vertices[0] == TypeVertex{1, 1});
    CHECK(ti.vertices[1] == TypeVertex{1, 1});
    REQUIRE(ti.edges.size() == 1);
    CHECK(ti.edges[0].u == 0);
    CHECK(ti.edges[0].v == 1);
}

TEST_CASE("topological_type: graph identity sum over the norm-8 ball") {
    auto sd = build_surface(2);
    for (const auto& c : genus2_ball(sd, 8)) {
        auto ti = topological_type(sd, decode(sd, c));
        int64_t lhs = 0, half_edges = 0;
        for (const auto& v : ti.vertices) lhs += 2 - 2 * v.genus - v.boundary;
        for (const auto& v : ti.vertices) half_edges += v.boundary;
        CHECK(lhs == 2 - 2 * sd.surface.genus);
        CHECK(half_edges == 2 * static_cast<int64_t>(ti.edges.size()));
    }
}

TEST_CASE("full-twist invariance of the type, norm <= 6 exhaustive") {
    auto sd = build_surface(2);
    for (const auto& c : genus2_ball(sd, 6)) {
        auto base = topological_type(sd, decode(sd, c)).key();
        for (int cuff = 0; cuff < 3; ++cuff)
            for (int64_t n : {-2, -1, 1, 2}) {
                auto tw = twist_about_cuff(c, cuff, n);
                CHECK(topological_type(sd, decode(sd, tw)).key() == base);
            }
    }
}

TEST_CASE("canonicalization is permutation invariant") {
    std::vector<TypeVertex> vs{{1, 2}, {0, 3}, {1, 1}};
    std::vector<TypeEdge> es{{0, 1, 2}, {1, 2, 1}, {1, 1, 4}};
    auto base = canonicalize_graph(vs, es);
    // relabel by the cycle 0->1->2->0
    std::vector<TypeVertex> vs2{vs[2], vs[0], vs[1]};
    std::vector<TypeEdge> es2;
    auto rl = [](int v) { return (v + 1) % 3; };
    for (auto e : es) {
        int u = rl(e.u), v = rl(e.v);
        es2.push_back({std::min(u, v), std::max(u, v), e.weight});
    }
    auto moved = canonicalize_graph(vs2, es2);
    CHECK(base.key() == moved.key());
}
