#include <random>
#include <stdexcept>

#include "doctest.h"
#include "multicurve/train_track.hpp"

using namespace mcv;

namespace {

// one trivalent switch with three dangling branches, enough for the local
// form and switch-condition examples
TrainTrack single_switch_fragment() {
    TrainTrack tt;
    tt.num_branches = 3;  // 0 = e1, 1 = e2, 2 = out
    tt.switches.push_back({{0, 0}, {1, 0}, {2, 0}});
    return tt;
}

WeightVector wv(std::initializer_list<int> xs) {
    WeightVector v;
    for (int x : xs) v.w.emplace_back(x);
    return v;
}

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-20, 20), den(1, 12);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("switch condition examples") {
    auto tt = single_switch_fragment();
    CHECK(validate_switch_conditions(tt, wv({1, 0, 1})));
    CHECK_FALSE(validate_switch_conditions(tt, wv({1, 1, 1})));
    CHECK(validate_switch_conditions(tt, wv({0, 0, 0})));
    CHECK_THROWS_AS(validate_switch_conditions(tt, wv({1, 0})), std::invalid_argument);
}

TEST_CASE("thurston form: local evaluation and antisymmetry") {
    auto tt = single_switch_fragment();
    CHECK(thurston_form(tt, wv({1, 0, 1}), wv({0, 1, 1})) == Rational(1, 2));
    std::mt19937_64 rng(7);
    for (int it = 0; it < 200; ++it) {
        WeightVector u, v;
        Rational u1 = random_rational(rng), u2 = random_rational(rng);
        Rational v1 = random_rational(rng), v2 = random_rational(rng);
        u.w = {u1, u2, u1 + u2};
        v.w = {v1, v2, v1 + v2};
        CHECK(thurston_form(tt, u, u) == 0);
        CHECK(thurston_form(tt, u, v) + thurston_form(tt, v, u) == 0);
    }
}

TEST_CASE("thurston form rejects non-maximal tracks") {
    TrainTrack loops;
    loops.num_branches = 2;
    loops.free_loops = {0, 1};
    CHECK_THROWS_AS(thurston_form(loops, wv({1, 1}), wv({1, 1})), std::domain_error);
}

TEST_CASE("weight space dimension: disjoint loops") {
    TrainTrack loops;
    loops.num_branches = 4;
    loops.free_loops = {0, 1, 2, 3};
    auto d = weight_space_dim(loops);
    CHECK(d.dim == 4);
    CHECK(d.non_filling_warning);  // not filling, flagged
}

TEST_CASE("standard track: dimension matches the lemma for g in 2..4") {
    for (int g = 2; g <= 4; ++g) {
        auto sd = build_surface(g);
        std::vector<int> orthant(sd.surface.num_cuffs(), 1);
        auto st = standard_track(sd, orthant);
        st.track.check_well_formed();
        CHECK(st.track.num_branches == 18 * g - 18);
        CHECK(static_cast<int>(st.track.switches.size()) == 12 * g - 12);
        auto d = weight_space_dim(st.track);
        CHECK_FALSE(d.non_filling_warning);
        CHECK(d.dim == 6 * g - 6);
        // the lemma: non-orientable maximal filling track with k = 4g-4 has
        // dim = 2g + k - 2
        CHECK_FALSE(st.track.orientable());
        CHECK(st.track.type_vector_consistent());
        CHECK(static_cast<int>(st.track.polygon_sides.size()) == 4 * g - 4);
        CHECK(d.dim == 2 * g + (4 * g - 4) - 2);
    }
}

TEST_CASE("standard track: images satisfy switch conditions, norm <= 8 exhaustive") {
    auto sd = build_surface(2);
    const int64_t L = 8;
    for (int s1 : {1, -1})
        for (int s2 : {1, -1})
            for (int s3 : {1, -1}) {
                auto st = standard_track(sd, {s1, s2, s3});
                for (int64_t m1 = 0; m1 <= L; ++m1)
                    for (int64_t m2 = 0; m1 + m2 <= L; ++m2)
                        for (int64_t m3 = 0; m1 + m2 + m3 <= L; ++m3) {
                            if ((m1 + m2 + m3) % 2) continue;
                            int64_t rest = L - m1 - m2 - m3;
                            for (int64_t a1 = 0; a1 <= rest; ++a1)
                                for (int64_t a2 = 0; a1 + a2 <= rest; ++a2)
                                    for (int64_t a3 = 0; a1 + a2 + a3 <= rest; ++a3) {
                                        DTCoordinates c{{m1, m2, m3},
                                                        {s1 * a1, s2 * a2, s3 * a3}};
                                        if ((m1 == 0 && c.t[0] < 0) || (m2 == 0 && c.t[1] < 0) ||
                                            (m3 == 0 && c.t[2] < 0))
                                            continue;
                                        auto w = st.apply(c);
                                        CHECK(validate_switch_conditions(st.track, w));
                                    }
                        }
            }
}

TEST_CASE("standard track: norm is the sum of the alpha weights") {
    auto sd = build_surface(2);
    auto st = standard_track(sd, {1, -1, 1});
    DTCoordinates c{{2, 4, 0}, {3, -5, 2}};
    auto w = st.apply(c);
    Rational alpha_sum = 0;
    for (int i = 0; i < 3; ++i) alpha_sum += w.w[st.alpha[i]];
    CHECK(alpha_sum == norm(c));
}

TEST_CASE("standard track: cuff curve image is supported on its own gadget") {
    auto sd = build_surface(2);
    auto st = standard_track(sd, {1, 1, 1});
    auto w = st.apply({{0, 0, 0}, {1, 0, 0}});
    for (int b = 0; b < st.track.num_branches; ++b) {
        bool on_gadget = (b == st.alpha[0] || b == st.beta[0]);
        CHECK((w.w[b] != 0) == on_gadget);
    }
    CHECK(w.w[st.alpha[0]] == 1);
    CHECK(w.w[st.beta[0]] == 1);
}

TEST_CASE("standard track map rejects off-orthant points") {
    auto sd = build_surface(2);
    auto st = standard_track(sd, {1, 1, 1});
    CHECK_THROWS_AS(st.apply({{2, 0, 0}, {-1, 0, 0}}), std::domain_error);
}

TEST_CASE("adjacent orthants agree on their common face") {
    auto sd = build_surface(2);
    auto plus = standard_track(sd, {1, 1, 1});
    auto flip = standard_track(sd, {-1, 1, 1});
    for (int64_t m1 : {0, 2})
        for (int64_t t2 : {0, 1, 3}) {
            DTCoordinates c{{m1, 1, 1}, {0, t2, 0}};  // t1 = 0: on the shared face
            auto a = plus.apply(c), b = flip.apply(c);
            CHECK(a.w == b.w);
        }
}

TEST_CASE("thurston form is bilinear on the standard track weight space") {
    auto sd = build_surface(2);
    auto st = standard_track(sd, {1, 1, 1});
    auto basis = weight_space_basis(st.track);
    REQUIRE(static_cast<int>(basis.size()) == 6);
    std::mt19937_64 rng(11);
    auto random_w = [&]() {
        WeightVector v;
        v.w.assign(st.track.num_branches, 0);
        for (const auto& b : basis) {
            Rational coef = random_rational(rng);
            for (int i = 0; i < st.track.num_branches; ++i) v.w[i] += coef * b.w[i];
        }
        return v;
    };
    for (int it = 0; it < 50; ++it) {
        auto u = random_w(), v = random_w(), z = random_w();
        Rational a = random_rational(rng), b = random_rational(rng);
        WeightVector lin;
        lin.w.resize(st.track.num_branches);
        for (int i = 0; i < st.track.num_branches; ++i) lin.w[i] = a * u.w[i] + b * v.w[i];
        CHECK(thurston_form(st.track, lin, z) ==
              a * thurston_form(st.track, u, z) + b * thurston_form(st.track, v, z));
        CHECK(thurston_form(st.track, u, v) + thurston_form(st.track, v, u) == 0);
    }
}

TEST_CASE("thurston form is nondegenerate on standard tracks, g = 2, 3") {
    for (int g : {2, 3}) {
        auto sd = build_surface(g);
        std::vector<int> orthant(sd.surface.num_cuffs(), 1);
        auto st = standard_track(sd, orthant);
        CHECK(thurston_gram_rank(st.track) == 6 * g - 6);
    }
}

TEST_CASE("standard tracks carry a strictly positive weight system") {
    for (int g : {2, 3}) {
        auto sd = build_surface(g);
        std::vector<int> orthant(sd.surface.num_cuffs(), 1);
        orthant[0] = -1;
        auto st = standard_track(sd, orthant);
        CHECK(is_positive_certificate(st.track, st.positive_witness(sd)));
    }
}

TEST_CASE("track json") {
    auto sd = build_surface(2);
    auto st = standard_track(sd, {1, 1, 1});
    auto j = track_json(st.track);
    CHECK(j.find("\"num_branches\": 18") != std::string::npos);
    CHECK(j.find("\"orientable\": false") != std::string::npos);
}

TEST_CASE("weight list parser accepts rationals") {
    auto w = parse_weight_list("1,2/3,-4", 3);
    CHECK(w.w[0] == 1);
    CHECK(w.w[1] == Rational(2, 3));
    CHECK(w.w[2] == -4);
    CHECK_THROWS_AS(parse_weight_list("1,2", 3), std::invalid_argument);
}
