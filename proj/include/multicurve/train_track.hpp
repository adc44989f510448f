#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "multicurve/dt_coords.hpp"
#include "multicurve/rational.hpp"
#include "multicurve/surface.hpp"

namespace mcv {

struct BranchEnd {
    int branch = -1;
    int end = 0;
    bool operator==(const BranchEnd&) const = default;
};

// Trivalent switch: two incoming branch ends (e1 on the right of the common
// tangent, e2 on the left) and one outgoing end.
struct Switch {
    BranchEnd e1, e2, out;
};

struct TrainTrack {
    int num_branches = 0;
    std::vector<Switch> switches;
    std::vector<int> free_loops;     // closed branches that meet no switch
    std::vector<int> polygon_sides;  // type vector a of the complement
    bool filling = false;
    int genus = 0;

    void check_well_formed() const;  // every branch end attached exactly once
    bool is_maximal() const { return !switches.empty(); }
    bool orientable() const;
    // 4g-4+2k with k = number of complementary polygons
    bool type_vector_consistent() const;
};

struct WeightVector {
    std::vector<Rational> w;
};

// Exact switch-condition check: w(e1) + w(e2) == w(out) at every switch.
// Throws std::invalid_argument on an index mismatch.
bool validate_switch_conditions(const TrainTrack& tt, const WeightVector& wv);

struct DimResult {
    int dim = 0;
    bool non_filling_warning = false;
};
// Rank of the switch-condition solution space W(tau), by exact elimination.
DimResult weight_space_dim(const TrainTrack& tt);

// Thurston form: 1/2 sum over switches of u(e1)v(e2) - u(e2)v(e1).
// Requires a maximal track and switch-condition solutions.
Rational thurston_form(const TrainTrack& tt, const WeightVector& u, const WeightVector& v);

// Exact basis of W(tau) and the rank of the Gram matrix of the Thurston
// form on it.
std::vector<WeightVector> weight_space_basis(const TrainTrack& tt);
int thurston_gram_rank(const TrainTrack& tt);

// Standard track realizing one twist-sign orthant of the Dehn-Thurston
// chart. Per cuff a spiral gadget (two plugs, a core arc alpha and a loop
// arc beta); per pants a triangle of seam branches. The linear map sends
// (m, |t|) to branch weights; alpha carries m_i + |t_i| so the coordinate
// norm is the sum of the alpha weights.
struct StandardTrack {
    TrainTrack track;
    std::vector<int> orthant;                 // +1 / -1 per cuff
    std::vector<int> plug0, plug1, alpha, beta;
    std::vector<std::array<int, 3>> seam;     // per pants, seam[k] joins slots != k
    std::vector<std::vector<Rational>> map;   // num_branches x (2 * num_cuffs)

    WeightVector apply(const DTCoordinates& c) const;  // throws off-orthant
    WeightVector positive_witness(const SurfaceData& sd) const;
};

StandardTrack standard_track(const SurfaceData& sd, const std::vector<int>& orthant_signs);

// Recurrence certificate: strictly positive weights satisfying the switch
// conditions.
bool is_positive_certificate(const TrainTrack& tt, const WeightVector& wv);

std::string track_json(const TrainTrack& tt);
WeightVector parse_weight_list(const std::string& text, int num_branches);

}  // namespace mcv
