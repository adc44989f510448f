#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "multicurve/surface.hpp"

namespace mcv {

// Integral Dehn-Thurston coordinates: intersection numbers m_i >= 0 and
// integer twists t_i, one pair per cuff. Convention: m_i = 0 forces
// t_i >= 0 (t_i parallel copies of cuff i).
struct DTCoordinates {
    std::vector<int64_t> m;
    std::vector<int64_t> t;

    bool operator==(const DTCoordinates&) const = default;
    bool is_zero() const {
        for (auto v : m)
            if (v) return false;
        for (auto v : t)
            if (v) return false;
        return true;
    }
};

struct Validity {
    bool ok = true;
    std::string reason;
};

// Textual format "m1,...,mk;t1,...,tk". Throws std::invalid_argument on
// malformed input.
DTCoordinates parse_coords(const std::string& text, int num_cuffs);
std::string format_coords(const DTCoordinates& c);

// All three coordinate invariants: nonnegative m, per-pants parity, and the
// twist convention on uncrossed cuffs. Dimension mismatch is reported as a
// failure with its own reason.
Validity validate(const SurfaceData& sd, const DTCoordinates& c);

// Global PL norm: sum m_i + sum |t_i|.
int64_t norm(const DTCoordinates& c);

// t_i <- t_i + n*m_i (the Dehn twist along cuff i acting on coordinates).
DTCoordinates twist_about_cuff(const DTCoordinates& c, int cuff, int64_t n);

// Componentwise sum. Requires both valid and in the same twist-sign
// orthant (t_i(x)*t_i(y) >= 0 for all i); throws std::domain_error
// otherwise.
DTCoordinates coordinate_add(const SurfaceData& sd, const DTCoordinates& x, const DTCoordinates& y);

DTCoordinates scale(const DTCoordinates& c, int64_t k);

// Arc-type counts of one pants piece: x[i][j] = number of arcs joining
// slots i and j (i != j), x[i][i] = number of same-slot arcs at slot i.
using ArcCounts = std::array<std::array<int64_t, 3>, 3>;

// Unique nonnegative disjoint solution for crossings (ma, mb, mc); requires
// even sum. Triangle case: x_ab = (ma+mb-mc)/2 cyclically; dominant case
// m_a > m_b + m_c: x_aa = (ma-mb-mc)/2, x_ab = mb, x_ac = mc.
ArcCounts solve_arc_counts(int64_t ma, int64_t mb, int64_t mc);

}  // namespace mcv
