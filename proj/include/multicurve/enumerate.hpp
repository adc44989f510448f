#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "multicurve/dt_coords.hpp"
#include "multicurve/rational.hpp"
#include "multicurve/surface.hpp"

namespace mcv {

// Cone over a cube in the unit-norm sphere, restricted to one twist-sign
// orthant. Box intervals apply to the normalized coordinates
// (m_1..m_n, |t_1|..|t_n|) / norm and are half-open [lo, hi), with hi = 1
// treated as closed, so that adjacent sectors are honestly disjoint.
struct Sector {
    std::vector<int> orthant;       // +1 / -1 per cuff; empty = all orthants
    std::vector<Rational> box_lo;   // 2n entries; empty = whole sphere
    std::vector<Rational> box_hi;

    bool contains(const DTCoordinates& c, int64_t nrm) const;
    bool is_nonempty() const;  // cube meets the simplex sum u_i = 1
    std::string describe() const;
    static Sector full() { return {}; }
};

// Visits every valid nonzero coordinate vector with norm <= L (and inside
// the sector when given) exactly once, in a fixed deterministic order.
void enumerate_points(const SurfaceData& sd, int64_t L, const Sector* sector,
                      const std::function<void(const DTCoordinates&)>& visit);

int64_t count_points(const SurfaceData& sd, int64_t L, const Sector* sector);

struct CountTable {
    std::vector<int64_t> grid;
    // type key -> cumulative counts per grid entry; sorted map so output
    // order is canonical
    std::map<std::string, std::vector<int64_t>> rows;
    int genus = 0;
    std::string norm_def = "sum(m)+sum(|t|)";
    std::string sector_desc = "full";
    std::string run_id;
    int workers = 1;
    double wall_seconds = 0.0;

    int64_t total_at(size_t gi) const;
    std::string to_csv() const;  // header L,type_key,count
};

// Counts enumerated multicurves per topological type at every grid value.
// Deterministic for any worker count.
CountTable count_by_type(const SurfaceData& sd, const std::vector<int64_t>& grid,
                         const Sector* sector, int workers);

// Restriction of count_by_type to one type.
CountTable count_in_sector(const SurfaceData& sd, const std::string& type_key,
                           const Sector& sector, const std::vector<int64_t>& grid, int workers);

// Exact leading coefficient of the norm-ball lattice count:
// vol{m >= 0, t: sum m + sum |t| <= 1} times the parity-sublattice density,
// i.e. (2^n / (2n)!) * 2^-r with n = 3g-3 and r the F2-rank of the
// per-pants parity conditions.
Rational leading_coefficient(const SurfaceData& sd);

// F2-rank of the (2g-2) x (3g-3) matrix of per-pants parity conditions;
// self-glued cuffs contribute 0 mod 2.
int parity_rank(const SurfaceData& sd);

}  // namespace mcv
