#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace mcv {

// Closed orientable surface of genus >= 2 with the derived counting constants.
struct Surface {
    int genus = 2;

    int h() const { return 6 * genus - 6; }
    int num_cuffs() const { return 3 * genus - 3; }
    int num_pants() const { return 2 * genus - 2; }
    int euler_characteristic() const { return 2 - 2 * genus; }
};

// A boundary slot of a pants piece. Each pants has slots 0,1,2.
struct SlotRef {
    int pants = -1;
    int slot = -1;
    bool operator==(const SlotRef&) const = default;
};

// Canonical pants decomposition: a fixed-point-free involution on
// (pants, slot) pairs whose orbits are the cuffs.
//
// Layout (deterministic per genus):
//   genus 2: two pants sharing all three cuffs, cuff i glues (0,i)-(1,i).
//   genus g>=3: linear chain. Pants 0 carries a self-glued cuff on slots
//   0,1; consecutive pants are joined by one cuff (odd steps) or two cuffs
//   (even steps); the last pants carries a self-glued cuff on its two
//   remaining slots.
struct PantsDecomposition {
    int genus = 0;
    // cuff index for each (pants, slot); slot_cuff[p][s]
    std::vector<std::array<int, 3>> slot_cuff;
    // the two sides of each cuff in construction order; sides[0] is the
    // reference side used by all twist conventions
    std::vector<std::array<SlotRef, 2>> cuff_sides;
    // orientation flag per cuff (fixed false by the constructor; the strand
    // matching convention is reversal, see decode)
    std::vector<bool> cuff_reversed;

    int num_pants() const { return static_cast<int>(slot_cuff.size()); }
    int num_cuffs() const { return static_cast<int>(cuff_sides.size()); }

    SlotRef partner(SlotRef s) const {
        const auto& c = cuff_sides[slot_cuff[s.pants][s.slot]];
        return (c[0] == s) ? c[1] : c[0];
    }
    bool is_self_glued(int cuff) const {
        return cuff_sides[cuff][0].pants == cuff_sides[cuff][1].pants;
    }
    // 0 if s is the reference side of its cuff, 1 otherwise
    int side_of(SlotRef s) const {
        return (cuff_sides[slot_cuff[s.pants][s.slot]][0] == s) ? 0 : 1;
    }

    // V - E + F of the induced two-hexagon cell structure; must equal 2-2g.
    int euler_characteristic_cells() const;
};

struct SurfaceData {
    Surface surface;
    PantsDecomposition pants;
};

// Builds the canonical decomposition for the given genus. Throws
// std::invalid_argument for genus < 2.
SurfaceData build_surface(int genus);

// JSON description of the decomposition (pants, slots, gluing, cuffs).
std::string surface_info_json(const SurfaceData& sd);

}  // namespace mcv
