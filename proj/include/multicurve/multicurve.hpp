#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "multicurve/dt_coords.hpp"
#include "multicurve/surface.hpp"

namespace mcv {

// Arc inside one pants. Kinds 0,1,2: the fan of arcs joining the two slots
// other than `kind`; kinds 3,4,5: same-slot arcs at slot kind-3.
// Fan-opposite-k has its defining end at slot (k+1)%3, other end at (k+2)%3;
// same-slot arcs have a top and a bottom end.
struct ArcRef {
    int kind = 0;
    int64_t instance = 0;
    bool operator==(const ArcRef&) const = default;
};

inline int fan_kind(int slot_a, int slot_b) { return 3 - slot_a - slot_b; }
inline int fan_defining_slot(int kind) { return (kind + 1) % 3; }
inline int fan_other_slot(int kind) { return (kind + 2) % 3; }

// Endpoint of an arc on a slot circle. role: 0 = fan defining end,
// 1 = fan other end, 2 = same-slot top, 3 = same-slot bottom.
struct ArcEnd {
    ArcRef arc;
    int role = 0;
};

// Position layout of arc endpoints around the three slot circles of one
// pants. Order around each circle s (in the slot's own direction):
//   [same-slot bottoms][fan to prev(s)][same-slot tops][fan to next(s)]
struct PantsLayout {
    ArcCounts x{};
    std::array<int64_t, 3> m{};

    static PantsLayout build(int64_t ma, int64_t mb, int64_t mc);
    int64_t arcs_total() const;
    // endpoint at circle position p of slot s
    ArcEnd end_at(int slot, int64_t p) const;
    // circle position of the given endpoint; `role` selects the end
    int64_t position_of(int slot, const ArcEnd& e) const;
    // other endpoint of an arc, given one end
    ArcEnd other_end(const ArcEnd& e) const;
    int slot_of_end(const ArcEnd& e) const;
};

// One pants traversal of a traced component, followed by the cuff crossing
// that leads out of it.
struct Leg {
    int pants = 0;
    int slot_in = 0;
    int64_t pos_in = 0;
    int slot_out = 0;
    int64_t pos_out = 0;
    ArcRef arc;
    bool entered_at_end0 = true;  // fan: entered at defining end; ss: at top
    // crossing out of slot_out:
    int cuff = 0;
    int side_out = 0;
    int64_t winding = 0;  // floor((t-1-pos_out)/m) at the crossing
};

struct Component {
    bool is_cuff = false;
    int cuff = -1;
    int64_t weight = 1;
    std::vector<Leg> legs;            // one representative copy (empty for cuff components)
    std::vector<int64_t> crossings;   // per-cuff crossings of one copy
    // arcs of the weight-1 copies beyond the representative; the complement
    // is computed with these erased
    std::vector<std::pair<int, ArcRef>> duplicate_arcs;
};

struct MultiCurve {
    DTCoordinates coords;
    std::vector<Component> components;

    bool empty() const { return components.empty(); }
    // sum over components of weight * per-copy crossings; must reproduce m
    std::vector<int64_t> remeasure(int num_cuffs) const;
};

// Decodes valid coordinates into disjoint weighted components. Throws
// std::domain_error when validate() fails.
MultiCurve decode(const SurfaceData& sd, const DTCoordinates& c);

}  // namespace mcv
