#include <algorithm>
#include <map>
#include <stdexcept>

#include "multicurve/multicurve.hpp"

namespace mcv {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
int64_t mod_pos(int64_t a, int64_t b) { return a - b * floor_div(a, b); }

}  // namespace

PantsLayout PantsLayout::build(int64_t ma, int64_t mb, int64_t mc) {
    PantsLayout L;
    L.m = {ma, mb, mc};
    L.x = solve_arc_counts(ma, mb, mc);
    return L;
}

int64_t PantsLayout::arcs_total() const {
    return x[0][1] + x[0][2] + x[1][2] + x[0][0] + x[1][1] + x[2][2];
}

ArcEnd PantsLayout::end_at(int slot, int64_t p) const {
    const int prev = (slot + 2) % 3, next = (slot + 1) % 3;
    const int64_t ss = x[slot][slot], fp = x[slot][prev], fn = x[slot][next];
    if (p < 0 || p >= m[slot]) throw std::logic_error("end_at: position out of range");
    if (p < ss) return {{3 + slot, ss - 1 - p}, 3};
    if (p < ss + fp) {
        // fan {slot, prev}: opposite kind = next; this is the non-defining end
        return {{fan_kind(slot, prev), fp - 1 - (p - ss)}, 1};
    }
    if (p < 2 * ss + fp) return {{3 + slot, p - ss - fp}, 2};
    return {{fan_kind(slot, next), p - 2 * ss - fp}, 0};
}

int64_t PantsLayout::position_of(int slot, const ArcEnd& e) const {
    const int prev = (slot + 2) % 3, next = (slot + 1) % 3;
    const int64_t ss = x[slot][slot], fp = x[slot][prev];
    if (e.arc.kind >= 3) {
        if (e.arc.kind - 3 != slot) throw std::logic_error("position_of: wrong slot");
        if (e.role == 3) return ss - 1 - e.arc.instance;
        return ss + fp + e.arc.instance;
    }
    if (e.role == 0) {
        if (fan_defining_slot(e.arc.kind) != slot) throw std::logic_error("position_of: wrong slot");
        return 2 * ss + fp + e.arc.instance;  // fan to next(slot)
    }
    if (fan_other_slot(e.arc.kind) != slot) throw std::logic_error("position_of: wrong slot");
    return ss + (x[slot][prev] - 1 - e.arc.instance);
}

ArcEnd PantsLayout::other_end(const ArcEnd& e) const {
    ArcEnd o = e;
    if (e.arc.kind >= 3)
        o.role = (e.role == 2) ? 3 : 2;
    else
        o.role = 1 - e.role;
    return o;
}

int PantsLayout::slot_of_end(const ArcEnd& e) const {
    if (e.arc.kind >= 3) return e.arc.kind - 3;
    return e.role == 0 ? fan_defining_slot(e.arc.kind) : fan_other_slot(e.arc.kind);
}

std::vector<int64_t> MultiCurve::remeasure(int num_cuffs) const {
    std::vector<int64_t> out(num_cuffs, 0);
    for (const auto& comp : components)
        for (int i = 0; i < num_cuffs; ++i) out[i] += comp.weight * comp.crossings[i];
    return out;
}

namespace {

// symbol sequence used to recognize parallel copies: per leg, the triple
// (pants, slot_in, slot_out) plus the ss entry end
struct Itinerary {
    std::vector<std::array<int, 4>> syms;

    static Itinerary of(const std::vector<Leg>& legs) {
        Itinerary it;
        for (const auto& l : legs)
            it.syms.push_back({l.pants, l.slot_in, l.slot_out, l.entered_at_end0 ? 1 : 0});
        return it;
    }
    static std::vector<std::array<int, 4>> min_rotation(std::vector<std::array<int, 4>> v) {
        auto best = v;
        for (size_t r = 1; r < v.size(); ++r) {
            std::rotate(v.begin(), v.begin() + 1, v.end());
            if (v < best) best = v;
        }
        return best;
    }
    std::vector<std::array<int, 4>> canonical() const {
        auto fwd = min_rotation(syms);
        // reversed traversal: legs in reverse order with slots swapped
        std::vector<std::array<int, 4>> rev;
        for (auto itr = syms.rbegin(); itr != syms.rend(); ++itr)
            rev.push_back({(*itr)[0], (*itr)[2], (*itr)[1], 1 - (*itr)[3]});
        auto bwd = min_rotation(rev);
        return std::min(fwd, bwd);
    }
};

}  // namespace

MultiCurve decode(const SurfaceData& sd, const DTCoordinates& c) {
    Validity v = validate(sd, c);
    if (!v.ok) throw std::domain_error("decode: invalid coordinates: " + v.reason);

    const auto& pd = sd.pants;
    const int ncuffs = pd.num_cuffs();
    MultiCurve mc;
    mc.coords = c;

    std::vector<PantsLayout> layouts;
    layouts.reserve(pd.num_pants());
    for (int p = 0; p < pd.num_pants(); ++p)
        layouts.push_back(PantsLayout::build(c.m[pd.slot_cuff[p][0]], c.m[pd.slot_cuff[p][1]],
                                             c.m[pd.slot_cuff[p][2]]));

    // cuff components
    for (int i = 0; i < ncuffs; ++i)
        if (c.m[i] == 0 && c.t[i] > 0) {
            Component comp;
            comp.is_cuff = true;
            comp.cuff = i;
            comp.weight = c.t[i];
            comp.crossings.assign(ncuffs, 0);
            mc.components.push_back(comp);
        }

    // trace strand orbits through the arcs
    std::vector<std::map<std::pair<int, int64_t>, bool>> used(pd.num_pants());
    auto arc_key = [](const ArcRef& a) { return std::make_pair(a.kind, a.instance); };

    std::map<std::vector<std::array<int, 4>>, size_t> seen;  // canonical itinerary -> component index
    for (int p0 = 0; p0 < pd.num_pants(); ++p0) {
        const auto& L0 = layouts[p0];
        for (int slot = 0; slot < 3; ++slot) {
            for (int64_t pos = 0; pos < L0.m[slot]; ++pos) {
                ArcEnd start = L0.end_at(slot, pos);
                if (used[p0].count(arc_key(start.arc))) continue;

                std::vector<Leg> legs;
                std::vector<int64_t> crossings(ncuffs, 0);
                int pants = p0;
                ArcEnd enter = start;
                while (true) {
                    const auto& L = layouts[pants];
                    used[pants][arc_key(enter.arc)] = true;
                    ArcEnd exit = L.other_end(enter);
                    Leg leg;
                    leg.pants = pants;
                    leg.slot_in = L.slot_of_end(enter);
                    leg.pos_in = L.position_of(leg.slot_in, enter);
                    leg.slot_out = L.slot_of_end(exit);
                    leg.pos_out = L.position_of(leg.slot_out, exit);
                    leg.arc = enter.arc;
                    leg.entered_at_end0 = (enter.role == 0 || enter.role == 2);

                    SlotRef out_ref{pants, leg.slot_out};
                    leg.cuff = pd.slot_cuff[pants][leg.slot_out];
                    leg.side_out = pd.side_of(out_ref);
                    const int64_t mi = c.m[leg.cuff], ti = c.t[leg.cuff];
                    leg.winding = floor_div(ti - 1 - leg.pos_out, mi);
                    crossings[leg.cuff] += 1;
                    legs.push_back(leg);

                    int64_t q = mod_pos(ti - 1 - leg.pos_out, mi);
                    SlotRef in_ref = pd.partner(out_ref);
                    pants = in_ref.pants;
                    enter = layouts[pants].end_at(in_ref.slot, q);
                    if (pants == p0 && enter.arc == start.arc &&
                        (enter.role == start.role)) break;
                }

                auto key = Itinerary::of(legs).canonical();
                auto it = seen.find(key);
                if (it != seen.end()) {
                    auto& comp = mc.components[it->second];
                    comp.weight += 1;
                    for (const auto& l : legs) comp.duplicate_arcs.emplace_back(l.pants, l.arc);
                } else {
                    Component comp;
                    comp.weight = 1;
                    comp.legs = std::move(legs);
                    comp.crossings = std::move(crossings);
                    seen.emplace(key, mc.components.size());
                    mc.components.push_back(std::move(comp));
                }
            }
        }
    }

    // post-contract: re-measuring reproduces m
    auto rm = mc.remeasure(ncuffs);
    for (int i = 0; i < ncuffs; ++i)
        if (rm[i] != c.m[i]) throw std::logic_error("decode: re-measured crossings disagree with m");
    return mc;
}

}  // namespace mcv
