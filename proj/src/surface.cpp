#include "multicurve/surface.hpp"

#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace mcv {

namespace {

// union-find over a flat index space
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
    int count() {
        int c = 0;
        for (int i = 0; i < static_cast<int>(parent.size()); ++i)
            if (find(i) == i) ++c;
        return c;
    }
};

}  // namespace

SurfaceData build_surface(int genus) {
    if (genus < 2) throw std::invalid_argument("build_surface: genus must be >= 2");

    SurfaceData sd;
    sd.surface.genus = genus;
    PantsDecomposition& pd = sd.pants;
    pd.genus = genus;

    const int num_pants = 2 * genus - 2;
    pd.slot_cuff.assign(num_pants, {-1, -1, -1});

    std::vector<int> next_slot(num_pants, 0);
    auto take_slot = [&](int pants) -> SlotRef {
        return SlotRef{pants, next_slot[pants]++};
    };
    auto add_cuff = [&](SlotRef a, SlotRef b) {
        int idx = pd.num_cuffs();
        pd.cuff_sides.push_back({a, b});
        pd.cuff_reversed.push_back(false);
        pd.slot_cuff[a.pants][a.slot] = idx;
        pd.slot_cuff[b.pants][b.slot] = idx;
    };

    if (genus == 2) {
        // theta graph: the two pants share all three cuffs
        for (int i = 0; i < 3; ++i) add_cuff(take_slot(0), take_slot(1));
    } else {
        add_cuff(take_slot(0), take_slot(0));  // self-glued cuff at the head
        for (int i = 1; i < num_pants; ++i) {
            int n_edges = (i % 2 == 1) ? 1 : 2;
            for (int e = 0; e < n_edges; ++e) add_cuff(take_slot(i - 1), take_slot(i));
        }
        add_cuff(take_slot(num_pants - 1), take_slot(num_pants - 1));
    }

    if (pd.num_cuffs() != sd.surface.num_cuffs())
        throw std::logic_error("build_surface: cuff count mismatch");
    for (int p = 0; p < num_pants; ++p)
        for (int s = 0; s < 3; ++s) {
            if (pd.slot_cuff[p][s] < 0) throw std::logic_error("build_surface: unfilled slot");
            SlotRef me{p, s};
            if (pd.partner(me) == me) throw std::logic_error("build_surface: gluing has a fixed point");
        }
    return sd;
}

// Two right-angled hexagons per pants: each slot circle carries 2 vertices
// and 2 arc edges, plus 3 seam edges and 2 hexagon faces per pants. Gluing
// identifies slot cells pairwise.
int PantsDecomposition::euler_characteristic_cells() const {
    const int P = num_pants();
    // per pants: vertices 0..5 = (slot, k), k in {0,1}
    UnionFind verts(P * 6);
    UnionFind edges(P * 6);  // arc edges only; seams are never identified
    for (int c = 0; c < num_cuffs(); ++c) {
        SlotRef a = cuff_sides[c][0], b = cuff_sides[c][1];
        for (int k = 0; k < 2; ++k) {
            verts.unite(a.pants * 6 + a.slot * 2 + k, b.pants * 6 + b.slot * 2 + k);
            edges.unite(a.pants * 6 + a.slot * 2 + k, b.pants * 6 + b.slot * 2 + k);
        }
    }
    int V = verts.count();
    int E = edges.count() + P * 3;  // identified arcs + seams
    int F = P * 2;
    return V - E + F;
}

std::string surface_info_json(const SurfaceData& sd) {
    nlohmann::json j;
    j["genus"] = sd.surface.genus;
    j["h"] = sd.surface.h();
    j["num_cuffs"] = sd.surface.num_cuffs();
    j["num_pants"] = sd.surface.num_pants();
    j["euler_characteristic"] = sd.surface.euler_characteristic();

    nlohmann::json pants = nlohmann::json::array();
    for (int p = 0; p < sd.pants.num_pants(); ++p) {
        nlohmann::json jp;
        jp["index"] = p;
        jp["slot_cuffs"] = sd.pants.slot_cuff[p];
        pants.push_back(jp);
    }
    j["pants"] = pants;

    nlohmann::json cuffs = nlohmann::json::array();
    for (int c = 0; c < sd.pants.num_cuffs(); ++c) {
        nlohmann::json jc;
        jc["index"] = c;
        jc["sides"] = {
            {{"pants", sd.pants.cuff_sides[c][0].pants}, {"slot", sd.pants.cuff_sides[c][0].slot}},
            {{"pants", sd.pants.cuff_sides[c][1].pants}, {"slot", sd.pants.cuff_sides[c][1].slot}},
        };
        jc["self_glued"] = sd.pants.is_self_glued(c);
        jc["reversed"] = static_cast<bool>(sd.pants.cuff_reversed[c]);
        cuffs.push_back(jc);
    }
    j["cuffs"] = cuffs;
    return j.dump(2);
}

}  // namespace mcv
