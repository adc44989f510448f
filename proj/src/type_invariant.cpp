#include "multicurve/type_invariant.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mcv {

namespace {

int64_t floor_div(int64_t a, int64_t b) {
    int64_t q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}
int64_t mod_pos(int64_t a, int64_t b) { return a - b * floor_div(a, b); }

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Pants-local complement structure: the arc system cuts the pants into
// regions. Regions are identified with the face circuits of the graph
// (slot circles with strand points + arcs); the circuit walking each circle
// backwards is the "cap" (the neighbouring pants side) and is discarded.
// A slot with no crossings contributes a bare circle assigned to the region
// it sits in.
struct PantsRegions {
    int num_regions = 0;
    std::vector<int> chi;
    std::map<std::pair<int, int64_t>, int> interval_region;          // (slot, idx) -> region
    std::map<std::tuple<int, int64_t, int>, int> arc_side_region;    // (kind, instance, dir) -> region
    std::array<int, 3> bare_region = {-1, -1, -1};
};

// Directed edges of the pants-local graph:
//   interval (slot, idx, dir): fwd runs from strand point idx to idx+1
//   arc (kind, instance, dir): dir 0 runs away from the primary end
//     (fan: defining end; same-slot: top)
struct HalfEdge {
    int type;  // 0 interval, 1 arc
    int a;     // slot or kind
    int64_t b; // idx or instance
    int dir;
    bool operator==(const HalfEdge&) const = default;
    auto operator<=>(const HalfEdge&) const = default;
};

PantsRegions pants_regions(const PantsLayout& L) {
    PantsRegions out;
    if (L.arcs_total() == 0) {
        out.num_regions = 1;
        out.chi = {-1};
        out.bare_region = {0, 0, 0};
        return out;
    }

    auto twin = [](HalfEdge h) {
        h.dir ^= 1;
        return h;
    };
    // vertex at the head of a directed edge
    auto head = [&](const HalfEdge& h) -> std::pair<int, int64_t> {
        if (h.type == 0) {
            int64_t m = L.m[h.a];
            return {h.a, h.dir == 0 ? (h.b + 1) % m : h.b};
        }
        ArcEnd primary{{h.a, h.b}, h.a >= 3 ? 2 : 0};
        ArcEnd target = h.dir == 0 ? L.other_end(primary) : primary;
        int slot = L.slot_of_end(target);
        return {slot, L.position_of(slot, target)};
    };
    // CCW outgoing half-edges at a strand point: [interval fwd, arc, interval bwd]
    auto rotation = [&](std::pair<int, int64_t> v) -> std::array<HalfEdge, 3> {
        auto [slot, pos] = v;
        int64_t m = L.m[slot];
        ArcEnd e = L.end_at(slot, pos);
        int arc_dir = (e.role == 0 || e.role == 2) ? 0 : 1;
        return {HalfEdge{0, slot, pos, 0}, HalfEdge{1, e.arc.kind, e.arc.instance, arc_dir},
                HalfEdge{0, slot, (pos - 1 + m) % m, 1}};
    };
    auto next_in_face = [&](const HalfEdge& h) -> HalfEdge {
        auto rot = rotation(head(h));
        HalfEdge t = twin(h);
        for (int i = 0; i < 3; ++i)
            if (rot[i] == t) return rot[(i + 2) % 3];
        throw std::logic_error("pants_regions: twin not found in rotation");
    };

    std::vector<HalfEdge> all;
    for (int s = 0; s < 3; ++s)
        for (int64_t k = 0; k < L.m[s]; ++k)
            for (int d = 0; d < 2; ++d) all.push_back({0, s, k, d});
    for (int kind = 0; kind < 6; ++kind) {
        int64_t cnt = kind < 3 ? L.x[(kind + 1) % 3][(kind + 2) % 3] : L.x[kind - 3][kind - 3];
        for (int64_t j = 0; j < cnt; ++j)
            for (int d = 0; d < 2; ++d) all.push_back({1, kind, j, d});
    }

    std::map<HalfEdge, int> circuit;
    int n_circuits = 0;
    for (const auto& h0 : all) {
        if (circuit.count(h0)) continue;
        std::vector<HalfEdge> walk;
        HalfEdge h = h0;
        bool all_bwd_interval = true;
        do {
            walk.push_back(h);
            if (!(h.type == 0 && h.dir == 1)) all_bwd_interval = false;
            h = next_in_face(h);
        } while (!(h == h0));
        int id = all_bwd_interval ? -1 : n_circuits++;  // caps face the neighbour pants
        for (const auto& g : walk) circuit[g] = id;
    }
    out.num_regions = n_circuits;
    out.chi.assign(out.num_regions, 1);

    for (const auto& [h, cid] : circuit) {
        if (cid < 0) continue;
        if (h.type == 0 && h.dir == 0) out.interval_region[{h.a, h.b}] = cid;
        if (h.type == 1) out.arc_side_region[{h.a, h.b, h.dir}] = cid;
    }

    // bare circles
    for (int b = 0; b < 3; ++b) {
        if (L.m[b] != 0) continue;
        int region = -1;
        int wrap_slot = -1;
        for (int s = 0; s < 3; ++s)
            if (L.x[s][s] > 0) wrap_slot = s;
        if (wrap_slot >= 0 && (wrap_slot + 1) % 3 == b) {
            // inside the innermost same-slot arc
            region = out.interval_region.at({wrap_slot, L.m[wrap_slot] - 1});
        } else if (wrap_slot >= 0) {
            // outside the outermost same-slot arc
            region = out.interval_region.at({wrap_slot, L.x[wrap_slot][wrap_slot] - 1});
        } else {
            int kind = b;  // the only possible fan is the one opposite b
            int u = fan_defining_slot(kind);
            region = out.interval_region.at({u, L.m[u] - 1});
        }
        out.bare_region[b] = region;
        out.chi[region] -= 1;
    }
    return out;
}

}  // namespace

std::string TypeInvariant::key() const {
    std::string s = "V:";
    for (size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(vertices[i].genus) + "." + std::to_string(vertices[i].boundary);
    }
    s += "|E:";
    for (size_t i = 0; i < edges.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(edges[i].u) + "-" + std::to_string(edges[i].v) + ":" +
             std::to_string(edges[i].weight);
    }
    return s;
}

TypeInvariant canonicalize_graph(std::vector<TypeVertex> vertices, std::vector<TypeEdge> edges) {
    const int n = static_cast<int>(vertices.size());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);

    TypeInvariant best;
    bool has_best = false;
    // the canonical vertex sequence is sorted, so only permutations mapping
    // onto the sorted label order can win; n is at most 2g-2, brute force
    std::sort(perm.begin(), perm.end(), [&](int a, int b) { return vertices[a] < vertices[b]; });
    do {
        bool sorted_ok = true;
        for (int i = 0; i + 1 < n; ++i)
            if (vertices[perm[i + 1]] < vertices[perm[i]]) sorted_ok = false;
        if (!sorted_ok) continue;
        TypeInvariant cand;
        cand.vertices.resize(n);
        std::vector<int> where(n);
        for (int i = 0; i < n; ++i) {
            cand.vertices[i] = vertices[perm[i]];
            where[perm[i]] = i;
        }
        for (const auto& e : edges) {
            int u = where[e.u], v = where[e.v];
            cand.edges.push_back({std::min(u, v), std::max(u, v), e.weight});
        }
        std::sort(cand.edges.begin(), cand.edges.end());
        if (!has_best || std::make_pair(cand.vertices, cand.edges) <
                             std::make_pair(best.vertices, best.edges)) {
            best = cand;
            has_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!has_best) {
        best.vertices = vertices;  // n == 0
    }
    return best;
}

TypeInvariant topological_type(const SurfaceData& sd, const MultiCurve& mc) {
    const auto& pd = sd.pants;
    const auto& c = mc.coords;
    const int P = pd.num_pants();

    std::vector<PantsLayout> layouts;
    std::vector<PantsRegions> regions;
    std::vector<int> region_base(P + 1, 0);
    for (int p = 0; p < P; ++p) {
        layouts.push_back(PantsLayout::build(c.m[pd.slot_cuff[p][0]], c.m[pd.slot_cuff[p][1]],
                                             c.m[pd.slot_cuff[p][2]]));
        regions.push_back(pants_regions(layouts.back()));
        region_base[p + 1] = region_base[p] + regions.back().num_regions;
    }
    const int R = region_base[P];
    UnionFind uf(R);

    auto interval_node = [&](int pants, int slot, int64_t idx) {
        return region_base[pants] + regions[pants].interval_region.at({slot, idx});
    };

    // parallel copies beyond each component's representative are erased:
    // the regions on their two sides meet in the complement (the deleted
    // arcs and strand points contribute cancelling Euler terms)
    for (const auto& comp : mc.components)
        for (const auto& [p, arc] : comp.duplicate_arcs)
            uf.unite(region_base[p] + regions[p].arc_side_region.at({arc.kind, arc.instance, 0}),
                     region_base[p] + regions[p].arc_side_region.at({arc.kind, arc.instance, 1}));

    // merge across cuffs
    for (int i = 0; i < pd.num_cuffs(); ++i) {
        SlotRef s0 = pd.cuff_sides[i][0], s1 = pd.cuff_sides[i][1];
        int64_t m = c.m[i], t = c.t[i];
        if (m > 0) {
            for (int64_t a = 0; a < m; ++a)
                uf.unite(interval_node(s0.pants, s0.slot, a),
                         interval_node(s1.pants, s1.slot, mod_pos(t - 2 - a, m)));
        } else if (t == 0) {
            uf.unite(region_base[s0.pants] + regions[s0.pants].bare_region[s0.slot],
                     region_base[s1.pants] + regions[s1.pants].bare_region[s1.slot]);
        }
    }

    // Euler characteristic per piece
    std::map<int, int64_t> chi;
    for (int p = 0; p < P; ++p)
        for (int r = 0; r < regions[p].num_regions; ++r)
            chi[uf.find(region_base[p] + r)] += regions[p].chi[r];
    for (int i = 0; i < pd.num_cuffs(); ++i) {
        SlotRef s0 = pd.cuff_sides[i][0];
        for (int64_t a = 0; a < c.m[i]; ++a)
            chi[uf.find(interval_node(s0.pants, s0.slot, a))] -= 1;
    }

    // boundary circles: one per component side
    std::map<int, int> boundary;
    std::vector<std::pair<int, int>> comp_sides;  // (left piece, right piece) per component
    for (const auto& comp : mc.components) {
        int left = -1, right = -1;
        if (comp.is_cuff) {
            SlotRef s0 = pd.cuff_sides[comp.cuff][0], s1 = pd.cuff_sides[comp.cuff][1];
            left = uf.find(region_base[s0.pants] + regions[s0.pants].bare_region[s0.slot]);
            right = uf.find(region_base[s1.pants] + regions[s1.pants].bare_region[s1.slot]);
        } else {
            for (const auto& leg : comp.legs) {
                int dir = leg.entered_at_end0 ? 0 : 1;
                int l = uf.find(region_base[leg.pants] +
                                regions[leg.pants].arc_side_region.at(
                                    {leg.arc.kind, leg.arc.instance, dir}));
                int r = uf.find(region_base[leg.pants] +
                                regions[leg.pants].arc_side_region.at(
                                    {leg.arc.kind, leg.arc.instance, dir ^ 1}));
                if (left == -1) {
                    left = l;
                    right = r;
                } else if (left != l || right != r) {
                    throw std::logic_error("topological_type: inconsistent component sides");
                }
            }
        }
        boundary[left] += 1;
        boundary[right] += 1;
        comp_sides.emplace_back(left, right);
    }

    // assemble the labeled graph
    std::map<int, int> piece_index;
    std::vector<TypeVertex> verts;
    int64_t chi_total = 0;
    for (const auto& [root, ch] : chi) {
        int b = boundary.count(root) ? boundary[root] : 0;
        int64_t genus2 = 2 - ch - b;
        if (genus2 < 0 || genus2 % 2 != 0)
            throw std::logic_error("topological_type: piece with non-integral genus");
        piece_index[root] = static_cast<int>(verts.size());
        verts.push_back({static_cast<int>(genus2 / 2), b});
        chi_total += ch;
        if (!mc.empty() && b == 0) throw std::logic_error("topological_type: closed piece");
        if (genus2 == 0 && b <= 2 && !mc.empty())
            throw std::logic_error("topological_type: disk or annulus piece (merge bug)");
    }
    if (chi_total != 2 - 2 * sd.surface.genus)
        throw std::logic_error("topological_type: Euler characteristic mismatch");

    std::vector<TypeEdge> edges;
    for (size_t k = 0; k < mc.components.size(); ++k) {
        int u = piece_index.at(comp_sides[k].first), v = piece_index.at(comp_sides[k].second);
        edges.push_back({std::min(u, v), std::max(u, v), mc.components[k].weight});
    }
    return canonicalize_graph(std::move(verts), std::move(edges));
}

}  // namespace mcv
