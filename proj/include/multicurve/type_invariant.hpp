#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multicurve/multicurve.hpp"
#include "multicurve/surface.hpp"

namespace mcv {

// Canonical labeled complement graph of a multicurve: vertices are the
// complementary subsurfaces labeled (genus, boundary count), edges are the
// components labeled by weight. Equal keys <=> same mapping class group
// orbit.
struct TypeVertex {
    int genus = 0;
    int boundary = 0;
    bool operator==(const TypeVertex&) const = default;
    auto operator<=>(const TypeVertex&) const = default;
};

struct TypeEdge {
    int u = 0;
    int v = 0;  // u <= v
    int64_t weight = 1;
    bool operator==(const TypeEdge&) const = default;
    auto operator<=>(const TypeEdge&) const = default;
};

struct TypeInvariant {
    std::vector<TypeVertex> vertices;
    std::vector<TypeEdge> edges;
    bool operator==(const TypeInvariant&) const = default;

    // sorted edge-list string, usable as a CSV grouping key
    std::string key() const;
};

// Minimal encoding over all vertex relabelings.
TypeInvariant canonicalize_graph(std::vector<TypeVertex> vertices, std::vector<TypeEdge> edges);

TypeInvariant topological_type(const SurfaceData& sd, const MultiCurve& mc);

}  // namespace mcv
