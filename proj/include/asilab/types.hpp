#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace asilab {

using Vertex = std::uint32_t;
using Mult = std::uint32_t;
using Color = std::uint64_t;

// Sorted, duplicate-free vertex list. All "vertex set" values in this
// library use this representation.
using VertexSet = std::vector<Vertex>;

// One parallel edge of a multigraph. Normalized so u < v; slot indexes the
// parallel copies 0..multiplicity-1.
struct EdgeSlot {
    Vertex u = 0;
    Vertex v = 0;
    Mult slot = 0;

    friend auto operator<=>(const EdgeSlot&, const EdgeSlot&) = default;
};

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

// Cumulative count of vertices visited by lazy-graph exploration.
struct FuelUsage {
    std::uint64_t used = 0;
};

}  // namespace asilab
