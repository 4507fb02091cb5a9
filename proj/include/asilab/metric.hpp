#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "asilab/graph_ref.hpp"
#include "asilab/types.hpp"

namespace asilab {

// Path-metric operations. Distances ignore multiplicities (a double edge has
// length 1). Lazy-graph traversal charges one unit of fuel per visited vertex
// and throws a budget_exhausted Error when the budget runs out; the optional
// FuelUsage out-parameter reports consumption either way.

// Length of a shortest path, or nullopt when no path of length <= cap exists.
std::optional<unsigned> distance(GraphRef g, Vertex x, Vertex y, unsigned cap,
                                 std::uint64_t fuel = kDefaultFuel, FuelUsage* usage = nullptr);

// { y : rho_G(X, y) <= r }, sorted.
VertexSet ball(GraphRef g, std::span<const Vertex> centers, unsigned r,
               std::uint64_t fuel = kDefaultFuel, FuelUsage* usage = nullptr);

// Vertices of `centers` paired with their distance, breadth-first out to
// radius r. Building block for the ball/witness layers.
std::vector<std::pair<Vertex, unsigned>> ball_with_distances(
    GraphRef g, std::span<const Vertex> centers, unsigned r, std::uint64_t fuel = kDefaultFuel,
    FuelUsage* usage = nullptr);

// Connected components of the graph on X joining x != y when rho_G(x,y) <= r,
// with the distance measured in the full graph. Components are sorted by
// least element, each sorted. Partitions X.
std::vector<VertexSet> power_components(const StructuredMultigraph& g, std::span<const Vertex> X,
                                        unsigned r);

// The single G^r|U component of `seed`, for a membership-defined U. Expands
// until closure; a budget_exhausted Error signals a potentially infinite
// component.
VertexSet power_component_of(GraphRef g, const std::function<bool(Vertex)>& member, Vertex seed,
                             unsigned r, std::uint64_t fuel = kDefaultFuel,
                             FuelUsage* usage = nullptr);

}  // namespace asilab
