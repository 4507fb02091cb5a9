#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "asilab/types.hpp"

namespace asilab {

// Oracle presentation of an infinite locally finite graph on the naturals.
// Both oracles are pure: repeated queries return identical answers, and the
// degree oracle always equals the multiplicity-weighted neighbor count.
// Implementations must be safe for concurrent queries.
class LazyGraph {
public:
    virtual ~LazyGraph() = default;

    // Sorted by neighbor id.
    virtual std::vector<std::pair<Vertex, Mult>> neighbors(Vertex v) const = 0;
    virtual unsigned degree(Vertex v) const = 0;
    virtual std::string uri() const = 0;
};

// Parses a `family:name?param=value&...` address. Known families:
//   family:path                     one-sided infinite path, i -- i+1
//   family:tree?d=3                 d-regular infinite tree, breadth-first ids
//   family:grid                     2D grid, spiral numbering from the origin
//   family:doubled-path             path with every edge doubled
//   family:subdivided-tree?d=3&len=2  d-branching tree, every edge subdivided
//                                     by `len` degree-2 vertices (len even)
std::shared_ptr<const LazyGraph> parse_family_uri(const std::string& uri);

// Spiral numbering of the 2D grid, exposed for tests. Index 0 sits at the
// origin; ring k >= 1 holds indices (2k-1)^2 .. (2k+1)^2 - 1 counterclockwise
// starting at (k, -k+1).
std::pair<std::int64_t, std::int64_t> spiral_to_xy(std::uint64_t n);
std::uint64_t xy_to_spiral(std::int64_t x, std::int64_t y);

}  // namespace asilab
