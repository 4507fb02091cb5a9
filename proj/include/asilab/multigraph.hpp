#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "asilab/types.hpp"

namespace asilab {

struct EdgeRecord {
    Vertex u = 0;
    Vertex v = 0;
    Mult multiplicity = 1;

    friend auto operator<=>(const EdgeRecord&, const EdgeRecord&) = default;
};

using PredicateMap = std::map<std::string, VertexSet>;

// Finite loopless multigraph on a set of naturals. The numeric order of the
// vertex ids is the linear order carried by the structure. Immutable after
// construction; all accessors are safe for concurrent use.
class StructuredMultigraph {
public:
    StructuredMultigraph() = default;
    StructuredMultigraph(VertexSet vertices, std::vector<EdgeRecord> edges,
                         PredicateMap predicates = {});

    const VertexSet& vertices() const { return vertices_; }
    std::size_t order() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    bool has_vertex(Vertex v) const;
    // Rank of v in the sorted vertex list. Precondition: has_vertex(v).
    std::size_t rank(Vertex v) const;

    // Neighbors with multiplicities, sorted by neighbor id.
    std::span<const std::pair<Vertex, Mult>> neighbors(Vertex v) const;
    Mult multiplicity(Vertex u, Vertex v) const;
    // Multiplicity-weighted degree (parallel edges counted).
    unsigned degree(Vertex v) const;
    unsigned simple_degree(Vertex v) const;
    unsigned max_degree() const;
    Mult max_multiplicity() const;

    // Normalized (u < v), sorted edge records.
    const std::vector<EdgeRecord>& edges() const { return edges_; }
    std::size_t slot_count() const { return slot_count_; }
    std::vector<EdgeSlot> slots() const;

    const PredicateMap& predicates() const { return predicates_; }

    // Restriction to a vertex subset; ids, multiplicities and predicates are
    // inherited. `keep` need not be sorted and may contain ids outside V.
    StructuredMultigraph induced(std::span<const Vertex> keep) const;
    // Subgraph keeping exactly the given slots of this graph (slot indices
    // are renumbered per surviving pair). Vertices are kept.
    StructuredMultigraph edge_subgraph(std::span<const EdgeSlot> keep) const;

    friend bool operator==(const StructuredMultigraph& a, const StructuredMultigraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ &&
               a.predicates_ == b.predicates_;
    }

private:
    VertexSet vertices_;
    std::vector<EdgeRecord> edges_;
    PredicateMap predicates_;
    // adjacency_[rank(v)] = sorted (neighbor, multiplicity) pairs
    std::vector<std::vector<std::pair<Vertex, Mult>>> adjacency_;
    std::size_t slot_count_ = 0;
};

// Convenience builders used throughout the tests.
StructuredMultigraph path_graph(unsigned n);                  // vertices 0..n-1
StructuredMultigraph cycle_graph(unsigned n);
StructuredMultigraph complete_graph(unsigned n);
StructuredMultigraph doubled_path_graph(unsigned n);          // each edge multiplicity 2

}  // namespace asilab
