#include "asilab/multigraph.hpp"

#include <algorithm>

#include "asilab/errors.hpp"

namespace asilab {

StructuredMultigraph::StructuredMultigraph(VertexSet vertices, std::vector<EdgeRecord> edges,
                                           PredicateMap predicates)
    : vertices_(std::move(vertices)), edges_(std::move(edges)),
      predicates_(std::move(predicates)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        fail_input("duplicate vertex id");

    for (auto& e : edges_) {
        if (e.u == e.v) fail_input("loop edge at vertex " + std::to_string(e.u));
        if (e.multiplicity == 0) fail_input("edge with multiplicity 0");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!has_vertex(e.u) || !has_vertex(e.v))
            fail_input("edge endpoint not in vertex list: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 1; i < edges_.size(); ++i)
        if (edges_[i - 1].u == edges_[i].u && edges_[i - 1].v == edges_[i].v)
            fail_input("repeated edge record for pair (" + std::to_string(edges_[i].u) + "," +
                       std::to_string(edges_[i].v) + ")");

    for (auto& [name, set] : predicates_) {
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (Vertex v : set)
            if (!has_vertex(v))
                fail_input("predicate '" + name + "' names unknown vertex " + std::to_string(v));
    }

    adjacency_.assign(vertices_.size(), {});
    for (const auto& e : edges_) {
        adjacency_[rank(e.u)].emplace_back(e.v, e.multiplicity);
        adjacency_[rank(e.v)].emplace_back(e.u, e.multiplicity);
        slot_count_ += e.multiplicity;
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool StructuredMultigraph::has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::size_t StructuredMultigraph::rank(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) fail_input("unknown vertex " + std::to_string(v));
    return static_cast<std::size_t>(it - vertices_.begin());
}

std::span<const std::pair<Vertex, Mult>> StructuredMultigraph::neighbors(Vertex v) const {
    return adjacency_[rank(v)];
}

Mult StructuredMultigraph::multiplicity(Vertex u, Vertex v) const {
    for (const auto& [w, m] : neighbors(u))
        if (w == v) return m;
    return 0;
}

unsigned StructuredMultigraph::degree(Vertex v) const {
    unsigned d = 0;
    for (const auto& [w, m] : neighbors(v)) d += m;
    return d;
}

unsigned StructuredMultigraph::simple_degree(Vertex v) const {
    return static_cast<unsigned>(neighbors(v).size());
}

unsigned StructuredMultigraph::max_degree() const {
    unsigned d = 0;
    for (Vertex v : vertices_) d = std::max(d, degree(v));
    return d;
}

Mult StructuredMultigraph::max_multiplicity() const {
    Mult p = 0;
    for (const auto& e : edges_) p = std::max(p, e.multiplicity);
    return p;
}

std::vector<EdgeSlot> StructuredMultigraph::slots() const {
    std::vector<EdgeSlot> out;
    out.reserve(slot_count_);
    for (const auto& e : edges_)
        for (Mult s = 0; s < e.multiplicity; ++s) out.push_back({e.u, e.v, s});
    return out;
}

StructuredMultigraph StructuredMultigraph::induced(std::span<const Vertex> keep) const {
    VertexSet vs;
    vs.reserve(keep.size());
    for (Vertex v : keep)
        if (has_vertex(v)) vs.push_back(v);
    std::sort(vs.begin(), vs.end());
    vs.erase(std::unique(vs.begin(), vs.end()), vs.end());

    auto in = [&](Vertex v) { return std::binary_search(vs.begin(), vs.end(), v); };
    std::vector<EdgeRecord> es;
    for (const auto& e : edges_)
        if (in(e.u) && in(e.v)) es.push_back(e);

    PredicateMap preds;
    for (const auto& [name, set] : predicates_) {
        VertexSet kept;
        for (Vertex v : set)
            if (in(v)) kept.push_back(v);
        preds.emplace(name, std::move(kept));
    }
    return StructuredMultigraph(std::move(vs), std::move(es), std::move(preds));
}

StructuredMultigraph StructuredMultigraph::edge_subgraph(std::span<const EdgeSlot> keep) const {
    std::map<std::pair<Vertex, Vertex>, Mult> counts;
    for (const auto& s : keep) {
        Vertex u = std::min(s.u, s.v), v = std::max(s.u, s.v);
        if (multiplicity(u, v) <= s.slot)
            fail_input("edge_subgraph: slot not present in graph");
        counts[{u, v}] += 1;
    }
    std::vector<EdgeRecord> es;
    es.reserve(counts.size());
    for (const auto& [pair, m] : counts) es.push_back({pair.first, pair.second, m});
    return StructuredMultigraph(vertices_, std::move(es), predicates_);
}

StructuredMultigraph path_graph(unsigned n) {
    VertexSet vs(n);
    for (unsigned i = 0; i < n; ++i) vs[i] = i;
    std::vector<EdgeRecord> es;
    for (unsigned i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1});
    return StructuredMultigraph(std::move(vs), std::move(es));
}

StructuredMultigraph cycle_graph(unsigned n) {
    VertexSet vs(n);
    for (unsigned i = 0; i < n; ++i) vs[i] = i;
    std::vector<EdgeRecord> es;
    for (unsigned i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 1});
    if (n > 2) es.push_back({0, n - 1, 1});
    return StructuredMultigraph(std::move(vs), std::move(es));
}

StructuredMultigraph complete_graph(unsigned n) {
    VertexSet vs(n);
    for (unsigned i = 0; i < n; ++i) vs[i] = i;
    std::vector<EdgeRecord> es;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) es.push_back({i, j, 1});
    return StructuredMultigraph(std::move(vs), std::move(es));
}

StructuredMultigraph doubled_path_graph(unsigned n) {
    VertexSet vs(n);
    for (unsigned i = 0; i < n; ++i) vs[i] = i;
    std::vector<EdgeRecord> es;
    for (unsigned i = 0; i + 1 < n; ++i) es.push_back({i, i + 1, 2});
    return StructuredMultigraph(std::move(vs), std::move(es));
}

}  // namespace asilab
