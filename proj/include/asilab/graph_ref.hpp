#pragma once

#include <functional>
#include <utility>

#include "asilab/errors.hpp"
#include "asilab/lazy_graph.hpp"
#include "asilab/multigraph.hpp"

namespace asilab {

// Non-owning view over either a finite StructuredMultigraph or a LazyGraph,
// giving the metric layer one neighbor interface. Lazy graphs live on all of
// the naturals, so membership is only meaningful on the finite side.
class GraphRef {
public:
    GraphRef(const StructuredMultigraph& g) : fin_(&g) {}  // NOLINT(implicit)
    GraphRef(const LazyGraph& g) : lazy_(&g) {}            // NOLINT(implicit)

    bool is_lazy() const { return lazy_ != nullptr; }

    bool has_vertex(Vertex v) const { return lazy_ ? true : fin_->has_vertex(v); }

    template <typename Fn>
    void for_neighbors(Vertex v, Fn&& fn) const {
        if (lazy_) {
            for (auto [w, m] : lazy_->neighbors(v)) fn(w, m);
        } else {
            for (auto [w, m] : fin_->neighbors(v)) fn(w, m);
        }
    }

    unsigned degree(Vertex v) const { return lazy_ ? lazy_->degree(v) : fin_->degree(v); }

    const StructuredMultigraph& finite() const {
        if (!fin_) fail_input("operation requires a finite graph");
        return *fin_;
    }
    const LazyGraph& lazy() const {
        if (!lazy_) fail_input("operation requires a lazy graph");
        return *lazy_;
    }

private:
    const StructuredMultigraph* fin_ = nullptr;
    const LazyGraph* lazy_ = nullptr;
};

}  // namespace asilab
