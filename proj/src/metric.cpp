#include "asilab/metric.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

namespace asilab {

namespace {

struct Charger {
    GraphRef g;
    std::uint64_t fuel;
    FuelUsage* usage;
    std::uint64_t used = 0;

    ~Charger() {
        if (usage) usage->used += used;
    }

    void charge() {
        if (!g.is_lazy()) return;
        if (++used > fuel) {
            if (usage) {
                usage->used += used;
                usage = nullptr;
            }
            fail_budget("exploration fuel exhausted after " + std::to_string(used - 1) +
                        " visited vertices");
        }
    }
};

}  // namespace

std::optional<unsigned> distance(GraphRef g, Vertex x, Vertex y, unsigned cap, std::uint64_t fuel,
                                 FuelUsage* usage) {
    if (!g.has_vertex(x) || !g.has_vertex(y)) fail_input("distance: vertex not in graph");
    Charger charger{g, fuel, usage};
    if (x == y) {
        charger.charge();
        return 0;
    }
    std::unordered_map<Vertex, unsigned> dist;
    std::deque<Vertex> queue;
    dist.emplace(x, 0);
    queue.push_back(x);
    charger.charge();
    while (!queue.empty()) {
        Vertex cur = queue.front();
        queue.pop_front();
        unsigned d = dist[cur];
        if (d >= cap) break;  // breadth-first: nothing nearer remains
        bool found = false;
        g.for_neighbors(cur, [&](Vertex w, Mult) {
            if (found || dist.contains(w)) return;
            charger.charge();
            dist.emplace(w, d + 1);
            if (w == y) {
                found = true;
                return;
            }
            queue.push_back(w);
        });
        if (found) return d + 1;
    }
    return std::nullopt;
}

std::vector<std::pair<Vertex, unsigned>> ball_with_distances(GraphRef g,
                                                             std::span<const Vertex> centers,
                                                             unsigned r, std::uint64_t fuel,
                                                             FuelUsage* usage) {
    Charger charger{g, fuel, usage};
    std::unordered_map<Vertex, unsigned> dist;
    std::deque<Vertex> queue;
    for (Vertex c : centers) {
        if (!g.has_vertex(c)) fail_input("ball: center not in graph");
        if (dist.emplace(c, 0).second) {
            charger.charge();
            queue.push_back(c);
        }
    }
    while (!queue.empty()) {
        Vertex cur = queue.front();
        queue.pop_front();
        unsigned d = dist[cur];
        if (d >= r) continue;
        g.for_neighbors(cur, [&](Vertex w, Mult) {
            if (dist.contains(w)) return;
            charger.charge();
            dist.emplace(w, d + 1);
            queue.push_back(w);
        });
    }
    std::vector<std::pair<Vertex, unsigned>> out(dist.begin(), dist.end());
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet ball(GraphRef g, std::span<const Vertex> centers, unsigned r, std::uint64_t fuel,
               FuelUsage* usage) {
    VertexSet out;
    for (auto& [v, d] : ball_with_distances(g, centers, r, fuel, usage)) out.push_back(v);
    return out;
}

std::vector<VertexSet> power_components(const StructuredMultigraph& g, std::span<const Vertex> X,
                                        unsigned r) {
    VertexSet xs(X.begin(), X.end());
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    for (Vertex v : xs)
        if (!g.has_vertex(v)) fail_input("power_components: vertex not in graph");

    auto in_x = [&](Vertex v) { return std::binary_search(xs.begin(), xs.end(), v); };
    std::unordered_set<Vertex> seen;
    std::vector<VertexSet> components;
    for (Vertex start : xs) {
        if (seen.contains(start)) continue;
        VertexSet comp;
        std::deque<Vertex> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            Vertex cur = queue.front();
            queue.pop_front();
            comp.push_back(cur);
            for (Vertex w : ball(g, std::span(&cur, 1), r)) {
                if (w == cur || !in_x(w) || seen.contains(w)) continue;
                seen.insert(w);
                queue.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

VertexSet power_component_of(GraphRef g, const std::function<bool(Vertex)>& member, Vertex seed,
                             unsigned r, std::uint64_t fuel, FuelUsage* usage) {
    if (!g.has_vertex(seed)) fail_input("power_component_of: seed not in graph");
    if (!member(seed)) fail_input("power_component_of: seed not a member of the set");
    FuelUsage local;
    std::unordered_set<Vertex> seen{seed};
    VertexSet comp;
    std::deque<Vertex> queue{seed};
    while (!queue.empty()) {
        Vertex cur = queue.front();
        queue.pop_front();
        comp.push_back(cur);
        std::uint64_t remaining = fuel > local.used ? fuel - local.used : 0;
        VertexSet reach;
        try {
            reach = ball(g, std::span(&cur, 1), r, remaining, &local);
        } catch (const Error&) {
            if (usage) usage->used += local.used;
            fail_budget("component budget exceeded while expanding around vertex " +
                        std::to_string(cur),
                        "partial component of size " + std::to_string(comp.size()));
        }
        for (Vertex w : reach) {
            if (w == cur || seen.contains(w) || !member(w)) continue;
            seen.insert(w);
            queue.push_back(w);
        }
    }
    if (usage) usage->used += local.used;
    std::sort(comp.begin(), comp.end());
    return comp;
}

}  // namespace asilab
