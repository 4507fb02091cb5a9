#include "asilab/lazy_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <map>
#include <mutex>

#include "asilab/errors.hpp"

namespace asilab {

namespace {

class InfinitePath final : public LazyGraph {
public:
    std::vector<std::pair<Vertex, Mult>> neighbors(Vertex v) const override {
        std::vector<std::pair<Vertex, Mult>> out;
        if (v > 0) out.emplace_back(v - 1, 1);
        out.emplace_back(v + 1, 1);
        return out;
    }
    unsigned degree(Vertex v) const override { return v == 0 ? 1 : 2; }
    std::string uri() const override { return "family:path"; }
};

class DoubledPath final : public LazyGraph {
public:
    std::vector<std::pair<Vertex, Mult>> neighbors(Vertex v) const override {
        std::vector<std::pair<Vertex, Mult>> out;
        if (v > 0) out.emplace_back(v - 1, 2);
        out.emplace_back(v + 1, 2);
        return out;
    }
    unsigned degree(Vertex v) const override { return v == 0 ? 2 : 4; }
    std::string uri() const override { return "family:doubled-path"; }
};

// d-regular infinite tree in breadth-first numbering: level 0 is {0} with d
// children 1..d; every later vertex has d-1 children. Level L >= 1 holds
// d*(d-1)^(L-1) vertices.
class RegularTree final : public LazyGraph {
public:
    explicit RegularTree(unsigned d) : d_(d) {}

    std::vector<std::pair<Vertex, Mult>> neighbors(Vertex v) const override {
        std::vector<std::pair<Vertex, Mult>> out;
        if (v == 0) {
            for (unsigned c = 1; c <= d_; ++c) out.emplace_back(c, 1);
            return out;
        }
        auto [level, index, offset] = locate(v);
        if (level == 1) {
            out.emplace_back(0, 1);
        } else {
            std::uint64_t prev_offset = offset - level_size(level - 1);
            out.emplace_back(static_cast<Vertex>(prev_offset + index / (d_ - 1)), 1);
        }
        std::uint64_t child_base = offset + level_size(level) + index * (d_ - 1);
        for (unsigned t = 0; t + 1 < d_; ++t)
            out.emplace_back(static_cast<Vertex>(child_base + t), 1);
        return out;
    }

    unsigned degree(Vertex) const override { return d_; }
    std::string uri() const override { return "family:tree?d=" + std::to_string(d_); }

private:
    std::uint64_t level_size(std::uint64_t level) const {
        if (level == 0) return 1;
        std::uint64_t n = d_;
        for (std::uint64_t i = 1; i < level; ++i) n *= d_ - 1;
        return n;
    }

    // (level, index within level, id offset of level) for v >= 1
    std::tuple<std::uint64_t, std::uint64_t, std::uint64_t> locate(Vertex v) const {
        std::uint64_t offset = 1, level = 1;
        while (v >= offset + level_size(level)) {
            offset += level_size(level);
            ++level;
        }
        return {level, v - offset, offset};
    }

    unsigned d_;
};

class SpiralGrid final : public LazyGraph {
public:
    std::vector<std::pair<Vertex, Mult>> neighbors(Vertex v) const override {
        auto [x, y] = spiral_to_xy(v);
        std::vector<std::pair<Vertex, Mult>> out;
        out.emplace_back(static_cast<Vertex>(xy_to_spiral(x + 1, y)), 1);
        out.emplace_back(static_cast<Vertex>(xy_to_spiral(x - 1, y)), 1);
        out.emplace_back(static_cast<Vertex>(xy_to_spiral(x, y + 1)), 1);
        out.emplace_back(static_cast<Vertex>(xy_to_spiral(x, y - 1)), 1);
        std::sort(out.begin(), out.end());
        return out;
    }
    unsigned degree(Vertex) const override { return 4; }
    std::string uri() const override { return "family:grid"; }
};

// Tree with branching degree d where every base edge is replaced by a path
// carrying `len` internal degree-2 vertices. Ids follow breadth-first order
// from the root, assigned lazily and memoized. For even len there is no
// infinite injective path whose every other vertex has degree 2 (consecutive
// branch vertices sit 1+len apart, an odd gap, so they alternate parity).
class SubdividedTree final : public LazyGraph {
    // coordinate: base tree vertex b, or internal point i (1..len) of the
    // base edge from parent(b) down to b
    struct Coord {
        std::uint64_t base;
        unsigned pos;  // 0 = the base vertex itself
        friend auto operator<=>(const Coord&, const Coord&) = default;
    };

public:
    SubdividedTree(unsigned d, unsigned len) : base_(d), len_(len) {}

    std::vector<std::pair<Vertex, Mult>> neighbors(Vertex v) const override {
        std::lock_guard<std::mutex> lock(mu_);
        extend_until(v);
        Coord c = by_id_[v];
        std::vector<std::pair<Vertex, Mult>> out;
        for (const Coord& n : coord_neighbors(c)) out.emplace_back(id_of(n), 1);
        std::sort(out.begin(), out.end());
        return out;
    }

    unsigned degree(Vertex v) const override {
        std::lock_guard<std::mutex> lock(mu_);
        extend_until(v);
        return by_id_[v].pos == 0 ? base_.degree(0) : 2;
    }

    std::string uri() const override {
        return "family:subdivided-tree?d=" + std::to_string(base_.degree(0)) +
               "&len=" + std::to_string(len_);
    }

private:
    std::vector<Coord> coord_neighbors(const Coord& c) const {
        std::vector<Coord> out;
        if (c.pos == 0) {
            if (c.base != 0) out.push_back({c.base, len_});  // toward parent
            for (auto [child, m] : base_.neighbors(static_cast<Vertex>(c.base))) {
                (void)m;
                if (child > c.base) out.push_back({child, 1});  // toward each child
            }
        } else {
            // chain parent(b) - (b,1) - ... - (b,len) - b
            std::uint64_t parent = 0;
            for (auto [w, m] : base_.neighbors(static_cast<Vertex>(c.base))) {
                (void)m;
                if (w < c.base) parent = w;
            }
            if (c.pos == 1) out.push_back({parent, 0});
            else out.push_back({c.base, c.pos - 1});
            if (c.pos == len_) out.push_back({c.base, 0});
            else out.push_back({c.base, c.pos + 1});
        }
        return out;
    }

    // Pops one frontier coordinate and numbers its unseen neighbors.
    // Caller holds mu_.
    void bfs_step() const {
        if (by_id_.empty()) {
            by_id_.push_back({0, 0});
            ids_.emplace(Coord{0, 0}, 0);
            frontier_.push_back({0, 0});
        }
        if (frontier_.empty()) fail_input("subdivided tree numbering exhausted");
        Coord c = frontier_.front();
        frontier_.pop_front();
        for (const Coord& n : coord_neighbors(c)) {
            if (ids_.contains(n)) continue;
            ids_.emplace(n, static_cast<Vertex>(by_id_.size()));
            by_id_.push_back(n);
            frontier_.push_back(n);
        }
    }

    void extend_until(Vertex v) const {
        if (by_id_.empty()) bfs_step();
        while (by_id_.size() <= v) bfs_step();
    }

    // A neighbor of any numbered vertex x gets numbered by the time BFS has
    // processed x, so stepping the queue always reaches c.
    Vertex id_of(const Coord& c) const {
        auto it = ids_.find(c);
        while (it == ids_.end()) {
            bfs_step();
            it = ids_.find(c);
        }
        return it->second;
    }

    RegularTree base_;
    unsigned len_;
    mutable std::mutex mu_;
    mutable std::vector<Coord> by_id_;
    mutable std::map<Coord, Vertex> ids_;
    mutable std::deque<Coord> frontier_;
};

std::map<std::string, std::string> parse_params(const std::string& query) {
    std::map<std::string, std::string> params;
    std::size_t pos = 0;
    while (pos < query.size()) {
        std::size_t amp = query.find('&', pos);
        std::string item = query.substr(pos, amp == std::string::npos ? amp : amp - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0) fail_input("bad family parameter: " + item);
        params[item.substr(0, eq)] = item.substr(eq + 1);
        if (amp == std::string::npos) break;
        pos = amp + 1;
    }
    return params;
}

unsigned param_uint(const std::map<std::string, std::string>& params, const std::string& key,
                    unsigned fallback, bool required = false) {
    auto it = params.find(key);
    if (it == params.end()) {
        if (required) fail_input("missing family parameter '" + key + "'");
        return fallback;
    }
    char* end = nullptr;
    unsigned long val = std::strtoul(it->second.c_str(), &end, 10);
    if (end == it->second.c_str() || *end != '\0')
        fail_input("bad value for family parameter '" + key + "'");
    return static_cast<unsigned>(val);
}

}  // namespace

std::pair<std::int64_t, std::int64_t> spiral_to_xy(std::uint64_t n) {
    if (n == 0) return {0, 0};
    std::int64_t k = 1;
    while (static_cast<std::uint64_t>(2 * k + 1) * (2 * k + 1) <= n) ++k;
    std::int64_t m = static_cast<std::int64_t>(n) - (2 * k - 1) * (2 * k - 1);
    if (m < 2 * k) return {k, -k + 1 + m};
    if (m < 4 * k) return {k - 1 - (m - 2 * k), k};
    if (m < 6 * k) return {-k, k - 1 - (m - 4 * k)};
    return {-k + 1 + (m - 6 * k), -k};
}

std::uint64_t xy_to_spiral(std::int64_t x, std::int64_t y) {
    std::int64_t k = std::max(std::llabs(x), std::llabs(y));
    if (k == 0) return 0;
    std::int64_t m;
    if (x == k && y >= -k + 1) m = y + k - 1;
    else if (y == k) m = 2 * k + (k - 1 - x);
    else if (x == -k) m = 4 * k + (k - 1 - y);
    else m = 6 * k + (x + k - 1);
    return static_cast<std::uint64_t>((2 * k - 1) * (2 * k - 1) + m);
}

std::shared_ptr<const LazyGraph> parse_family_uri(const std::string& uri) {
    const std::string prefix = "family:";
    if (uri.rfind(prefix, 0) != 0) fail_input("not a family uri: " + uri);
    std::string rest = uri.substr(prefix.size());
    std::string name = rest, query;
    if (auto q = rest.find('?'); q != std::string::npos) {
        name = rest.substr(0, q);
        query = rest.substr(q + 1);
    }
    auto params = parse_params(query);

    if (name == "path") return std::make_shared<InfinitePath>();
    if (name == "doubled-path") return std::make_shared<DoubledPath>();
    if (name == "tree") {
        unsigned d = param_uint(params, "d", 0, true);
        if (d < 2) fail_input("tree family requires d >= 2");
        return std::make_shared<RegularTree>(d);
    }
    if (name == "grid") return std::make_shared<SpiralGrid>();
    if (name == "subdivided-tree") {
        unsigned d = param_uint(params, "d", 0, true);
        unsigned len = param_uint(params, "len", 2);
        if (d < 3) fail_input("subdivided-tree family requires d >= 3");
        if (len == 0 || len % 2 != 0)
            fail_input("subdivided-tree requires even len >= 2 (odd runs admit bad paths)");
        return std::make_shared<SubdividedTree>(d, len);
    }
    fail_input("unknown lazy family: " + name);
}

}  // namespace asilab
