#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/random.hpp"

namespace lrs {

using Edge = std::pair<std::size_t, std::size_t>;  // 1-based, first < second

/// Simple 3-regular graph on vertices 1..n, edges kept in lexicographic order.
class CubicGraph {
public:
    CubicGraph() = default;

    static CubicGraph make(std::size_t n, std::vector<Edge> edges) {
        if (n % 2 != 0) {
            throw Error(ErrorKind::OddVertexCount, "cubic graphs have an even vertex count, got " + std::to_string(n));
        }
        if (n < 4) {
            throw Error(ErrorKind::NotCubic, "a simple cubic graph needs at least 4 vertices");
        }
        CubicGraph g;
        g.n_ = n;
        g.adj_.assign(n + 1, {});
        for (auto& [u, v] : edges) {
            if (u == v) {
                throw Error(ErrorKind::NotCubic, "self-loop at vertex " + std::to_string(u), u);
            }
            if (u < 1 || v < 1 || u > n || v > n) {
                throw Error(ErrorKind::NotCubic, "edge endpoint outside [1, n]");
            }
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
            throw Error(ErrorKind::NotCubic, "duplicate edge");
        }
        for (auto [u, v] : edges) {
            g.adj_[u].push_back(v);
            g.adj_[v].push_back(u);
        }
        for (std::size_t v = 1; v <= n; ++v) {
            if (g.adj_[v].size() != 3) {
                throw Error(ErrorKind::NotCubic,
                            "vertex " + std::to_string(v) + " has degree " + std::to_string(g.adj_[v].size()), v);
            }
            std::sort(g.adj_[v].begin(), g.adj_[v].end());
        }
        g.edges_ = std::move(edges);
        return g;
    }

    std::size_t n() const noexcept { return n_; }
    std::size_t m() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    /// Sorted neighbours of v.
    const std::vector<std::size_t>& neighbors(std::size_t v) const { return adj_.at(v); }

    bool adjacent(std::size_t u, std::size_t v) const {
        const auto& nb = adj_.at(u);
        return std::find(nb.begin(), nb.end(), v) != nb.end();
    }

    /// Position of edge {u, v} in the lexicographic edge order.
    std::size_t edge_index(std::size_t u, std::size_t v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
        if (it == edges_.end() || *it != Edge{u, v}) {
            throw Error(ErrorKind::ParameterError, "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        return static_cast<std::size_t>(it - edges_.begin());
    }

    bool is_independent(const std::vector<std::size_t>& set) const {
        for (std::size_t a = 0; a < set.size(); ++a) {
            for (std::size_t b = a + 1; b < set.size(); ++b) {
                if (set[a] == set[b] || adjacent(set[a], set[b])) return false;
            }
        }
        return true;
    }

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::size_t>> adj_;
};

/// Graph file: "n m" then m lines "i j" (1-based, i < j).
inline CubicGraph parse_graph(std::istream& in) {
    std::size_t n = 0, m = 0;
    if (!(in >> n >> m)) {
        throw Error(ErrorKind::ParseError, "graph file must start with \"n m\"", 1);
    }
    std::vector<Edge> edges;
    for (std::size_t e = 0; e < m; ++e) {
        std::size_t i = 0, j = 0;
        if (!(in >> i >> j)) {
            throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " edge lines", e + 2);
        }
        if (i >= j) {
            throw Error(ErrorKind::ParseError, "edge line must satisfy i < j", e + 2);
        }
        edges.emplace_back(i, j);
    }
    std::string extra;
    if (in >> extra) {
        throw Error(ErrorKind::ParseError, "trailing content after " + std::to_string(m) + " edges");
    }
    return CubicGraph::make(n, std::move(edges));
}

inline CubicGraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline std::string format_graph(const CubicGraph& g) {
    std::string out = std::to_string(g.n()) + ' ' + std::to_string(g.m()) + '\n';
    for (auto [i, j] : g.edges()) {
        out += std::to_string(i) + ' ' + std::to_string(j) + '\n';
    }
    return out;
}

inline constexpr std::size_t cubic_rejection_budget = 10000;

/// Pairing (configuration) model: match 3n half-edges uniformly, reject
/// loops and parallel edges, retry.
inline CubicGraph gen_random_cubic(std::size_t n, std::uint64_t seed) {
    if (n < 4 || n % 2 != 0) {
        throw Error(ErrorKind::InvalidN, "n must be even and at least 4, got " + std::to_string(n));
    }
    Rng rng(seed);
    std::vector<std::size_t> points(3 * n);
    for (std::size_t attempt = 0; attempt < cubic_rejection_budget; ++attempt) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            points[p] = p / 3 + 1;
        }
        shuffle_in_place<std::size_t>(points, rng);
        std::vector<Edge> edges;
        bool simple = true;
        for (std::size_t p = 0; p < points.size() && simple; p += 2) {
            auto u = points[p], v = points[p + 1];
            if (u == v) {
                simple = false;
                break;
            }
            edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return CubicGraph::make(n, std::move(edges));
    }
    throw Error(ErrorKind::RejectionLimitExceeded,
                "no simple pairing after " + std::to_string(cubic_rejection_budget) + " attempts");
}

inline constexpr std::size_t mis_max_n = 20;

namespace detail {

struct MisSearch {
    std::vector<std::uint32_t> closed;  // N[v] as bitmask, vertex v at bit v-1
    std::uint32_t best = 0;

    void run(std::uint32_t candidates, std::uint32_t chosen) {
        if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best)) return;
        if (candidates == 0) {
            best = chosen;
            return;
        }
        const int v = std::countr_zero(candidates);
        run(candidates & ~closed[static_cast<std::size_t>(v)], chosen | (1u << v));
        run(candidates & ~(1u << v), chosen);
    }
};

} // namespace detail

/// Exact maximum independent set by include/exclude branching; sorted, 1-based.
inline std::vector<std::size_t> mis_bruteforce(const CubicGraph& g) {
    if (g.n() > mis_max_n) {
        throw Error(ErrorKind::GraphTooLarge, "exact MIS is capped at n = " + std::to_string(mis_max_n));
    }
    detail::MisSearch search;
    search.closed.assign(g.n(), 0);
    for (std::size_t v = 1; v <= g.n(); ++v) {
        search.closed[v - 1] = 1u << (v - 1);
        for (auto u : g.neighbors(v)) {
            search.closed[v - 1] |= 1u << (u - 1);
        }
    }
    const std::uint32_t all = g.n() == 32 ? ~0u : ((1u << g.n()) - 1);
    search.run(all, 0);
    std::vector<std::size_t> out;
    for (std::size_t v = 1; v <= g.n(); ++v) {
        if (search.best >> (v - 1) & 1u) out.push_back(v);
    }
    return out;
}

} // namespace lrs
