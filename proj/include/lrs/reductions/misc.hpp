#pragma once

// Reduction from maximum independent set on cubic graphs to run subsequences
// with at most two occurrences per symbol.
//
//   S(v_i)   = w_i x^i_{i,a} x^i_{i,b} x^i_{i,c} w_i      (neighbours a < b < c)
//   S(e_ij)  = e^1_ij x^i_ij e^2_ij e^1_ij x^j_ij e^2_ij
//   Sep_t    = #_{t,1} #_{t,2} #_{t,3}
//   S        = S(v_1) Sep_1 ... S(v_n) Sep_n  S(e_1) Sep_{n+1} ... S(e_m) Sep_{n+m}
//
// An independent set of size q gives a run subsequence of length
// 5q + 4(n-q) + 3m + 3(n+m), and any run subsequence can be rewritten into a
// canonical one of at least the same length from which such a set is read off.

#include <algorithm>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/instance.hpp"
#include "lrs/reductions/cubic_graph.hpp"

namespace lrs {

enum class SymbolRole { Vertex, Incidence, EdgeFirst, EdgeSecond, Separator };

inline const char* to_string(SymbolRole role) {
    switch (role) {
    case SymbolRole::Vertex: return "vertex";
    case SymbolRole::Incidence: return "incidence";
    case SymbolRole::EdgeFirst: return "edge1";
    case SymbolRole::EdgeSecond: return "edge2";
    case SymbolRole::Separator: return "separator";
    }
    return "?";
}

enum class BlockKind { Vertex, Edge, Separator };

struct BlockSpan {
    BlockKind kind;
    std::size_t index;  // vertex (1-based), edge (0-based, lexicographic), separator (1-based)
    std::size_t begin;  // 1-based, inclusive
    std::size_t end;
};

struct RoleEntry {
    SymbolRole role;
    std::size_t vertex = 0;  // w_i: i; x^v_{i,j}: v
    std::size_t edge = 0;    // edge index, for incidence and edge symbols
    std::size_t block = 0;   // index into ReductionMap::blocks of the first occurrence
};

struct ReductionMap {
    CubicGraph graph;
    Instance instance;
    std::vector<RoleEntry> roles;          // by symbol id
    std::vector<BlockSpan> blocks;         // string order
    std::vector<std::size_t> vertex_block; // vertex -> block, slot 0 unused
    std::vector<std::size_t> edge_block;   // edge index -> block
    std::vector<std::size_t> block_of;     // position -> block, slot 0 unused

    std::size_t threshold(std::size_t q) const {
        const std::size_t n = graph.n(), m = graph.m();
        return 5 * q + 4 * (n - q) + 3 * m + 3 * (n + m);
    }
};

namespace detail {

inline std::string vertex_token(std::size_t i) { return "w_" + std::to_string(i); }

inline std::string incidence_token(const Edge& e, std::size_t owner) {
    return "x_" + std::to_string(e.first) + "_" + std::to_string(e.second) + "^" + std::to_string(owner);
}

inline std::string edge_token(const Edge& e, int which) {
    return "e_" + std::to_string(e.first) + "_" + std::to_string(e.second) + "^" + std::to_string(which);
}

inline std::string sep_token(std::size_t t, int z) { return "sep_" + std::to_string(t) + "_" + std::to_string(z); }

} // namespace detail

inline ReductionMap misc_encode(const CubicGraph& graph) {
    struct Pending {
        std::string token;
        SymbolRole role;
        std::size_t vertex, edge;
    };
    std::vector<Pending> seq;
    ReductionMap map;
    map.graph = graph;
    const std::size_t n = graph.n();
    const auto& edges = graph.edges();

    auto open_block = [&](BlockKind kind, std::size_t index) {
        map.blocks.push_back({kind, index, seq.size() + 1, 0});
    };
    auto close_block = [&] { map.blocks.back().end = seq.size(); };
    std::size_t sep_count = 0;
    auto separator = [&] {
        ++sep_count;
        open_block(BlockKind::Separator, sep_count);
        for (int z = 1; z <= 3; ++z) {
            seq.push_back({detail::sep_token(sep_count, z), SymbolRole::Separator, 0, 0});
        }
        close_block();
    };

    map.vertex_block.assign(n + 1, 0);
    for (std::size_t v = 1; v <= n; ++v) {
        map.vertex_block[v] = map.blocks.size();
        open_block(BlockKind::Vertex, v);
        seq.push_back({detail::vertex_token(v), SymbolRole::Vertex, v, 0});
        for (auto u : graph.neighbors(v)) {
            const std::size_t e = graph.edge_index(u, v);
            seq.push_back({detail::incidence_token(edges[e], v), SymbolRole::Incidence, v, e});
        }
        seq.push_back({detail::vertex_token(v), SymbolRole::Vertex, v, 0});
        close_block();
        separator();
    }
    map.edge_block.assign(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const auto [i, j] = edges[e];
        map.edge_block[e] = map.blocks.size();
        open_block(BlockKind::Edge, e);
        seq.push_back({detail::edge_token(edges[e], 1), SymbolRole::EdgeFirst, 0, e});
        seq.push_back({detail::incidence_token(edges[e], i), SymbolRole::Incidence, i, e});
        seq.push_back({detail::edge_token(edges[e], 2), SymbolRole::EdgeSecond, 0, e});
        seq.push_back({detail::edge_token(edges[e], 1), SymbolRole::EdgeFirst, 0, e});
        seq.push_back({detail::incidence_token(edges[e], j), SymbolRole::Incidence, j, e});
        seq.push_back({detail::edge_token(edges[e], 2), SymbolRole::EdgeSecond, 0, e});
        close_block();
        separator();
    }

    std::vector<std::string> tokens;
    tokens.reserve(seq.size());
    for (const auto& p : seq) tokens.push_back(p.token);
    map.instance = Instance::from_tokens(tokens);

    map.block_of.assign(seq.size() + 1, 0);
    for (std::size_t b = 0; b < map.blocks.size(); ++b) {
        for (std::size_t pos = map.blocks[b].begin; pos <= map.blocks[b].end; ++pos) {
            map.block_of[pos] = b;
        }
    }
    map.roles.resize(map.instance.alphabet_size());
    std::vector<char> seen(map.roles.size(), 0);
    for (std::size_t pos = 1; pos <= seq.size(); ++pos) {
        const Symbol id = map.instance.at(pos);
        if (seen[id]) continue;
        seen[id] = 1;
        const auto& p = seq[pos - 1];
        map.roles[id] = {p.role, p.vertex, p.edge, map.block_of[pos]};
    }
    return map;
}

/// Solution built from an independent set: w_i w_i for members, the left
/// length-4 form otherwise, each edge block as long as the free incidence
/// symbols allow, and every separator.
inline Solution misc_solution_from_is(const ReductionMap& map, std::vector<std::size_t> set) {
    const auto& g = map.graph;
    std::sort(set.begin(), set.end());
    for (auto v : set) {
        if (v < 1 || v > g.n()) {
            throw Error(ErrorKind::NotIndependent, "vertex " + std::to_string(v) + " out of range", v);
        }
    }
    if (!g.is_independent(set)) {
        throw Error(ErrorKind::NotIndependent, "vertex set is not independent");
    }
    std::vector<char> in_set(g.n() + 1, 0);
    for (auto v : set) in_set[v] = 1;

    std::vector<std::size_t> idx;
    for (const auto& blk : map.blocks) {
        const std::size_t b = blk.begin;
        switch (blk.kind) {
        case BlockKind::Vertex:
            if (in_set[blk.index]) {
                idx.insert(idx.end(), {b, b + 4});
            } else {
                idx.insert(idx.end(), {b, b + 1, b + 2, b + 3});
            }
            break;
        case BlockKind::Edge: {
            const auto [i, j] = g.edges()[blk.index];
            if (in_set[i]) {
                idx.insert(idx.end(), {b, b + 1, b + 2, b + 5});
            } else if (in_set[j]) {
                idx.insert(idx.end(), {b, b + 3, b + 4, b + 5});
            } else {
                idx.insert(idx.end(), {b, b + 3, b + 5});
            }
            break;
        }
        case BlockKind::Separator:
            idx.insert(idx.end(), {b, b + 1, b + 2});
            break;
        }
    }
    return validate_solution(map.instance, idx);
}

namespace detail {

// Rewriting steps:
//  (a) drop runs whose occurrences lie in different blocks;
//  (b) vertex block with <= 2 kept symbols -> w w, otherwise w x x x;
//  (c) for each edge joining two w w blocks, the smaller endpoint -> w x x x.
// The surviving w w vertices form an independent set.
inline std::vector<std::size_t> canonical_vertex_set(const ReductionMap& map, const Solution& sol) {
    const auto& g = map.graph;
    std::vector<std::size_t> kept(map.blocks.size(), 0);
    for (const auto& run : sol.runs()) {
        const auto first = map.block_of[run.indices.front()];
        const auto last = map.block_of[run.indices.back()];
        if (first != last) continue;
        kept[first] += run.length();
    }
    std::vector<char> pair(g.n() + 1, 0);
    for (std::size_t v = 1; v <= g.n(); ++v) {
        pair[v] = kept[map.vertex_block[v]] <= 2;
    }
    for (auto [i, j] : g.edges()) {
        if (pair[i] && pair[j]) pair[i] = 0;
    }
    std::vector<std::size_t> set;
    for (std::size_t v = 1; v <= g.n(); ++v) {
        if (pair[v]) set.push_back(v);
    }
    return set;
}

inline Solution checked(const ReductionMap& map, std::span<const std::size_t> indices) {
    try {
        return validate_solution(map.instance, indices);
    } catch (const Error& e) {
        throw Error(ErrorKind::InvalidSolution, e.what(), e.where());
    }
}

} // namespace detail

/// Canonical run subsequence at least as long as `sol`.
inline Solution canonicalize(const ReductionMap& map, const Solution& sol) {
    const auto valid = detail::checked(map, sol.indices());
    return misc_solution_from_is(map, detail::canonical_vertex_set(map, valid));
}

/// Independent set read off the canonical form of `sol`: the vertices whose
/// block keeps only w_i w_i. Its size q satisfies |sol| <= threshold(q).
inline std::vector<std::size_t> misc_decode(const ReductionMap& map, const Solution& sol) {
    const auto valid = detail::checked(map, sol.indices());
    return detail::canonical_vertex_set(map, valid);
}

/// True iff `sol` is exactly the canonical form of the independent set it encodes.
inline bool is_canonical(const ReductionMap& map, const Solution& sol) {
    std::vector<std::size_t> set;
    std::size_t at = 0;
    const auto idx = sol.indices();
    for (std::size_t v = 1; v <= map.graph.n(); ++v) {
        const auto& blk = map.blocks[map.vertex_block[v]];
        std::size_t count = 0;
        while (at < idx.size() && idx[at] < blk.begin) ++at;
        for (std::size_t t = at; t < idx.size() && idx[t] <= blk.end; ++t) ++count;
        if (count == 2) set.push_back(v);
    }
    if (!map.graph.is_independent(set)) return false;
    const auto expected = misc_solution_from_is(map, set);
    return std::equal(expected.indices().begin(), expected.indices().end(), idx.begin(), idx.end());
}

inline std::string block_id(const ReductionMap& map, std::size_t b) {
    const auto& blk = map.blocks[b];
    switch (blk.kind) {
    case BlockKind::Vertex: return "V" + std::to_string(blk.index);
    case BlockKind::Edge: {
        const auto [i, j] = map.graph.edges()[blk.index];
        return "E" + std::to_string(i) + "_" + std::to_string(j);
    }
    case BlockKind::Separator: return "SEP" + std::to_string(blk.index);
    }
    return "?";
}

/// Sidecar role file: one line "<token> <role> <block-id>" per symbol, in id
/// order. Incidence symbols name both blocks they occur in, comma separated.
inline void write_roles(std::ostream& out, const ReductionMap& map) {
    for (Symbol id = 0; id < map.roles.size(); ++id) {
        const auto& r = map.roles[id];
        out << map.instance.token(id) << ' ' << to_string(r.role) << ' ' << block_id(map, r.block);
        if (r.role == SymbolRole::Incidence) {
            out << ',' << block_id(map, map.edge_block[r.edge]);
        }
        out << '\n';
    }
}

struct RoleLine {
    std::string token;
    std::string role;
    std::string block;
};

inline std::vector<RoleLine> read_roles(std::istream& in) {
    std::vector<RoleLine> lines;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream fields(line);
        RoleLine r;
        std::string extra;
        if (!(fields >> r.token >> r.role >> r.block) || (fields >> extra)) {
            throw Error(ErrorKind::ParseError, "role line needs exactly three fields (line " +
                                                   std::to_string(line_no) + ")", line_no);
        }
        lines.push_back(std::move(r));
    }
    return lines;
}

} // namespace lrs
