#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lrs/instance.hpp"
#include "lrs/solvers/subset_dp.hpp"

namespace lrs {

/// Bins are the positions of S; each token is the contig a bin maps to.
struct ContigRun {
    std::string contig;
    std::size_t first_bin;
    std::size_t last_bin;
    std::vector<std::size_t> selected;
};

struct ScaffoldReport {
    Solution solution;
    std::vector<ContigRun> runs;
    std::vector<std::size_t> dropped;
};

inline ScaffoldReport scaffold(const Instance& inst) {
    ScaffoldReport rep;
    rep.solution = solve_subset_dp(inst).solution;
    std::vector<char> kept(inst.size() + 1, 0);
    for (const auto& run : rep.solution.runs()) {
        rep.runs.push_back({inst.token(run.symbol), run.indices.front(), run.indices.back(), run.indices});
        for (auto i : run.indices) kept[i] = 1;
    }
    for (std::size_t i = 1; i <= inst.size(); ++i) {
        if (!kept[i]) rep.dropped.push_back(i);
    }
    return rep;
}

namespace detail {
inline std::string join(const std::vector<std::size_t>& xs) {
    std::string out;
    for (std::size_t t = 0; t < xs.size(); ++t) {
        if (t) out += ',';
        out += std::to_string(xs[t]);
    }
    return out;
}
} // namespace detail

/// "length L", one "run <contig> bins A-B selected i,j,..." line per run, "dropped ...".
inline std::string format_scaffold(const ScaffoldReport& rep) {
    std::string out = "length " + std::to_string(rep.solution.length()) + '\n';
    for (const auto& r : rep.runs) {
        out += "run " + r.contig + " bins " + std::to_string(r.first_bin) + '-' + std::to_string(r.last_bin) +
               " selected " + detail::join(r.selected) + '\n';
    }
    out += "dropped";
    if (!rep.dropped.empty()) out += ' ' + detail::join(rep.dropped);
    out += '\n';
    return out;
}

} // namespace lrs
