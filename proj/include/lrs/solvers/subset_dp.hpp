#pragma once

// Exact solver, exponential in |Sigma| only.
//
// g(i, U) = longest run subsequence of S[1..i] whose set of run symbols is
// exactly U. With a = S[i] in U, the last run ends at i and starts at an
// occurrence p of a:
//     g(i, U) = max( g(i-1, U), max_p g(p-1, U \ {a}) + occ_a(p..i) ).

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/instance.hpp"

namespace lrs {

inline constexpr std::size_t subset_dp_max_alphabet = 24;
inline constexpr std::size_t subset_dp_max_cells = std::size_t{1} << 27;

struct SubsetDpResult {
    Solution solution;
    /// max_len_by_runs[r] = longest run subsequence with exactly r runs, r = 0..|Sigma|.
    std::vector<std::size_t> max_len_by_runs;
};

class SubsetDp {
public:
    explicit SubsetDp(const Instance& inst) : inst_(inst), occ_(inst) {
        const std::size_t sigma = inst.alphabet_size();
        if (sigma > subset_dp_max_alphabet) {
            throw Error(ErrorKind::AlphabetTooLarge,
                        "|Sigma| = " + std::to_string(sigma) + " exceeds " + std::to_string(subset_dp_max_alphabet));
        }
        n_ = inst.size();
        subsets_ = std::size_t{1} << sigma;
        if (n_ >= unreachable || (n_ + 1) > subset_dp_max_cells / subsets_) {
            throw Error(ErrorKind::InstanceTooLarge, "subset DP table exceeds the memory budget");
        }
        table_.assign(subsets_ * (n_ + 1), unreachable);
        fill();
    }

    /// g(i, U); nullopt when no run subsequence of S[1..i] has run set U.
    std::optional<std::size_t> value(std::size_t i, std::uint32_t set) const {
        const auto v = cell(set, i);
        if (v == unreachable) return std::nullopt;
        return v;
    }

    SubsetDpResult result() const {
        SubsetDpResult res;
        res.max_len_by_runs.assign(inst_.alphabet_size() + 1, 0);
        std::uint32_t best_set = 0;
        std::size_t best_len = 0;
        std::size_t best_end = 0;
        for (std::uint32_t set = 0; set < subsets_; ++set) {
            const auto v = cell(set, n_);
            const auto r = static_cast<std::size_t>(std::popcount(set));
            res.max_len_by_runs[r] = std::max<std::size_t>(res.max_len_by_runs[r], v);
            const std::size_t end = first_index_reaching(set, n_, v);
            if (v > best_len || (v == best_len && end < best_end)) {
                best_len = v;
                best_set = set;
                best_end = end;
            }
        }
        res.solution = validate_solution(inst_, backtrack(best_set));
        return res;
    }

private:
    static constexpr std::uint16_t unreachable = 0xFFFF;

    std::uint16_t cell(std::uint32_t set, std::size_t i) const { return table_[set * (n_ + 1) + i]; }
    std::uint16_t& cell(std::uint32_t set, std::size_t i) { return table_[set * (n_ + 1) + i]; }

    void fill() {
        const auto syms = inst_.symbols();
        cell(0, 0) = 0;
        for (std::uint32_t set = 0; set < subsets_; ++set) {
            for (std::size_t i = 1; i <= n_; ++i) {
                std::uint16_t best = cell(set, i - 1);
                const Symbol a = syms[i - 1];
                if (set >> a & 1u) {
                    const std::uint32_t rest = set ^ (1u << a);
                    const auto pos = occ_.positions(a);
                    const std::size_t m = occ_.prefix_count(a, i);
                    for (std::size_t t = 0; t < m; ++t) {
                        const auto prev = cell(rest, pos[t] - 1);
                        if (prev == unreachable) continue;
                        const auto cand = static_cast<std::uint16_t>(prev + (m - t));
                        if (best == unreachable || cand > best) best = cand;
                    }
                }
                cell(set, i) = best;
            }
        }
    }

    // g(., U) is nondecreasing in i, so this is the index where the value first appears.
    std::size_t first_index_reaching(std::uint32_t set, std::size_t i, std::uint16_t v) const {
        while (i > 0 && cell(set, i - 1) == v) --i;
        return i;
    }

    std::vector<std::size_t> backtrack(std::uint32_t set) const {
        std::vector<std::vector<std::size_t>> runs;
        std::size_t i = n_;
        while (set != 0) {
            const auto v = cell(set, i);
            i = first_index_reaching(set, i, v);
            const Symbol a = inst_.at(i);
            const std::uint32_t rest = set ^ (1u << a);
            const auto pos = occ_.positions(a);
            const std::size_t m = occ_.prefix_count(a, i);
            std::size_t chosen = m;
            for (std::size_t t = 0; t < m; ++t) {
                const auto prev = cell(rest, pos[t] - 1);
                if (prev != unreachable && prev + (m - t) == v) {
                    chosen = t;
                    break;
                }
            }
            if (chosen == m) {
                throw Error(ErrorKind::InvalidSolution, "subset DP backtracking failed");
            }
            runs.emplace_back(pos.begin() + static_cast<std::ptrdiff_t>(chosen),
                              pos.begin() + static_cast<std::ptrdiff_t>(m));
            set = rest;
            i = pos[chosen] - 1;
        }
        std::vector<std::size_t> indices;
        for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
            indices.insert(indices.end(), it->begin(), it->end());
        }
        return indices;
    }

    const Instance& inst_;
    OccIndex occ_;
    std::size_t n_ = 0;
    std::size_t subsets_ = 0;
    std::vector<std::uint16_t> table_;
};

/// Optimal solution plus the exact-r length profile. Ties prefer the smaller
/// final index, then the numerically smaller run-symbol bitmask.
inline SubsetDpResult solve_subset_dp(const Instance& inst) { return SubsetDp(inst).result(); }

} // namespace lrs
