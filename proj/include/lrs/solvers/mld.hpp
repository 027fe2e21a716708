#pragma once

// Randomized decision procedure for "is there a run subsequence with exactly
// r runs and length exactly k", by multilinear monomial detection.
//
// The circuit, over variables x_a (a in Sigma):
//
//   P[i][0][0] = 1                      for all i >= 0
//   P[0][l][h] = 0                      for l > 0 or h > 0
//   P[i][l][h] = P[i-1][l][h]
//              + x_a * sum_{z=1}^{min(m,h)} c(i,l,h,z) * P[p_{m-z+1} - 1][l-1][h-z]
//
// where a = S[i] and p_1 < ... < p_m are the occurrences of a in S[1..i].
// A z-term places the last run on the z latest occurrences of a up to i.
// c(i,l,h,z) are random edge coefficients.
//
// Evaluated in GF(2^64)[Z_2^r] with x_a -> w_a (e_0 + e_{v_a}). Nonzero
// P[n][r][k] is a certificate; zero is wrong with probability <= 0.72 per trial.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/gf2.hpp"
#include "lrs/group_algebra.hpp"
#include "lrs/instance.hpp"
#include "lrs/random.hpp"

namespace lrs {

inline constexpr std::size_t default_trials = 20;

/// Per-trial false-negative bound: 1 - prod_{i=1}^{r} (1 - 2^{i-1-r}) < 0.72.
inline double mld_trial_failure_bound(unsigned r) {
    double success = 1.0;
    for (unsigned i = 1; i <= r; ++i) {
        success *= 1.0 - std::ldexp(1.0, static_cast<int>(i) - 1 - static_cast<int>(r));
    }
    return 1.0 - success;
}

/// Wire values P[i][l][h], one GroupVec per cell. Holds either every layer l
/// or only the two most recent ones.
class MldTable {
public:
    MldTable(std::size_t n, std::size_t runs, std::size_t max_len, unsigned dim, bool keep_all_layers)
        : n_(n), runs_(runs), max_len_(max_len), dim_(dim), keep_all_(keep_all_layers) {
        stride_ = std::size_t{1} << dim;
        const std::size_t layers = keep_all_ ? runs + 1 : 2;
        const std::size_t cells = layers * (n + 1) * (max_len + 1);
        if (cells > (std::size_t{1} << 31) / stride_) {
            throw Error(ErrorKind::InstanceTooLarge, "MLD table exceeds the memory budget");
        }
        data_.assign(cells * stride_, 0);
    }

    std::size_t prefix_count() const noexcept { return n_; }
    std::size_t runs() const noexcept { return runs_; }
    std::size_t max_len() const noexcept { return max_len_; }
    unsigned dim() const noexcept { return dim_; }
    bool keeps_layer(std::size_t l) const noexcept { return keep_all_ || l + 1 >= runs_; }

    std::span<const FieldElem> at(std::size_t i, std::size_t l, std::size_t h) const {
        return {data_.data() + offset(i, l, h), stride_};
    }
    std::span<FieldElem> at(std::size_t i, std::size_t l, std::size_t h) {
        return {data_.data() + offset(i, l, h), stride_};
    }

    GroupVec value(std::size_t i, std::size_t l, std::size_t h) const {
        GroupVec v = GroupVec::zero(dim_);
        auto src = at(i, l, h);
        std::copy(src.begin(), src.end(), v.coeffs().begin());
        return v;
    }

    bool is_zero(std::size_t i, std::size_t l, std::size_t h) const {
        for (auto c : at(i, l, h)) {
            if (c) return false;
        }
        return true;
    }

    void clear_layer(std::size_t l) {
        auto first = data_.begin() + static_cast<std::ptrdiff_t>(offset(0, l, 0));
        std::fill(first, first + static_cast<std::ptrdiff_t>((n_ + 1) * (max_len_ + 1) * stride_), 0);
    }

private:
    std::size_t offset(std::size_t i, std::size_t l, std::size_t h) const {
        const std::size_t slot = keep_all_ ? l : l % 2;
        return ((slot * (n_ + 1) + i) * (max_len_ + 1) + h) * stride_;
    }

    std::size_t n_, runs_, max_len_;
    unsigned dim_;
    bool keep_all_;
    std::size_t stride_;
    std::vector<FieldElem> data_;
};

/// Fills `table` with the circuit evaluated at `va`, for h = 0..table.max_len().
inline void evaluate_mld(const Instance& inst, const OccIndex& occ, const VarAssignment& va, MldTable& table) {
    const std::size_t n = inst.size();
    const std::size_t runs = table.runs();
    const std::size_t max_len = table.max_len();
    const std::size_t stride = std::size_t{1} << table.dim();
    const auto syms = inst.symbols();
    std::vector<FieldElem> acc(stride);

    table.clear_layer(0);
    for (std::size_t i = 0; i <= n; ++i) {
        table.at(i, 0, 0)[0] = 1;
    }
    for (std::size_t l = 1; l <= runs; ++l) {
        table.clear_layer(l);
        for (std::size_t i = 1; i <= n; ++i) {
            const Symbol a = syms[i - 1];
            const auto pos = occ.positions(a);
            const std::size_t m = occ.prefix_count(a, i);
            const std::uint64_t mask = va.masks[a];
            const FieldElem w = va.scalars[a];
            for (std::size_t h = 0; h <= max_len; ++h) {
                auto cur = table.at(i, l, h);
                auto below = table.at(i - 1, l, h);
                std::copy(below.begin(), below.end(), cur.begin());
                // P[j][l-1][h'] can be nonzero only for l-1 <= h' <= j.
                if (h < l || h > i) continue;
                const std::size_t zmax = std::min(m, h - (l - 1));
                bool any = false;
                for (std::size_t z = 1; z <= zmax; ++z) {
                    const std::size_t before = pos[m - z] - 1;
                    if (h - z > before) continue;
                    if (!any) {
                        std::fill(acc.begin(), acc.end(), 0);
                        any = true;
                    }
                    const FieldElem c = gf_mul(va.edge_coefficient(i, l, h, z), w);
                    gf_axpy(acc, c, table.at(before, l - 1, h - z));
                }
                if (!any) continue;
                for (std::size_t g = 0; g < stride; ++g) {
                    cur[g] ^= acc[g] ^ acc[g ^ mask];
                }
            }
        }
    }
}

struct KVerdict {
    std::size_t k = 0;
    bool yes = false;
    std::optional<std::uint64_t> witness_seed;
};

struct TrialReport {
    std::uint64_t master_seed = 0;
    std::size_t runs = 0;
    std::size_t trials = 0;      // requested T
    std::size_t trials_run = 0;  // executed before stopping
    std::vector<KVerdict> verdicts;
    double elapsed_ms = 0.0;
};

namespace detail {

inline void check_mld_params(const Instance& inst, std::size_t r, std::optional<std::size_t> k, std::size_t trials) {
    const std::size_t upper = k ? std::min(inst.alphabet_size(), *k) : inst.alphabet_size();
    if (r < 1 || r > upper) {
        throw Error(ErrorKind::ParameterOutOfRange, "r = " + std::to_string(r) + " outside [1, " +
                                                        std::to_string(upper) + "]");
    }
    if (k && *k > inst.size()) {
        throw Error(ErrorKind::ParameterOutOfRange, "k = " + std::to_string(*k) + " exceeds |S|");
    }
    if (trials < 1) {
        throw Error(ErrorKind::ParameterOutOfRange, "at least one trial is required");
    }
    if (r > max_group_dim) {
        throw Error(ErrorKind::InstanceTooLarge, "r = " + std::to_string(r) + " exceeds the group dimension cap");
    }
}

inline double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

} // namespace detail

/// Decides whether a run subsequence with exactly r runs and length exactly k
/// exists. "yes" is always correct; stops at the first witnessing trial.
inline TrialReport mld_decide(const Instance& inst, std::size_t r, std::size_t k,
                              std::size_t trials = default_trials, std::uint64_t seed = 0) {
    detail::check_mld_params(inst, r, k, trials);
    const auto start = std::chrono::steady_clock::now();
    const OccIndex occ(inst);
    const auto dim = static_cast<unsigned>(r);
    MldTable table(inst.size(), r, k, dim, false);

    TrialReport report;
    report.master_seed = seed;
    report.runs = r;
    report.trials = trials;
    KVerdict verdict{k, false, std::nullopt};
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s = trial_seed(seed, t);
        evaluate_mld(inst, occ, draw_assignment(inst, dim, s), table);
        ++report.trials_run;
        if (!table.is_zero(inst.size(), r, k)) {
            verdict.yes = true;
            verdict.witness_seed = s;
            break;
        }
    }
    report.verdicts.push_back(verdict);
    report.elapsed_ms = detail::ms_since(start);
    return report;
}

struct MldRunsResult {
    std::size_t max_k = 0;
    TrialReport report;  // verdicts for k = |S| down to r
};

/// Largest k with a yes-verdict for exactly r runs. All T trials are run;
/// each evaluates the circuit once for every length h <= |S|, which yields
/// the same per-k values as separate mld_decide calls with the same seed.
inline MldRunsResult mld_solve_for_runs(const Instance& inst, std::size_t r, std::size_t trials = default_trials,
                                        std::uint64_t seed = 0) {
    detail::check_mld_params(inst, r, std::nullopt, trials);
    const auto start = std::chrono::steady_clock::now();
    const std::size_t n = inst.size();
    const OccIndex occ(inst);
    const auto dim = static_cast<unsigned>(r);
    MldTable table(n, r, n, dim, false);

    std::vector<std::optional<std::uint64_t>> witness(n + 1);
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t s = trial_seed(seed, t);
        evaluate_mld(inst, occ, draw_assignment(inst, dim, s), table);
        for (std::size_t h = r; h <= n; ++h) {
            if (!witness[h] && !table.is_zero(n, r, h)) witness[h] = s;
        }
    }

    MldRunsResult res;
    res.report.master_seed = seed;
    res.report.runs = r;
    res.report.trials = trials;
    res.report.trials_run = trials;
    for (std::size_t k = n; k >= r; --k) {
        res.report.verdicts.push_back({k, witness[k].has_value(), witness[k]});
        if (witness[k] && res.max_k == 0) res.max_k = k;
        if (k == 0) break;
    }
    res.report.elapsed_ms = detail::ms_since(start);
    if (res.max_k == 0) {
        throw Error(ErrorKind::NoSolutionFound, "no trial produced a nonzero evaluation for r = " + std::to_string(r));
    }
    return res;
}

} // namespace lrs
