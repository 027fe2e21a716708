#pragma once

// Seeded benchmark suites. Every row is a pure function of (suite, master
// seed, row position); only wall_ms varies between reruns.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <iomanip>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lrs/cli/generate.hpp"
#include "lrs/error.hpp"
#include "lrs/gf2.hpp"
#include "lrs/random.hpp"
#include "lrs/solvers/mld.hpp"
#include "lrs/solvers/subset_dp.hpp"

namespace lrs {

inline constexpr const char* bench_header = "solver,n,sigma,occ_cap,r,k,trials,seed,verdict,length,wall_ms";

struct BenchRecord {
    std::string solver;
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::optional<std::size_t> occ_cap;
    std::optional<std::size_t> r;
    std::optional<std::size_t> k;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::string verdict;
    std::size_t length = 0;
    double wall_ms = 0.0;
};

inline std::string to_csv(const BenchRecord& rec) {
    auto opt = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string(); };
    std::ostringstream row;
    row << rec.solver << ',' << rec.n << ',' << rec.sigma << ',' << opt(rec.occ_cap) << ',' << opt(rec.r) << ','
        << opt(rec.k) << ',' << rec.trials << ',' << rec.seed << ',' << rec.verdict << ',' << rec.length << ','
        << std::fixed << std::setprecision(3) << rec.wall_ms;
    return row.str();
}

enum class BenchSuite { ScalingR, ScalingN, DpVsMld };

struct BenchOptions {
    std::size_t repetitions = 5;
    std::size_t trials = 10;
    bool parallel = false;
};

namespace detail {

using BenchJob = std::function<std::vector<BenchRecord>()>;

inline BenchRecord mld_row(const Instance& inst, std::size_t sigma, std::size_t r, std::size_t trials,
                           std::uint64_t seed) {
    BenchRecord rec{"mld", inst.size(), sigma, std::nullopt, r, std::nullopt, trials, seed, "no", 0, 0.0};
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto res = mld_solve_for_runs(inst, r, trials, seed);
        rec.verdict = "yes";
        rec.k = res.max_k;
        rec.length = res.max_k;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NoSolutionFound) throw;
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

inline std::vector<BenchJob> scaling_r_jobs(std::uint64_t seed, const BenchOptions& opt) {
    std::vector<BenchJob> jobs;
    for (std::size_t rep = 0; rep < opt.repetitions; ++rep) {
        for (std::size_t r = 2; r <= 8; ++r) {
            jobs.push_back([=] {
                const auto s = trial_seed(seed, rep);
                const auto inst = gen_string({40, 12, std::nullopt, Distribution::ShuffledMultiset, s});
                return std::vector<BenchRecord>{mld_row(inst, 12, r, opt.trials, s)};
            });
        }
    }
    return jobs;
}

inline std::vector<BenchJob> scaling_n_jobs(std::uint64_t seed, const BenchOptions& opt) {
    std::vector<BenchJob> jobs;
    for (std::size_t rep = 0; rep < opt.repetitions; ++rep) {
        for (std::size_t n = 10; n <= 60; n += 10) {
            jobs.push_back([=] {
                const auto s = trial_seed(seed, rep * 100 + n);
                const auto inst = gen_string({n, 8, std::nullopt, Distribution::ShuffledMultiset, s});
                return std::vector<BenchRecord>{mld_row(inst, 8, 4, opt.trials, s)};
            });
        }
    }
    return jobs;
}

inline std::vector<BenchJob> dp_vs_mld_jobs(std::uint64_t seed, const BenchOptions& opt) {
    std::vector<BenchJob> jobs;
    const std::size_t corpus = 20 * opt.repetitions;
    for (std::size_t item = 0; item < corpus; ++item) {
        jobs.push_back([=] {
            const auto s = trial_seed(seed, item);
            Rng rng(s);
            const std::size_t n = 6 + static_cast<std::size_t>(uniform_below(rng, 9));
            const std::size_t sigma = 2 + static_cast<std::size_t>(uniform_below(rng, 3));
            const auto inst = gen_string({n, sigma, std::nullopt, Distribution::ShuffledMultiset, s});
            std::vector<BenchRecord> rows;
            const auto start = std::chrono::steady_clock::now();
            const auto dp = solve_subset_dp(inst);
            BenchRecord exact{"dp", n, sigma, std::nullopt, std::nullopt, std::nullopt, 0, s, "exact",
                              dp.solution.length(), 0.0};
            exact.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            rows.push_back(exact);
            for (std::size_t r = 1; r <= sigma; ++r) {
                auto rec = mld_row(inst, sigma, r, opt.trials, s);
                rec.verdict = rec.length == dp.max_len_by_runs[r] ? "agree" : "disagree";
                rows.push_back(rec);
            }
            return rows;
        });
    }
    return jobs;
}

} // namespace detail

/// Writes metadata comments, the header and one row per run. Returns the row count.
inline std::size_t run_bench(BenchSuite suite, std::uint64_t seed, const BenchOptions& opt, std::ostream& out) {
    std::vector<detail::BenchJob> jobs;
    const char* name = "";
    switch (suite) {
    case BenchSuite::ScalingR:
        jobs = detail::scaling_r_jobs(seed, opt);
        name = "scaling-r";
        break;
    case BenchSuite::ScalingN:
        jobs = detail::scaling_n_jobs(seed, opt);
        name = "scaling-n";
        break;
    case BenchSuite::DpVsMld:
        jobs = detail::dp_vs_mld_jobs(seed, opt);
        name = "dp-vs-mld";
        break;
    }
    out << "# suite=" << name << " master_seed=" << seed << " field=GF(2^64) poly=" << gf2::reduction_name
        << " rng=" << rng_name << '\n';
    out << bench_header << '\n';

    std::mutex write_lock;
    std::size_t rows = 0;
    auto emit = [&](const std::vector<BenchRecord>& recs) {
        std::lock_guard<std::mutex> guard(write_lock);
        for (const auto& rec : recs) {
            out << to_csv(rec) << '\n';
            ++rows;
        }
    };

    if (!opt.parallel) {
        for (auto& job : jobs) emit(job());
        return rows;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_lock;
    const std::size_t workers = std::max<std::size_t>(2, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            try {
                for (std::size_t j = next++; j < jobs.size(); j = next++) emit(jobs[j]());
            } catch (...) {
                std::lock_guard<std::mutex> guard(failure_lock);
                if (!failure) failure = std::current_exception();
                next = jobs.size();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

} // namespace lrs
