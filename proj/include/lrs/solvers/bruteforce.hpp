#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/instance.hpp"

namespace lrs {

inline constexpr std::size_t bruteforce_max_n = 18;

namespace detail {

struct BruteSearch {
    std::span<const Symbol> s;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    void run(std::size_t pos, std::int64_t open, std::uint32_t used) {
        if (current.size() + (s.size() - pos) <= best.size()) {
            return;
        }
        if (pos == s.size()) {
            best = current;
            return;
        }
        const Symbol a = s[pos];
        const bool extends = open == static_cast<std::int64_t>(a);
        if (extends || !(used >> a & 1u)) {
            current.push_back(pos + 1);
            run(pos + 1, a, used | (1u << a));
            current.pop_back();
        }
        run(pos + 1, open, used);
    }
};

} // namespace detail

/// Exhaustive search over subsequences with a remaining-length bound.
/// Reference oracle for the faster solvers; n is capped.
inline Solution solve_bruteforce(const Instance& inst) {
    if (inst.size() > bruteforce_max_n) {
        throw Error(ErrorKind::InstanceTooLarge,
                    "brute force is capped at n = " + std::to_string(bruteforce_max_n));
    }
    detail::BruteSearch search{inst.symbols(), {}, {}};
    search.run(0, -1, 0);
    return validate_solution(inst, search.best);
}

} // namespace lrs
