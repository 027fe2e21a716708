#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/instance.hpp"

namespace lrs {

struct TrivialYes {
    Solution solution;  // length >= k
};

struct Kernel {
    Instance instance;  // |Sigma| < k, every symbol occurs < k times, so |S| < k^2
};

using KernelOutcome = std::variant<TrivialYes, Kernel>;

/// Polynomial kernel for the solution length k. Either a witness of length
/// at least k is immediate, or the instance is already small.
inline KernelOutcome kernelize(const Instance& inst, std::size_t k) {
    if (k < 1) {
        throw Error(ErrorKind::ParameterOutOfRange, "kernelize needs k >= 1");
    }
    const OccIndex occ(inst);
    const Symbol top = occ.most_frequent();
    if (occ.positions(top).size() >= k) {
        const auto pos = occ.positions(top);
        return TrivialYes{validate_solution(inst, pos)};
    }
    if (inst.alphabet_size() >= k) {
        // ids follow first appearance
        std::vector<std::size_t> firsts;
        for (Symbol a = 0; a < k; ++a) {
            firsts.push_back(occ.positions(a).front());
        }
        return TrivialYes{validate_solution(inst, firsts)};
    }
    return Kernel{inst.with_target(k)};
}

} // namespace lrs
