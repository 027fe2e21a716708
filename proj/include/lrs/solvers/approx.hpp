#pragma once

#include <cstddef>
#include <vector>

#include "lrs/instance.hpp"

namespace lrs {

/// Longer of (1) one occurrence of every symbol and (2) every occurrence of
/// the most frequent symbol. Within a factor min(|Sigma|, occ) <= sqrt(|S|)
/// of optimal.
inline Solution approx_solve(const Instance& inst) {
    const OccIndex occ(inst);
    const Symbol top = occ.most_frequent();
    if (occ.positions(top).size() > inst.alphabet_size()) {
        return validate_solution(inst, occ.positions(top));
    }
    std::vector<std::size_t> firsts;
    for (Symbol a = 0; a < inst.alphabet_size(); ++a) {
        firsts.push_back(occ.positions(a).front());
    }
    return validate_solution(inst, firsts);
}

} // namespace lrs
