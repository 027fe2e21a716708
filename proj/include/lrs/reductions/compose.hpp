#pragma once

// OR-composition of t instances sharing (|S|, |Sigma|, k):
//   S' = $^{2n} s(S_1) #^{2n}  $^{2n} s(S_2) #^{2n} ... $^{2n} s(S_t) #^{2n}
//   k' = k + (t+1) 2n
// where s renames the j-th symbol (lexicographic token order) of each input
// to "j". S' has a run subsequence of length >= k' iff some S_i has one of
// length >= k (for k >= 1).

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/instance.hpp"

namespace lrs {

inline constexpr const char* dollar_token = "SEP_DOLLAR";
inline constexpr const char* hash_token = "SEP_HASH";

struct CompositionResult {
    Instance instance;
    std::size_t k_prime = 0;
    std::vector<std::pair<std::size_t, std::size_t>> spans;  // 1-based inclusive span of s(S_i)
    std::size_t n = 0;
    std::size_t m = 0;
    std::size_t t = 0;
};

inline CompositionResult cross_compose(std::span<const Instance> inputs, std::size_t k) {
    if (inputs.empty()) {
        throw Error(ErrorKind::ParameterError, "composition needs at least one instance");
    }
    CompositionResult res;
    res.n = inputs.front().size();
    res.m = inputs.front().alphabet_size();
    res.t = inputs.size();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (inputs[i].size() != res.n) {
            throw Error(ErrorKind::HeterogeneousInstances, "instance " + std::to_string(i + 1) + " has |S| = " +
                                                               std::to_string(inputs[i].size()) + ", expected " +
                                                               std::to_string(res.n), i + 1);
        }
        if (inputs[i].alphabet_size() != res.m) {
            throw Error(ErrorKind::HeterogeneousInstances, "instance " + std::to_string(i + 1) + " has |Sigma| = " +
                                                               std::to_string(inputs[i].alphabet_size()) +
                                                               ", expected " + std::to_string(res.m), i + 1);
        }
    }

    const std::size_t pad = 2 * res.n;
    std::vector<std::string> tokens;
    tokens.reserve(inputs.size() * (res.n + 2 * pad));
    for (const auto& inst : inputs) {
        std::vector<std::string> sorted(inst.tokens().begin(), inst.tokens().end());
        std::sort(sorted.begin(), sorted.end());
        std::unordered_map<std::string, std::string> rename;
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            rename.emplace(sorted[j], std::to_string(j + 1));
        }
        tokens.insert(tokens.end(), pad, dollar_token);
        const std::size_t begin = tokens.size() + 1;
        for (Symbol a : inst.symbols()) {
            tokens.push_back(rename.at(inst.token(a)));
        }
        res.spans.emplace_back(begin, tokens.size());
        tokens.insert(tokens.end(), pad, hash_token);
    }
    res.k_prime = k + (res.t + 1) * pad;
    res.instance = Instance::from_tokens(tokens, res.k_prime);
    return res;
}

} // namespace lrs
