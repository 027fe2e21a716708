#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/instance.hpp"
#include "lrs/random.hpp"

namespace lrs {

enum class Distribution { Uniform, ShuffledMultiset };

struct GenSpec {
    std::size_t n = 0;
    std::size_t sigma = 0;
    std::optional<std::size_t> occ_cap;  // cap 2 gives strings in the two-occurrence class
    Distribution dist = Distribution::ShuffledMultiset;
    std::uint64_t seed = 0;
};

/// Random string over tokens s1..s<sigma>. The shuffled multiset uses every
/// symbol with balanced counts (so exactly sigma symbols); uniform draws each
/// position independently among symbols still under the cap.
inline Instance gen_string(const GenSpec& spec) {
    if (spec.n == 0 || spec.sigma == 0) {
        throw Error(ErrorKind::ParameterError, "n and sigma must be positive");
    }
    if (spec.occ_cap && (*spec.occ_cap == 0 || *spec.occ_cap * spec.sigma < spec.n)) {
        throw Error(ErrorKind::ParameterError, "occ-cap * sigma must be at least n");
    }
    Rng rng(spec.seed);
    std::vector<std::size_t> ids;
    ids.reserve(spec.n);
    if (spec.dist == Distribution::ShuffledMultiset) {
        if (spec.sigma > spec.n) {
            throw Error(ErrorKind::ParameterError, "shuffled multiset needs sigma <= n");
        }
        for (std::size_t a = 0; a < spec.sigma; ++a) {
            const std::size_t count = spec.n / spec.sigma + (a < spec.n % spec.sigma ? 1 : 0);
            ids.insert(ids.end(), count, a);
        }
        shuffle_in_place<std::size_t>(ids, rng);
    } else {
        std::vector<std::size_t> count(spec.sigma, 0);
        std::vector<std::size_t> open(spec.sigma);
        for (std::size_t a = 0; a < spec.sigma; ++a) open[a] = a;
        for (std::size_t i = 0; i < spec.n; ++i) {
            const std::size_t pick = static_cast<std::size_t>(uniform_below(rng, open.size()));
            const std::size_t a = open[pick];
            ids.push_back(a);
            if (spec.occ_cap && ++count[a] == *spec.occ_cap) {
                open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
            }
        }
    }
    std::vector<std::string> tokens;
    tokens.reserve(ids.size());
    for (auto a : ids) tokens.push_back("s" + std::to_string(a + 1));
    return Instance::from_tokens(tokens);
}

} // namespace lrs
