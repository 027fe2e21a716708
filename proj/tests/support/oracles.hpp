#pragma once

// Independent reference implementations used only by the test suites.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lrs/lrs.hpp"

namespace oracle {

// Bit-by-bit multiply in GF(2)[x] / (x^64 + x^4 + x^3 + x + 1).
inline std::uint64_t schoolbook_mul(std::uint64_t x, std::uint64_t y) {
    std::uint64_t acc = 0;
    std::uint64_t a = x;
    for (int bit = 0; bit < 64; ++bit) {
        if ((y >> bit) & 1) acc ^= a;
        const bool carry = (a >> 63) & 1;
        a <<= 1;
        if (carry) a ^= 0x1B;
    }
    return acc;
}

// Group algebra product by definition: (sum_g u_g e_g)(sum_h v_h e_h) = sum u_g v_h e_{g xor h}.
inline std::vector<std::uint64_t> convolve(std::span<const std::uint64_t> u, std::span<const std::uint64_t> v) {
    std::vector<std::uint64_t> out(u.size(), 0);
    for (std::size_t g = 0; g < u.size(); ++g) {
        for (std::size_t h = 0; h < v.size(); ++h) {
            out[g ^ h] ^= schoolbook_mul(u[g], v[h]);
        }
    }
    return out;
}

// Every run subsequence by enumeration of index subsets: returns, for each
// (runs, length), whether it is attainable. n <= 16.
struct Profile {
    std::size_t n = 0;
    std::size_t best = 0;
    std::vector<std::vector<bool>> feasible;  // [r][k]
    std::vector<std::size_t> best_by_runs;    // 0 if no r-run solution
};

inline bool is_run_subsequence(std::span<const lrs::Symbol> picked, std::size_t* runs = nullptr) {
    std::set<lrs::Symbol> closed;
    std::size_t count = 0;
    for (std::size_t t = 0; t < picked.size(); ++t) {
        if (t > 0 && picked[t] == picked[t - 1]) continue;
        if (closed.count(picked[t])) return false;
        if (t > 0) closed.insert(picked[t - 1]);
        ++count;
    }
    if (runs) *runs = count;
    return true;
}

inline Profile enumerate_profile(const lrs::Instance& inst) {
    const std::size_t n = inst.size();
    const std::size_t sigma = inst.alphabet_size();
    Profile prof;
    prof.n = n;
    prof.feasible.assign(sigma + 1, std::vector<bool>(n + 1, false));
    prof.best_by_runs.assign(sigma + 1, 0);
    const auto syms = inst.symbols();
    std::vector<lrs::Symbol> picked;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        picked.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) picked.push_back(syms[i]);
        }
        std::size_t runs = 0;
        if (!is_run_subsequence(picked, &runs)) continue;
        prof.feasible[runs][picked.size()] = true;
        prof.best_by_runs[runs] = std::max(prof.best_by_runs[runs], picked.size());
        prof.best = std::max(prof.best, picked.size());
    }
    return prof;
}

// Exact optimum by a left-to-right frontier DP. State: the currently open
// symbol plus the set of closed symbols that still occur to the right.
// Closed symbols with no future occurrence are forgotten, so the state space
// stays small when symbols occur few times (reduction encodings).
inline std::size_t frontier_optimum(const lrs::Instance& inst) {
    constexpr std::size_t words = 4;
    const std::size_t n = inst.size();
    const std::size_t sigma = inst.alphabet_size();
    if (sigma > 64 * words) {
        throw lrs::Error(lrs::ErrorKind::AlphabetTooLarge, "frontier oracle handles at most 256 symbols");
    }
    const auto syms = inst.symbols();
    std::vector<std::size_t> last(sigma, 0);
    for (std::size_t i = 0; i < n; ++i) last[syms[i]] = i;

    struct Key {
        std::array<std::uint64_t, words> closed{};
        std::uint32_t open = 0;  // symbol id + 1, 0 when nothing is open
        bool operator==(const Key&) const = default;
    };
    struct Hash {
        std::size_t operator()(const Key& k) const noexcept {
            std::uint64_t h = k.open;
            for (auto w : k.closed) h = lrs::mix64(h ^ w);
            return static_cast<std::size_t>(h);
        }
    };
    using Table = std::unordered_map<Key, std::uint32_t, Hash>;
    auto has = [](const Key& k, lrs::Symbol a) { return (k.closed[a / 64] >> (a % 64)) & 1; };
    auto set = [](Key& k, lrs::Symbol a) { k.closed[a / 64] |= std::uint64_t{1} << (a % 64); };
    auto clear = [](Key& k, lrs::Symbol a) { k.closed[a / 64] &= ~(std::uint64_t{1} << (a % 64)); };

    Table states{{Key{}, 0}};
    for (std::size_t i = 0; i < n; ++i) {
        const lrs::Symbol a = syms[i];
        const bool a_ends = last[a] == i;
        Table next;
        next.reserve(states.size() * 2);
        auto relax = [&](const Key& k, std::uint32_t v) {
            auto [it, fresh] = next.emplace(k, v);
            if (!fresh && it->second < v) it->second = v;
        };
        for (const auto& [key, val] : states) {
            Key skip = key;
            if (a_ends) {
                clear(skip, a);
                if (skip.open == a + 1) skip.open = 0;
            }
            relax(skip, val);
            if (has(key, a)) continue;
            Key take = key;
            if (key.open != a + 1) {
                if (key.open != 0) {
                    const lrs::Symbol prev = key.open - 1;
                    if (last[prev] > i) set(take, prev);
                }
                take.open = a + 1;
            }
            // an open symbol with no later occurrence behaves like no open symbol
            if (a_ends) take.open = 0;
            relax(take, val + 1);
        }
        states = std::move(next);
    }
    std::uint32_t best = 0;
    for (const auto& [key, val] : states) best = std::max(best, val);
    return best;
}

// Uniformly random-ish valid run subsequence: choose a random symbol order
// and greedily pick random subsets of occurrences that respect it.
inline lrs::Solution random_solution(const lrs::Instance& inst, lrs::Rng& rng) {
    const auto syms = inst.symbols();
    std::vector<std::size_t> idx;
    std::set<lrs::Symbol> closed;
    std::int64_t open = -1;
    for (std::size_t i = 0; i < syms.size(); ++i) {
        const lrs::Symbol a = syms[i];
        if (closed.count(a)) continue;
        if (lrs::uniform_below(rng, 3) == 0) continue;
        if (open != static_cast<std::int64_t>(a)) {
            if (open >= 0) closed.insert(static_cast<lrs::Symbol>(open));
            open = a;
        }
        idx.push_back(i + 1);
    }
    return lrs::validate_solution(inst, idx);
}

// Symbolic view of the run circuit. A term is a monomial (multiset of
// symbols, sorted) together with the number of derivations producing it.
using Monomial = std::vector<lrs::Symbol>;
using Poly = std::map<Monomial, std::uint64_t>;

inline Monomial times(Monomial m, lrs::Symbol a) {
    m.insert(std::upper_bound(m.begin(), m.end(), a), a);
    return m;
}

inline void add_into(Poly& dst, const Poly& src, std::optional<lrs::Symbol> var = std::nullopt,
                     std::uint64_t mult = 1) {
    for (const auto& [mono, count] : src) {
        dst[var ? times(mono, *var) : mono] += count * mult;
    }
}

// Table of symbolic polynomials P[i][l][h] for i <= n, l <= runs, h <= n.
struct SymbolicTable {
    std::size_t n = 0;
    std::size_t runs = 0;
    std::vector<Poly> cells;
    Poly& at(std::size_t i, std::size_t l, std::size_t h) { return cells[(i * (runs + 1) + l) * (n + 1) + h]; }
    const Poly& at(std::size_t i, std::size_t l, std::size_t h) const {
        return cells[(i * (runs + 1) + l) * (n + 1) + h];
    }
};

// literal = false: the recurrence used by the solver (run starts right after
// position p_{m-z+1} - 1). literal = true: the prefix-sum form, which adds
// P[j][l-1][h-z] for every j < p_{m-z+1}.
inline SymbolicTable symbolic_table(const lrs::Instance& inst, std::size_t runs, bool literal) {
    const std::size_t n = inst.size();
    const lrs::OccIndex occ(inst);
    const auto syms = inst.symbols();
    SymbolicTable t;
    t.n = n;
    t.runs = runs;
    t.cells.resize((n + 1) * (runs + 1) * (n + 1));
    for (std::size_t i = 0; i <= n; ++i) t.at(i, 0, 0)[Monomial{}] = 1;
    for (std::size_t l = 1; l <= runs; ++l) {
        for (std::size_t i = 1; i <= n; ++i) {
            const lrs::Symbol a = syms[i - 1];
            const auto pos = occ.positions(a);
            const std::size_t m = occ.prefix_count(a, i);
            for (std::size_t h = 0; h <= n; ++h) {
                Poly cell = t.at(i - 1, l, h);
                for (std::size_t z = 1; z <= m && z <= h; ++z) {
                    const std::size_t before = pos[m - z] - 1;
                    if (literal) {
                        for (std::size_t j = 0; j <= before; ++j) add_into(cell, t.at(j, l - 1, h - z), a);
                    } else {
                        add_into(cell, t.at(before, l - 1, h - z), a);
                    }
                }
                t.at(i, l, h) = std::move(cell);
            }
        }
    }
    return t;
}

// Numeric evaluation of the prefix-sum form with per-symbol scalars only:
// P[i][l][h] = P[i-1][l][h] + x_a * sum_z Q[p_{m-z+1} - 1][l-1][h-z], where
// Q[j] = sum_{j' <= j} P[j'].
inline lrs::GroupVec prefix_sum_evaluate(const lrs::Instance& inst, std::size_t runs, std::size_t len,
                                         std::uint64_t seed) {
    const std::size_t n = inst.size();
    const auto dim = static_cast<unsigned>(runs);
    const auto va = lrs::draw_assignment(inst, dim, seed);
    const lrs::OccIndex occ(inst);
    const auto syms = inst.symbols();
    auto idx = [&](std::size_t i, std::size_t l, std::size_t h) { return (i * (runs + 1) + l) * (len + 1) + h; };
    std::vector<lrs::GroupVec> P((n + 1) * (runs + 1) * (len + 1), lrs::GroupVec::zero(dim));
    std::vector<lrs::GroupVec> Q = P;
    for (std::size_t i = 0; i <= n; ++i) P[idx(i, 0, 0)] = lrs::GroupVec::unit(dim);
    for (std::size_t l = 0; l <= runs; ++l) {
        for (std::size_t i = 0; i <= n; ++i) {
            const std::size_t h_top = len;
            for (std::size_t h = 0; h <= h_top; ++h) {
                if (l > 0 && i > 0) {
                    const lrs::Symbol a = syms[i - 1];
                    const auto pos = occ.positions(a);
                    const std::size_t m = occ.prefix_count(a, i);
                    auto sum = lrs::GroupVec::zero(dim);
                    for (std::size_t z = 1; z <= m && z <= h; ++z) sum = lrs::ga_add(sum, Q[idx(pos[m - z] - 1, l - 1, h - z)]);
                    P[idx(i, l, h)] = lrs::ga_add(P[idx(i - 1, l, h)], lrs::ga_mul_var(sum, va.masks[a], va.scalars[a]));
                }
                Q[idx(i, l, h)] = i == 0 ? P[idx(i, l, h)] : lrs::ga_add(Q[idx(i - 1, l, h)], P[idx(i, l, h)]);
            }
        }
    }
    return P[idx(n, runs, len)];
}

inline bool multilinear(const Monomial& m) { return std::adjacent_find(m.begin(), m.end()) == m.end(); }

// Symbol sets S with a run subsequence of exactly |S| runs, over exactly the
// symbols S, of length h. Keyed by (h, sorted symbol list).
inline std::set<std::pair<std::size_t, Monomial>> enumerate_supports(const lrs::Instance& inst) {
    std::set<std::pair<std::size_t, Monomial>> out;
    const auto syms = inst.symbols();
    const std::size_t n = inst.size();
    std::vector<lrs::Symbol> picked;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        picked.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) picked.push_back(syms[i]);
        }
        if (!is_run_subsequence(picked)) continue;
        Monomial s(picked.begin(), picked.end());
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        out.emplace(picked.size(), std::move(s));
    }
    return out;
}

inline std::vector<std::size_t> indices_of(const lrs::Solution& s) {
    return {s.indices().begin(), s.indices().end()};
}

// Parses "length L\nindices ...\n..." as printed by format_solution.
inline std::vector<std::size_t> parse_indices(const std::string& text) {
    std::vector<std::size_t> out;
    const auto at = text.find("indices");
    if (at == std::string::npos) return out;
    std::istringstream line(text.substr(at + 7, text.find('\n', at) - at - 7));
    std::size_t v;
    while (line >> v) out.push_back(v);
    return out;
}

inline lrs::Instance random_instance(lrs::Rng& rng, std::size_t n, std::size_t sigma) {
    std::vector<std::string> toks;
    for (std::size_t i = 0; i < n; ++i) {
        toks.push_back(std::string(1, static_cast<char>('a' + lrs::uniform_below(rng, sigma))));
    }
    return lrs::Instance::from_tokens(toks);
}

// Criterion-4 corpus: all strings of length 1..8 over {a,b,c}, then 500
// random instances with n <= 14, |Sigma| <= 4.
inline std::vector<lrs::Instance> exhaustive_corpus(std::size_t max_len = 8) {
    std::vector<lrs::Instance> out;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < len; ++i) total *= 3;
        for (std::size_t code = 0; code < total; ++code) {
            std::vector<std::string> toks;
            std::size_t c = code;
            for (std::size_t i = 0; i < len; ++i, c /= 3) toks.push_back(std::string(1, static_cast<char>('a' + c % 3)));
            out.push_back(lrs::Instance::from_tokens(toks));
        }
    }
    return out;
}

inline std::vector<lrs::Instance> random_corpus(std::uint64_t seed, std::size_t count = 500) {
    lrs::Rng rng(seed);
    std::vector<lrs::Instance> out;
    for (std::size_t t = 0; t < count; ++t) {
        const std::size_t n = 1 + lrs::uniform_below(rng, 14);
        const std::size_t sigma = 1 + lrs::uniform_below(rng, 4);
        out.push_back(random_instance(rng, n, sigma));
    }
    return out;
}

} // namespace oracle
