#pragma once

// Problem representation shared by every solver: the symbol string, the
// occurrence index used for window counts, and run-subsequence validation.
//
// Positions are 1-based at every public boundary (S[1..n]); vectors are
// 0-based internally.

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lrs/error.hpp"

namespace lrs {

using Symbol = std::uint32_t;

class Instance {
public:
    Instance() = default;

    /// Ids are assigned by first appearance. Throws EmptyInstance on no tokens.
    static Instance from_tokens(std::span<const std::string> tokens, std::optional<std::size_t> k = std::nullopt) {
        if (tokens.empty()) {
            throw Error(ErrorKind::EmptyInstance, "no symbol tokens");
        }
        Instance inst;
        inst.symbols_.reserve(tokens.size());
        for (const auto& tok : tokens) {
            auto [it, fresh] = inst.ids_.try_emplace(tok, static_cast<Symbol>(inst.tokens_.size()));
            if (fresh) {
                inst.tokens_.push_back(tok);
            }
            inst.symbols_.push_back(it->second);
        }
        inst.k_ = k;
        return inst;
    }

    static Instance from_string(std::string_view text, std::optional<std::size_t> k = std::nullopt) {
        std::vector<std::string> tokens;
        std::istringstream in{std::string(text)};
        for (std::string tok; in >> tok;) {
            tokens.push_back(tok);
        }
        return from_tokens(tokens, k);
    }

    std::size_t size() const noexcept { return symbols_.size(); }
    std::size_t alphabet_size() const noexcept { return tokens_.size(); }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }

    /// S[pos], 1-based.
    Symbol at(std::size_t pos) const { return symbols_.at(pos - 1); }

    const std::string& token(Symbol id) const { return tokens_.at(id); }
    std::span<const std::string> tokens() const noexcept { return tokens_; }

    std::optional<Symbol> find(std::string_view tok) const {
        auto it = ids_.find(std::string(tok));
        if (it == ids_.end()) {
            return std::nullopt;
        }
        return it->second;
    }

    std::optional<std::size_t> target() const noexcept { return k_; }
    Instance with_target(std::optional<std::size_t> k) const {
        Instance copy = *this;
        copy.k_ = k;
        return copy;
    }

    /// Token string, space separated.
    std::string to_text() const {
        std::string out;
        for (std::size_t i = 0; i < symbols_.size(); ++i) {
            if (i) out += ' ';
            out += tokens_[symbols_[i]];
        }
        return out;
    }

private:
    std::vector<Symbol> symbols_;
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, Symbol> ids_;
    std::optional<std::size_t> k_;
};

namespace detail {

inline bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        const auto c = static_cast<unsigned char>(s[i]);
        std::size_t extra;
        std::uint32_t cp;
        if (c < 0x80) {
            ++i;
            continue;
        } else if ((c & 0xE0) == 0xC0) {
            extra = 1;
            cp = c & 0x1F;
        } else if ((c & 0xF0) == 0xE0) {
            extra = 2;
            cp = c & 0x0F;
        } else if ((c & 0xF8) == 0xF0) {
            extra = 3;
            cp = c & 0x07;
        } else {
            return false;
        }
        if (i + extra >= s.size()) {
            return false;
        }
        for (std::size_t j = 1; j <= extra; ++j) {
            const auto cc = static_cast<unsigned char>(s[i + j]);
            if ((cc & 0xC0) != 0x80) return false;
            cp = (cp << 6) | (cc & 0x3F);
        }
        // overlong encodings and surrogates
        if ((extra == 1 && cp < 0x80) || (extra == 2 && cp < 0x800) || (extra == 3 && cp < 0x10000) ||
            cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
            return false;
        }
        i += extra + 1;
    }
    return true;
}

} // namespace detail

/// Reads the instance text format: "//" lines are comments, everything else
/// is whitespace-separated tokens. k is never part of the file.
inline Instance parse_instance(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!detail::valid_utf8(line)) {
            throw Error(ErrorKind::ParseError, "invalid UTF-8 on line " + std::to_string(line_no), line_no);
        }
        std::istringstream fields(line);
        std::string tok;
        bool first = true;
        while (fields >> tok) {
            if (tok.starts_with("//")) {
                if (!first) {
                    throw Error(ErrorKind::ParseError,
                                "comment marker must start the line (line " + std::to_string(line_no) + ")", line_no);
                }
                break;
            }
            first = false;
            tokens.push_back(std::move(tok));
        }
    }
    if (tokens.empty()) {
        throw Error(ErrorKind::EmptyInstance, "no symbol tokens in input");
    }
    return Instance::from_tokens(tokens);
}

inline Instance parse_instance(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_instance(in);
}

/// Occurrence lists and per-symbol prefix counts; window counts in O(1).
class OccIndex {
public:
    explicit OccIndex(const Instance& inst)
        : n_(inst.size()), positions_(inst.alphabet_size()), prefix_(inst.alphabet_size()) {
        for (auto& row : prefix_) {
            row.assign(n_ + 1, 0);
        }
        const auto syms = inst.symbols();
        for (std::size_t i = 1; i <= n_; ++i) {
            const Symbol a = syms[i - 1];
            positions_[a].push_back(i);
            for (std::size_t s = 0; s < prefix_.size(); ++s) {
                prefix_[s][i] = prefix_[s][i - 1] + (s == a ? 1u : 0u);
            }
        }
    }

    std::size_t size() const noexcept { return n_; }

    /// Sorted 1-based positions of symbol a.
    std::span<const std::size_t> positions(Symbol a) const { return positions_.at(a); }

    /// Occurrences of a in S[1..i].
    std::size_t prefix_count(Symbol a, std::size_t i) const { return prefix_.at(a).at(i); }

    /// Occurrences of a in S[from..to] (1-based, inclusive); 0 when from > to.
    std::size_t occ(Symbol a, std::size_t from, std::size_t to) const {
        if (from > to) {
            return 0;
        }
        return prefix_.at(a).at(to) - prefix_.at(a).at(from - 1);
    }

    /// Maximum number of occurrences of any symbol.
    std::size_t max_occ() const {
        std::size_t best = 0;
        for (const auto& p : positions_) {
            best = std::max(best, p.size());
        }
        return best;
    }

    Symbol most_frequent() const {
        Symbol best = 0;
        for (Symbol a = 0; a < positions_.size(); ++a) {
            if (positions_[a].size() > positions_[best].size()) best = a;
        }
        return best;
    }

private:
    std::size_t n_;
    std::vector<std::vector<std::size_t>> positions_;
    std::vector<std::vector<std::uint32_t>> prefix_;
};

struct RunBlock {
    Symbol symbol;
    std::size_t length;

    bool operator==(const RunBlock&) const = default;
};

/// Maximal runs of S, left to right.
inline std::vector<RunBlock> run_decompose(const Instance& inst) {
    std::vector<RunBlock> blocks;
    for (Symbol a : inst.symbols()) {
        if (!blocks.empty() && blocks.back().symbol == a) {
            ++blocks.back().length;
        } else {
            blocks.push_back({a, 1});
        }
    }
    return blocks;
}

struct SolutionRun {
    Symbol symbol;
    std::vector<std::size_t> indices;

    std::size_t length() const noexcept { return indices.size(); }
};

/// A validated run subsequence. Build through validate_solution.
class Solution {
public:
    Solution() = default;

    std::span<const std::size_t> indices() const noexcept { return indices_; }
    std::span<const SolutionRun> runs() const noexcept { return runs_; }
    std::size_t length() const noexcept { return indices_.size(); }
    std::size_t run_count() const noexcept { return runs_.size(); }

private:
    friend Solution validate_solution(const Instance&, std::span<const std::size_t>);
    std::vector<std::size_t> indices_;
    std::vector<SolutionRun> runs_;
};

/// Accepts any index list; returns the structured solution iff it is a run
/// subsequence of S. The empty list is valid.
inline Solution validate_solution(const Instance& inst, std::span<const std::size_t> indices) {
    Solution sol;
    std::vector<char> used(inst.alphabet_size(), 0);
    for (std::size_t t = 0; t < indices.size(); ++t) {
        const std::size_t pos = indices[t];
        if (pos < 1 || pos > inst.size()) {
            throw Error(ErrorKind::IndexOutOfRange,
                        "index " + std::to_string(pos) + " outside [1, " + std::to_string(inst.size()) + "]", pos);
        }
        if (t > 0 && pos <= indices[t - 1]) {
            throw Error(ErrorKind::NonIncreasingIndices,
                        "index " + std::to_string(pos) + " does not exceed " + std::to_string(indices[t - 1]), pos);
        }
        const Symbol a = inst.at(pos);
        if (!sol.runs_.empty() && sol.runs_.back().symbol == a) {
            sol.runs_.back().indices.push_back(pos);
            continue;
        }
        if (used[a]) {
            throw Error(ErrorKind::RepeatedRunSymbol,
                        "symbol '" + inst.token(a) + "' starts a second run at position " + std::to_string(pos), pos);
        }
        used[a] = 1;
        sol.runs_.push_back({a, {pos}});
    }
    sol.indices_.assign(indices.begin(), indices.end());
    return sol;
}

inline Solution validate_solution(const Instance& inst, std::initializer_list<std::size_t> indices) {
    return validate_solution(inst, std::span<const std::size_t>(indices.begin(), indices.size()));
}

/// Three-line text form: "length L", "indices ...", "runs tok:len ...".
inline std::string format_solution(const Instance& inst, const Solution& sol) {
    std::string out = "length " + std::to_string(sol.length()) + "\nindices";
    for (auto i : sol.indices()) {
        out += ' ' + std::to_string(i);
    }
    out += "\nruns";
    for (const auto& run : sol.runs()) {
        out += ' ' + inst.token(run.symbol) + ':' + std::to_string(run.length());
    }
    out += '\n';
    return out;
}

} // namespace lrs
