#pragma once

// Group algebra GF(2^64)[Z_2^r]. A GroupVec holds one coefficient per group
// element g in {0,1}^r, indexed by bitmask. Only the operations the run
// circuit needs are provided: addition and multiplication by a single
// variable x_a = w_a (e_0 + e_{v_a}).

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lrs/error.hpp"
#include "lrs/gf2.hpp"
#include "lrs/instance.hpp"
#include "lrs/random.hpp"

namespace lrs {

/// Largest group dimension accepted anywhere (2^20 coefficients per vector).
inline constexpr unsigned max_group_dim = 20;

class GroupVec {
public:
    GroupVec() = default;

    static GroupVec zero(unsigned r) {
        if (r > max_group_dim) {
            throw Error(ErrorKind::InstanceTooLarge, "group dimension " + std::to_string(r) + " too large");
        }
        GroupVec v;
        v.dim_ = r;
        v.coeffs_.assign(std::size_t{1} << r, 0);
        return v;
    }

    /// Basis element e_g with coefficient c.
    static GroupVec basis(unsigned r, std::uint64_t g, FieldElem c = 1) {
        GroupVec v = zero(r);
        v.coeffs_.at(g) = c;
        return v;
    }

    /// Multiplicative unit e_0.
    static GroupVec unit(unsigned r) { return basis(r, 0, 1); }

    unsigned dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return coeffs_.size(); }

    FieldElem operator[](std::uint64_t g) const { return coeffs_.at(g); }
    FieldElem& operator[](std::uint64_t g) { return coeffs_.at(g); }

    std::span<const FieldElem> coeffs() const noexcept { return coeffs_; }
    std::span<FieldElem> coeffs() noexcept { return coeffs_; }

    bool is_zero() const noexcept {
        for (auto c : coeffs_) {
            if (c) return false;
        }
        return true;
    }

    bool operator==(const GroupVec&) const = default;

private:
    unsigned dim_ = 0;
    std::vector<FieldElem> coeffs_;
};

inline GroupVec ga_add(const GroupVec& u, const GroupVec& v) {
    if (u.dim() != v.dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "dimensions " + std::to_string(u.dim()) + " and " + std::to_string(v.dim()));
    }
    GroupVec out = u;
    for (std::size_t g = 0; g < out.size(); ++g) {
        out[g] ^= v[g];
    }
    return out;
}

/// Span kernel of ga_mul_var: out[g] = w * (u[g] + u[g ^ mask]).
inline void mul_var_into(std::span<FieldElem> out, std::span<const FieldElem> u, std::uint64_t mask,
                         FieldElem w) noexcept {
    for (std::size_t g = 0; g < u.size(); ++g) {
        out[g] = gf_mul(w, u[g] ^ u[g ^ mask]);
    }
}

/// u * w_a (e_0 + e_{v_a}). Squaring the same variable always gives zero.
inline GroupVec ga_mul_var(const GroupVec& u, std::uint64_t mask, FieldElem w) {
    if (mask >= u.size()) {
        throw Error(ErrorKind::ParameterOutOfRange, "group mask exceeds 2^r");
    }
    GroupVec out = GroupVec::zero(u.dim());
    mul_var_into(out.coeffs(), u.coeffs(), mask, w);
    return out;
}

/// One random evaluation point of the run circuit.
struct VarAssignment {
    unsigned dim = 0;
    std::vector<std::uint64_t> masks;   // v_a, uniform over {0,1}^r
    std::vector<FieldElem> scalars;     // w_a, uniform nonzero
    std::uint64_t seed = 0;
    std::uint64_t edge_key = 0;         // keys the per-edge coefficients

    /// Coefficient carried by the take-edge (i, l, h, z) of the circuit.
    FieldElem edge_coefficient(std::size_t i, std::size_t l, std::size_t h, std::size_t z) const noexcept {
        std::uint64_t x = mix64(edge_key ^ (i * golden_gamma));
        x = mix64(x ^ (l * 0xD1B54A32D192ED03ULL));
        x = mix64(x ^ (h * 0xAEF17502108EF2D9ULL));
        x = mix64(x ^ (z * 0xF1357AEA2E62A9C5ULL));
        return x ? x : 1;
    }
};

inline VarAssignment draw_assignment(std::size_t alphabet_size, unsigned r, std::uint64_t seed) {
    if (r < 1 || r > max_group_dim) {
        throw Error(ErrorKind::ParameterOutOfRange, "run count r must be in [1, " + std::to_string(max_group_dim) + "]");
    }
    VarAssignment va;
    va.dim = r;
    va.seed = seed;
    Rng rng(seed);
    const std::uint64_t mask_bits = (std::uint64_t{1} << r) - 1;
    va.masks.resize(alphabet_size);
    va.scalars.resize(alphabet_size);
    for (std::size_t a = 0; a < alphabet_size; ++a) {
        va.masks[a] = rng() & mask_bits;
        FieldElem w;
        do {
            w = rng();
        } while (w == 0);
        va.scalars[a] = w;
    }
    va.edge_key = rng();
    return va;
}

inline VarAssignment draw_assignment(const Instance& inst, unsigned r, std::uint64_t seed) {
    return draw_assignment(inst.alphabet_size(), r, seed);
}

} // namespace lrs
