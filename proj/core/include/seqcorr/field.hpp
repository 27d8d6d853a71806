#pragma once
// Arithmetic context for the field tower GF(2^k) < GF(2^m) with m = 2k.
//
// Elements are coefficient vectors over GF(2) in the polynomial basis
// {1, x, ..., x^(m-1)} modulo a primitive polynomial; bit i of Elem::bits is
// the coefficient of x^i.  alpha (the residue of x) generates GF(2^m)^*,
// beta = alpha^(2^k+1) generates GF(2^k)^*, and for odd k the context carries
// a verified noncube r = alpha^(2^k-1) satisfying r^(2^k+1) = 1.
//
// Multiplication runs off log/antilog tables for m <= 22 and falls back to
// carry-less multiplication plus modular reduction above that; the two paths
// must agree and both stay available for cross-checks.

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqcorr/errors.hpp"

namespace seqcorr {

struct Elem {
    std::uint64_t bits = 0;
    friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

struct FieldSpec {
    int k = 0;
    int m = 0;                  // always 2k
    std::uint64_t modulus = 0;  // bit i = coefficient of x^i, degree exactly m
};

// Lexicographically smallest primitive polynomial of even degree m in [2, 32],
// ordering coefficient strings from x^m down to x^0.  Primitivity is
// re-verified whenever a context is built; the table is a default, not a
// trusted input.
std::uint64_t default_modulus(int m);

// Modulus override file: one "<m> <hex>" pair per line, '#' starts a comment.
std::map<int, std::uint64_t> parse_modulus_config(std::istream& in);
std::map<int, std::uint64_t> load_modulus_config(const std::string& path);

std::string poly_to_string(std::uint64_t p);

class FieldCtx {
public:
    static constexpr int max_k = 16;
    static constexpr int table_threshold_m = 22;

    // Builds and fully verifies the context.  Throws UnsupportedDegree for k
    // outside [1, 16] and NonPrimitiveModulus when the order check on the
    // residue of x fails.
    static FieldCtx build(int k, std::optional<std::uint64_t> modulus = std::nullopt);

    const FieldSpec& spec() const { return spec_; }
    int k() const { return spec_.k; }
    int m() const { return spec_.m; }
    std::uint64_t order() const { return n_; }            // 2^m - 1
    std::uint64_t subfield_order() const { return nk_; }  // 2^k - 1

    Elem zero() const { return Elem{0}; }
    Elem one() const { return Elem{1}; }
    Elem alpha() const { return alpha_; }
    Elem beta() const { return beta_; }

    Elem add(Elem a, Elem b) const { return Elem{a.bits ^ b.bits}; }
    Elem mul(Elem a, Elem b) const {
        if (a.bits == 0 || b.bits == 0) return Elem{0};
        if (!antilog_.empty()) {
            std::uint64_t s = static_cast<std::uint64_t>(log_[a.bits]) + log_[b.bits];
            if (s >= n_) s -= n_;
            return Elem{antilog_[s]};
        }
        return mul_carryless(a, b);
    }
    Elem mul_carryless(Elem a, Elem b) const;  // table-free route, always available
    Elem square(Elem a) const { return mul(a, a); }
    Elem inv(Elem a) const;  // DivisionByZero on 0
    Elem pow(Elem a, std::uint64_t e) const;
    Elem frob(Elem a, int j) const;  // a^(2^j)
    // Integer constants added to field elements act as (e mod 2) * 1.
    Elem from_int(std::uint64_t e) const { return Elem{e & 1}; }

    int trace_m(Elem a) const {
        return static_cast<int>(std::popcount(a.bits & trace_mask_) & 1u);
    }
    int trace_m_reference(Elem a) const;  // sum of the m Frobenius conjugates

    bool in_subfield(Elem a) const { return frob(a, spec_.k) == a; }
    int trace_k(Elem a) const;            // NotInSubfield outside GF(2^k)
    int trace_k_reference(Elem a) const;  // sum of the k conjugates
    Elem trace_k_m(Elem a) const { return add(a, frob(a, spec_.k)); }

    bool is_cube(Elem a) const;
    // The distinguished noncube r = alpha^(2^k-1); odd k only.
    Elem pick_noncube_r() const;

    Elem alpha_pow(std::uint64_t e) const { return pow(alpha_, e); }
    // All of GF(2^k) as elements of the big field, sorted by bit pattern.
    std::span<const Elem> subfield_elements() const { return sub_elems_; }
    // GF(2)-basis beta^0 .. beta^(k-1) of the subfield.
    std::span<const Elem> subfield_basis() const { return sub_basis_; }

    // Index u(a) with <u(a), x> = Tr_m(a*x) for every x, built from the trace
    // Gram matrix G[i][j] = Tr_m(basis_i * basis_j).  This is the read-off map
    // for Walsh-transform evaluation of Tr_m(a*.)-twisted sums.
    std::uint64_t wht_index(Elem a) const {
        std::uint64_t u = 0, v = a.bits;
        while (v) {
            const int j = std::countr_zero(v);
            u ^= gram_rows_[static_cast<std::size_t>(j)];
            v &= v - 1;
        }
        return u;
    }

    bool has_tables() const { return !antilog_.empty(); }
    std::span<const std::uint32_t> antilog_table() const { return antilog_; }
    std::uint64_t log_of(Elem a) const;  // requires tables and a != 0

    std::string hex(Elem a) const;  // lowercase, zero-padded to ceil(m/4)
    Elem elem_from_hex(const std::string& s) const;

private:
    FieldCtx() = default;

    FieldSpec spec_;
    std::uint64_t n_ = 0;   // 2^m - 1
    std::uint64_t nk_ = 0;  // 2^k - 1
    Elem alpha_, beta_;
    std::optional<Elem> r_;
    std::uint64_t trace_mask_ = 0;  // bit j = Tr_m(x^j)
    std::uint64_t tk_mask_ = 0;     // subfield trace as a masked parity
    std::vector<std::uint64_t> gram_rows_;
    std::vector<Elem> sub_elems_;
    std::vector<Elem> sub_basis_;
    std::vector<std::uint32_t> antilog_;
    std::vector<std::uint32_t> log_;
};

}  // namespace seqcorr
