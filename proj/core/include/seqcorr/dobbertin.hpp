#pragma once
// Dobbertin's polynomial sequences over GF(2^k) and the machinery attached to
// them: the F_i/G_i recursions, R(v), the permutation polynomial D(v), the
// reduced polynomials H_i(v), and the affine helper Q(v).
//
// Parameters: l with 0 < l < k, gcd(l, k) = 1, l' = l^(-1) mod k, and
// e(i) = 1 + 2^l + ... + 2^((i-1)l) taken mod 2^k - 1 for i = 1 .. l'.
// All exponents on subfield arguments live mod 2^k - 1.

#include <cstdint>
#include <string>
#include <vector>

#include "seqcorr/field.hpp"

namespace seqcorr {

struct LParams {
    int k = 0;
    int l = 0;
    int l_prime = 0;
    // e[i-1] = e(i) mod 2^k - 1 for i = 1 .. l'; e(l') * (2^l - 1) = 1 mod 2^k - 1.
    std::vector<std::uint64_t> e;
};

LParams make_lparams(int k, int l);  // NotCoprime unless 0 < l < k, gcd(l,k) = 1

struct FGPair {
    Elem f, g;
};

// F_1(v) = v, F_2(v) = v^(2^l+1), G_1(v) = 0, G_2(v) = v^(2^l-1), and
//   F_{i+2}(v) = v^(2^((i+1)l)) F_{i+1}(v) + v^(2^((i+1)l)-2^(il)) F_i(v)
// with the same recursion for G.  Valid for 1 <= i <= l'+1.
FGPair fg_eval(const FieldCtx& F, const LParams& lp, int i, Elem v);

// R(v) = F_1(v) + ... + F_{l'}(v) + G_{l'}(v).
Elem r_eval(const FieldCtx& F, const LParams& lp, Elem v);

// D(v) = (v^(2^l) + v^(2^(2l)) + ... + v^(2^(l'l)) + (l'+1 mod 2)) / v^(2^l+1);
// a permutation of GF(2^k)^*, inverse to y -> R(y^(-1)).  ZeroArgument on 0.
Elem d_eval(const FieldCtx& F, const LParams& lp, Elem v);

// Sparse polynomial with all nonzero coefficients equal to 1; exponents are
// cyclotomically normalized (shifted right until odd) and deduplicated.
struct ExpSet {
    std::vector<std::uint64_t> exponents;  // sorted, unique, odd
    bool constant = false;
};

// Symbolic reduction of 1 + (1+v)^e(i): expand over subsets of the integer
// support {2^(jl) : j < i}, shift every exponent right until odd (which
// identifies subsets sharing a difference pattern), cancel duplicate pairs,
// and fold the survivors into [1, 2^k - 1].  Exact oracle for h_eval; the
// expansion enumerates 2^i terms, capped at k <= 11.
ExpSet h_expset(const LParams& lp, int i);

// Closed form H_i(v) = v * (1 + (1+v)^(2^l) + (1+v)^(2^l+2^(2l)) + ... +
// (1+v)^(e(i)-1)).
Elem h_eval(const FieldCtx& F, const LParams& lp, int i, Elem v);

Elem eval_expset(const FieldCtx& F, const ExpSet& set, Elem v);
std::string to_string(const ExpSet& set);

// Q(v) = (x0^(2^l+1) + x0) v^(2^l) + x0^2 v + x0.  ZeroArgument on x0 = 0.
Elem q_eval(const FieldCtx& F, const LParams& lp, Elem x0, Elem v);

// Trace identity linking the reduced polynomials to R: with a = x0^(2^l+1)+x0,
// Tr_k(1 + (1 + x0^(-1))^e(l')) must equal Tr_k(R(a^(-1))).  DegenerateX0 for
// x0 in {0, 1} (where a = 0).
bool lemma5_check(const FieldCtx& F, const LParams& lp, Elem x0);

}  // namespace seqcorr
