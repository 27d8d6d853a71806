#pragma once
// Exponential sums over GF(2^m), m = 2k:
//
//   S(a)   = sum over x of (-1)^(Tr_m(ax) + Tr_k(x^(d(2^k+1))))
//   S_i(a) = sum over y of (-1)^(Tr_m(r^i a y^(2^l+1)) + Tr_k(y^(2^k+1)))
//
// with i in {0, 1, -1} (written S_0, S_1, S_2) and r the distinguished
// noncube.  The multiset of S(a) over nonzero subfield a equals the multiset
// of C_d(tau) + 1 over all shifts.
//
// s_naive is the literal per-a sum and serves as the oracle for s_all_wht,
// which evaluates every a at once: tabulate f(x) = Tr_k(x^(d(2^k+1))), apply
// a Walsh-Hadamard transform to (-1)^f, and read position u(a) with
// <u(a), x> = Tr_m(ax) (FieldCtx::wht_index).
//
// For valid (d, l) pairs (d(2^l+1) = 2^i mod 2^k-1), substituting
// x = r^i y^(2^l+1) decomposes S: 3 S(a) = S_0 + S_1 + S_2 for odd l, and
// S(a) = S_0(a) for even l.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcorr/field.hpp"
#include "seqcorr/zerocount.hpp"

namespace seqcorr {

// In-place transform; data.size() must be a power of two.  After the
// transform, data[u] = sum over x of (-1)^<u,x> * input[x].
void walsh_hadamard_transform(std::vector<std::int64_t>& data);

long long s_naive(const FieldCtx& F, std::uint64_t d, Elem a);

// S(a) for every a in GF(2^k)^*, sorted by a's bit pattern; O(m 2^m) total.
std::vector<std::pair<Elem, long long>> s_all_wht(const FieldCtx& F, std::uint64_t d);

// which = 0, 1, 2 selects the multiplier 1, r, r^(-1).  which in {1, 2}
// requires odd k.
long long s_component(const FieldCtx& F, int l, Elem a, int which);

struct SumRow {
    Elem a;
    long long s = 0, s0 = 0, s1 = 0, s2 = 0;
    std::optional<long long> ta;  // set when l is odd
    MClass m_class = MClass::m1;
    bool pass = false;
};

struct DecompositionReport {
    int k = 0;
    int l = 0;
    std::uint64_t d = 0;
    bool pass = false;
    std::vector<SumRow> rows;
    std::vector<std::string> failures;
};

// Verifies, for every nonzero subfield a: the parity-of-l decomposition of
// S(a), S_1 = S_2, and (odd l) S_1^2 = 2^m T_a.  InvalidPair unless
// d(2^l+1) is a power of two mod 2^k-1.
DecompositionReport decomposition_check(const FieldCtx& F, std::uint64_t d, int l);

}  // namespace seqcorr
