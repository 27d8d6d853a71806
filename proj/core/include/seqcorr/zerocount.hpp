#pragma once
// Zero counting and classification for the polynomials that drive the
// crosscorrelation distribution:
//
//   A_a(v) = a^(2^l) v^(2^(2l)) + v^(2^l) + a v + 1          over GF(2^k)
//   p_a(x) = x^(2^l+1) + x + a                               over GF(2^k)
//   L_a(z) = z^(2^(k+l)) + (ra)^(2^l) z^(2^(2l)) + r a z     over GF(2^m)
//
// A_a always has N_a in {1, 2, 4} zeros (gcd(l,k) = 1); a is classified into
// M_1/M_2/M_4 by that count.  v0 = R(a^(-1)) is a known zero of A_a, so the
// zero set is v0 + ker of the homogeneous part.  T_a, the number of zeros of
// L_a, lies in {1, 4} for odd k, odd l and the distinguished noncube r.

#include <cstdint>
#include <string>
#include <vector>

#include "seqcorr/dobbertin.hpp"
#include "seqcorr/field.hpp"

namespace seqcorr {

enum class ZeroMethod { brute, kernel };

struct ZeroReport {
    long long count = 0;
    std::vector<Elem> zeros;  // sorted by bit pattern; empty when not enumerated
    ZeroMethod method = ZeroMethod::brute;
};

const char* to_string(ZeroMethod method);

Elem eval_affine_a(const FieldCtx& F, const LParams& lp, Elem a, Elem v);

// Zeros of A_a over GF(2^k).  brute evaluates at all 2^k points; kernel
// translates the known particular solution R(a^(-1)) by the kernel of the
// homogeneous part.  ZeroArgument on a = 0.
ZeroReport affine_zeros_a(const FieldCtx& F, const LParams& lp, Elem a,
                          ZeroMethod method = ZeroMethod::kernel);

// Zeros of p_a over GF(2^k) by brute enumeration; a = 0 is allowed and gives
// {0, 1}.  For a != 0 the count equals N_a - 1.
ZeroReport p_zeros(const FieldCtx& F, const LParams& lp, Elem a);

enum class MClass { m1 = 1, m2 = 2, m4 = 4 };

const char* to_string(MClass c);

MClass classify_m(const FieldCtx& F, const LParams& lp, Elem a);  // ZeroArgument on 0

struct MDistribution {
    long long m1 = 0, m2 = 0, m4 = 0;
    friend bool operator==(const MDistribution&, const MDistribution&) = default;
};

MDistribution m_distribution(const FieldCtx& F, const LParams& lp, int threads = 1);

// Closed forms: odd k gives ((2^k+1)/3, 2^(k-1)-1, (2^(k-1)-1)/3); even k
// gives ((2^k-1)/3, 2^(k-1), (2^(k-1)-2)/3).
MDistribution expected_m_distribution(int k);

// Tr_k(R(a^(-1)) + 1); equals 1 exactly for a in M_2.  ZeroArgument on 0.
int m2_trace_criterion(const FieldCtx& F, const LParams& lp, Elem a);

// Trace identities satisfied by every zero z of A_a: Tr_k(z) = Tr_k(v0), and
// Tr_k(a z^(2^l+1)) = l' Tr_k(v0) + Tr_k(l'+1) for z = v0, with l'+1 replaced
// by l' for the other zeros (integer constants act as (c mod 2) Tr_k(1)).
bool lemma3_check(const FieldCtx& F, const LParams& lp, Elem a);

Elem eval_linearized_l(const FieldCtx& F, const LParams& lp, Elem a, Elem z);

// T_a = number of zeros of L_a over GF(2^m), via the m x m GF(2) matrix of
// z -> L_a(z) in the polynomial basis (kernel) or full enumeration (brute,
// m <= 20).  Requires odd k and odd l.
ZeroReport linearized_kernel_l(const FieldCtx& F, const LParams& lp, Elem a,
                               ZeroMethod method = ZeroMethod::kernel);

// a * (w + w^(2^k)) with w = r z^(2^l+1) must lie in {0, 1} for every zero z
// of L_a.
bool lemma6_check(const FieldCtx& F, const LParams& lp, Elem a);

}  // namespace seqcorr
