#pragma once
// The two m-sequences and their crosscorrelation:
//
//   s_t = Tr_m(alpha^t)   of length n = 2^m - 1
//   u_t = Tr_k(beta^t)    of length 2^k - 1, decimated to v_t = u_(dt)
//
//   C_d(tau) = sum over t < n of (-1)^(s_t + v_(t+tau))
//
// Short-sequence indices are taken mod 2^k - 1 (the short period divides the
// long one 2^k + 1 times).  The distribution over all shifts is computed by
// direct correlation for k <= 7 and through the Walsh route (S(a) - 1) above
// that; the two routes must agree wherever both run.

#include <cstdint>
#include <map>
#include <vector>

#include "seqcorr/field.hpp"

namespace seqcorr {

struct BitSeq {
    std::vector<std::uint8_t> bits;
    std::size_t length() const { return bits.size(); }
    long long ones() const;
};

BitSeq long_seq(const FieldCtx& F);
BitSeq short_seq(const FieldCtx& F, std::uint64_t d);  // BadDecimation unless gcd(d, 2^k-1) = 1

long long crosscorr(const FieldCtx& F, std::uint64_t d, std::uint64_t tau);
// same correlation on prebuilt sequences (s = long_seq, u = short_seq(F, 1))
long long crosscorr(const BitSeq& s, const BitSeq& u, std::uint64_t d, std::uint64_t tau);

struct CorrDistribution {
    std::map<long long, long long> entries;  // value -> count, ordered by value
    long long total = 0;

    void add(long long value, long long count = 1);
    long long distinct() const { return static_cast<long long>(entries.size()); }
    long long count_of(long long value) const;
    friend bool operator==(const CorrDistribution&, const CorrDistribution&) = default;
};

CorrDistribution crosscorr_distribution(const FieldCtx& F, std::uint64_t d, int threads = 1);

struct MomentReport {
    long long sum = 0;
    long long sum_sq = 0;
    bool pass = false;
};

// sum of C_d over all shifts must be 1; sum of squares (2^m-1)(2^k-1) - 2.
MomentReport moment_check(const FieldCtx& F, std::uint64_t d, int threads = 1);

}  // namespace seqcorr
