#include "seqcorr/sequences.hpp"

#include <numeric>

#include "seqcorr/expsums.hpp"
#include "seqcorr/parallel.hpp"

namespace seqcorr {
namespace {

constexpr int direct_path_max_k = 7;

std::uint64_t checked_decimation(const FieldCtx& F, std::uint64_t d) {
    const std::uint64_t nk = F.subfield_order();
    const std::uint64_t dm = d % nk;
    if (std::gcd(dm == 0 ? nk : dm, nk) != 1) {
        throw BadDecimation("gcd(d, 2^k - 1) must be 1, got d=" + std::to_string(d));
    }
    return dm;
}

long long correlate(const BitSeq& s, const BitSeq& u, std::uint64_t dm, std::uint64_t tau) {
    const std::uint64_t n = s.length();
    const std::uint64_t nk = u.length();
    std::uint64_t idx = dm * (tau % nk) % nk;
    long long c = 0;
    for (std::uint64_t t = 0; t < n; ++t) {
        c += 1 - 2 * (s.bits[t] ^ u.bits[idx]);
        idx += dm;
        if (idx >= nk) idx -= nk;
    }
    return c;
}

}  // namespace

long long BitSeq::ones() const {
    long long c = 0;
    for (const std::uint8_t b : bits) c += b;
    return c;
}

BitSeq long_seq(const FieldCtx& F) {
    BitSeq seq;
    seq.bits.resize(F.order());
    if (F.has_tables()) {
        const auto antilog = F.antilog_table();
        for (std::uint64_t t = 0; t < F.order(); ++t) {
            seq.bits[t] = static_cast<std::uint8_t>(F.trace_m(Elem{antilog[t]}));
        }
    } else {
        Elem x = F.one();
        for (std::uint64_t t = 0; t < F.order(); ++t) {
            seq.bits[t] = static_cast<std::uint8_t>(F.trace_m(x));
            x = F.mul(x, F.alpha());
        }
    }
    return seq;
}

BitSeq short_seq(const FieldCtx& F, std::uint64_t d) {
    const std::uint64_t dm = checked_decimation(F, d);
    BitSeq seq;
    seq.bits.resize(F.subfield_order());
    const Elem bd = F.pow(F.beta(), dm);
    Elem w = F.one();
    for (std::uint64_t t = 0; t < F.subfield_order(); ++t) {
        seq.bits[t] = static_cast<std::uint8_t>(F.trace_k(w));
        w = F.mul(w, bd);
    }
    return seq;
}

long long crosscorr(const FieldCtx& F, std::uint64_t d, std::uint64_t tau) {
    const std::uint64_t dm = checked_decimation(F, d);
    const BitSeq s = long_seq(F);
    const BitSeq u = short_seq(F, 1);
    return correlate(s, u, dm, tau);
}

long long crosscorr(const BitSeq& s, const BitSeq& u, std::uint64_t d, std::uint64_t tau) {
    return correlate(s, u, d % u.length(), tau);
}

void CorrDistribution::add(long long value, long long count) {
    entries[value] += count;
    total += count;
}

long long CorrDistribution::count_of(long long value) const {
    const auto it = entries.find(value);
    return it == entries.end() ? 0 : it->second;
}

CorrDistribution crosscorr_distribution(const FieldCtx& F, std::uint64_t d, int threads) {
    const std::uint64_t dm = checked_decimation(F, d);
    CorrDistribution dist;
    if (F.k() <= direct_path_max_k) {
        const BitSeq s = long_seq(F);
        const BitSeq u = short_seq(F, 1);
        const std::uint64_t nk = F.subfield_order();
        std::vector<long long> values(nk);
        parallel_for(nk, threads,
                     [&](std::size_t tau) { values[tau] = correlate(s, u, dm, tau); });
        for (const long long v : values) dist.add(v);
        return dist;
    }
    // Walsh route: the multiset of C_d(tau) is the multiset of S(a) - 1.
    for (const auto& [a, s] : s_all_wht(F, dm)) dist.add(s - 1);
    return dist;
}

MomentReport moment_check(const FieldCtx& F, std::uint64_t d, int threads) {
    const CorrDistribution dist = crosscorr_distribution(F, d, threads);
    MomentReport report;
    for (const auto& [value, count] : dist.entries) {
        report.sum += value * count;
        report.sum_sq += value * value * count;
    }
    const long long expected_sq =
        static_cast<long long>(F.order()) * static_cast<long long>(F.subfield_order()) - 2;
    report.pass = report.sum == 1 && report.sum_sq == expected_sq;
    return report;
}

}  // namespace seqcorr
