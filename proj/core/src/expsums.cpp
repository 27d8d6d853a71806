#include "seqcorr/expsums.hpp"

#include <numeric>

namespace seqcorr {
namespace {

std::uint64_t checked_decimation(const FieldCtx& F, std::uint64_t d) {
    const std::uint64_t nk = F.subfield_order();
    const std::uint64_t dm = d % nk;
    if (std::gcd(dm == 0 ? nk : dm, nk) != 1) {
        throw BadDecimation("gcd(d, 2^k - 1) must be 1, got d=" + std::to_string(d));
    }
    return dm;
}

// Subfield traces along the beta orbit: tk[t] = Tr_k(beta^t).
std::vector<std::uint8_t> beta_trace_table(const FieldCtx& F) {
    std::vector<std::uint8_t> tk(F.subfield_order());
    Elem w = F.one();
    for (std::uint64_t t = 0; t < F.subfield_order(); ++t) {
        tk[t] = static_cast<std::uint8_t>(F.trace_k(w));
        w = F.mul(w, F.beta());
    }
    return tk;
}

}  // namespace

void walsh_hadamard_transform(std::vector<std::int64_t>& data) {
    const std::size_t n = data.size();
    if (n == 0 || (n & (n - 1)) != 0) {
        throw PreconditionViolated("transform length must be a power of two");
    }
    for (std::size_t half = 1; half < n; half <<= 1) {
        for (std::size_t block = 0; block < n; block += 2 * half) {
            for (std::size_t i = block; i < block + half; ++i) {
                const std::int64_t a = data[i];
                const std::int64_t b = data[i + half];
                data[i] = a + b;
                data[i + half] = a - b;
            }
        }
    }
}

long long s_naive(const FieldCtx& F, std::uint64_t d, Elem a) {
    if (!F.in_subfield(a)) throw NotInSubfield("a must lie in GF(2^k)");
    const std::uint64_t dm = checked_decimation(F, d);
    const std::uint64_t e = dm * ((std::uint64_t{1} << F.k()) + 1);  // < 2^m - 1
    long long sum = 1;  // x = 0 contributes (-1)^0
    const std::uint64_t count = F.order();
    for (std::uint64_t v = 1; v <= count; ++v) {
        const Elem x{v};
        const int bit = F.trace_m(F.mul(a, x)) ^ F.trace_k(F.pow(x, e));
        sum += 1 - 2 * bit;
    }
    return sum;
}

std::vector<std::pair<Elem, long long>> s_all_wht(const FieldCtx& F, std::uint64_t d) {
    if (F.m() > 26) throw PreconditionViolated("Walsh evaluation capped at m <= 26");
    const std::uint64_t dm = checked_decimation(F, d);
    const std::uint64_t n = F.order();
    const std::uint64_t nk = F.subfield_order();
    const auto tk = beta_trace_table(F);

    // (-1)^f with f(alpha^j) = Tr_k(beta^(jd)); f(0) = 0.
    std::vector<std::int64_t> w(n + 1, 1);
    std::uint64_t idx = 0;
    if (F.has_tables()) {
        const auto antilog = F.antilog_table();
        for (std::uint64_t j = 0; j < n; ++j) {
            w[antilog[j]] = 1 - 2 * static_cast<std::int64_t>(tk[idx]);
            idx += dm;
            if (idx >= nk) idx -= nk;
        }
    } else {
        Elem x = F.one();
        for (std::uint64_t j = 0; j < n; ++j) {
            w[x.bits] = 1 - 2 * static_cast<std::int64_t>(tk[idx]);
            idx += dm;
            if (idx >= nk) idx -= nk;
            x = F.mul_carryless(x, F.alpha());
        }
    }

    walsh_hadamard_transform(w);

    std::vector<std::pair<Elem, long long>> out;
    out.reserve(nk);
    for (const Elem a : F.subfield_elements()) {
        if (a.bits == 0) continue;
        out.emplace_back(a, w[F.wht_index(a)]);
    }
    return out;
}

long long s_component(const FieldCtx& F, int l, Elem a, int which) {
    if (l <= 0 || l >= F.k()) throw PreconditionViolated("need 0 < l < k");
    if (which < 0 || which > 2) throw PreconditionViolated("which must be 0, 1 or 2");
    if (!F.in_subfield(a)) throw NotInSubfield("a must lie in GF(2^k)");

    Elem c = a;
    if (which == 1) c = F.mul(F.pick_noncube_r(), a);
    if (which == 2) c = F.mul(F.inv(F.pick_noncube_r()), a);

    const auto tk = beta_trace_table(F);
    const std::uint64_t n = F.order();
    const std::uint64_t nk = F.subfield_order();
    const Elem g = F.alpha_pow((std::uint64_t{1} << l) + 1);  // advances y^(2^l+1)
    long long sum = 1;  // y = 0
    Elem w = c;         // c * (alpha^j)^(2^l+1) at j = 0
    std::uint64_t idx = 0;
    for (std::uint64_t j = 0; j < n; ++j) {
        const int bit = F.trace_m(w) ^ static_cast<int>(tk[idx]);
        sum += 1 - 2 * bit;
        w = F.mul(w, g);
        idx += 1;
        if (idx >= nk) idx -= nk;
    }
    return sum;
}

DecompositionReport decomposition_check(const FieldCtx& F, std::uint64_t d, int l) {
    const int k = F.k();
    if (l <= 0 || l >= k || std::gcd(l, k) != 1) {
        throw InvalidPair("need 0 < l < k with gcd(l, k) = 1");
    }
    const std::uint64_t nk = F.subfield_order();
    const std::uint64_t dm = checked_decimation(F, d);
    const std::uint64_t prod = dm * (((std::uint64_t{1} << l) + 1) % nk) % nk;
    if ((prod & (prod - 1)) != 0 || prod == 0 || prod > (std::uint64_t{1} << (k - 1))) {
        throw InvalidPair("d(2^l + 1) is not a power of two mod 2^k - 1");
    }

    const bool l_odd = l % 2 == 1;
    const LParams lp = make_lparams(k, l);
    DecompositionReport report;
    report.k = k;
    report.l = l;
    report.d = dm;
    report.pass = true;

    for (const Elem a : F.subfield_elements()) {
        if (a.bits == 0) continue;
        SumRow row;
        row.a = a;
        row.s = s_naive(F, dm, a);
        row.s0 = s_component(F, l, a, 0);
        row.s1 = s_component(F, l, a, 1);
        row.s2 = s_component(F, l, a, 2);
        row.m_class = classify_m(F, lp, a);
        row.pass = true;

        auto fail = [&](const std::string& what) {
            row.pass = false;
            report.pass = false;
            report.failures.push_back("a=" + F.hex(a) + ": " + what);
        };

        if (l_odd) {
            if (3 * row.s != row.s0 + row.s1 + row.s2) {
                fail("3S != S0 + S1 + S2 (" + std::to_string(3 * row.s) +
                     " vs " + std::to_string(row.s0 + row.s1 + row.s2) + ")");
            }
        } else if (row.s != row.s0) {
            fail("S != S0 (" + std::to_string(row.s) + " vs " + std::to_string(row.s0) + ")");
        }
        if (row.s1 != row.s2) {
            fail("S1 != S2 (" + std::to_string(row.s1) + " vs " + std::to_string(row.s2) + ")");
        }
        if (l_odd) {
            const long long ta = linearized_kernel_l(F, lp, a).count;
            row.ta = ta;
            if (row.s1 * row.s1 != (1ll << F.m()) * ta) {
                fail("S1^2 != 2^m T_a (S1=" + std::to_string(row.s1) +
                     ", T_a=" + std::to_string(ta) + ")");
            }
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace seqcorr
