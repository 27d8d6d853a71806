#include "seqcorr/zerocount.hpp"

#include <algorithm>

#include "seqcorr/gf2linalg.hpp"
#include "seqcorr/parallel.hpp"

namespace seqcorr {
namespace {

void require_nonzero_subfield(const FieldCtx& F, Elem a) {
    if (!F.in_subfield(a)) throw NotInSubfield("a must lie in GF(2^k)");
    if (a.bits == 0) throw ZeroArgument("a must be nonzero");
}

// homogeneous part a^(2^l) v^(2^(2l)) + v^(2^l) + a v
Elem eval_affine_homogeneous(const FieldCtx& F, const LParams& lp, Elem a2l, Elem a, Elem v) {
    const int e1 = lp.l % lp.k;
    const int e2 = 2 * lp.l % lp.k;
    return F.add(F.add(F.mul(a2l, F.frob(v, e2)), F.frob(v, e1)), F.mul(a, v));
}

std::vector<Elem> span_from_combos(const FieldCtx& F, const std::vector<std::uint64_t>& combos,
                                   std::span<const Elem> basis, Elem offset) {
    std::vector<Elem> points;
    points.reserve(std::size_t{1} << combos.size());
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << combos.size()); ++pick) {
        std::uint64_t combo = 0;
        for (std::size_t t = 0; t < combos.size(); ++t) {
            if ((pick >> t) & 1u) combo ^= combos[t];
        }
        Elem z = offset;
        while (combo) {
            const int j = std::countr_zero(combo);
            z = F.add(z, basis[static_cast<std::size_t>(j)]);
            combo &= combo - 1;
        }
        points.push_back(z);
    }
    std::sort(points.begin(), points.end());
    return points;
}

int check_ta_preconditions(const FieldCtx& F, const LParams& lp, Elem a) {
    if (F.k() % 2 == 0 || lp.l % 2 == 0) {
        throw PreconditionViolated("T_a analysis needs odd k and odd l");
    }
    if (!F.in_subfield(a)) throw NotInSubfield("a must lie in GF(2^k)");
    return 0;
}

}  // namespace

const char* to_string(ZeroMethod method) {
    return method == ZeroMethod::brute ? "brute" : "kernel";
}

const char* to_string(MClass c) {
    switch (c) {
        case MClass::m1: return "M1";
        case MClass::m2: return "M2";
        default: return "M4";
    }
}

Elem eval_affine_a(const FieldCtx& F, const LParams& lp, Elem a, Elem v) {
    const Elem a2l = F.frob(a, lp.l % lp.k);
    return F.add(eval_affine_homogeneous(F, lp, a2l, a, v), F.one());
}

ZeroReport affine_zeros_a(const FieldCtx& F, const LParams& lp, Elem a, ZeroMethod method) {
    require_nonzero_subfield(F, a);
    ZeroReport report;
    report.method = method;
    if (method == ZeroMethod::brute) {
        for (const Elem v : F.subfield_elements()) {
            if (eval_affine_a(F, lp, a, v).bits == 0) report.zeros.push_back(v);
        }
        report.count = static_cast<long long>(report.zeros.size());
        return report;
    }
    const Elem a2l = F.frob(a, lp.l % lp.k);
    std::vector<std::uint64_t> images;
    images.reserve(static_cast<std::size_t>(lp.k));
    for (const Elem b : F.subfield_basis()) {
        images.push_back(eval_affine_homogeneous(F, lp, a2l, a, b).bits);
    }
    const auto combos = gf2_kernel(images);
    const Elem v0 = r_eval(F, lp, F.inv(a));
    report.zeros = span_from_combos(F, combos, F.subfield_basis(), v0);
    report.count = static_cast<long long>(report.zeros.size());
    return report;
}

ZeroReport p_zeros(const FieldCtx& F, const LParams& lp, Elem a) {
    if (!F.in_subfield(a)) throw NotInSubfield("a must lie in GF(2^k)");
    ZeroReport report;
    report.method = ZeroMethod::brute;
    const std::uint64_t e = (std::uint64_t{1} << lp.l) + 1;
    for (const Elem x : F.subfield_elements()) {
        if (F.add(F.add(F.pow(x, e), x), a).bits == 0) report.zeros.push_back(x);
    }
    report.count = static_cast<long long>(report.zeros.size());
    return report;
}

MClass classify_m(const FieldCtx& F, const LParams& lp, Elem a) {
    require_nonzero_subfield(F, a);
    const Elem a2l = F.frob(a, lp.l % lp.k);
    std::vector<std::uint64_t> images;
    images.reserve(static_cast<std::size_t>(lp.k));
    for (const Elem b : F.subfield_basis()) {
        images.push_back(eval_affine_homogeneous(F, lp, a2l, a, b).bits);
    }
    const auto nullity = gf2_kernel(images).size();
    switch (nullity) {
        case 0: return MClass::m1;
        case 1: return MClass::m2;
        case 2: return MClass::m4;
        default:
            throw Error("A_a has " + std::to_string(1ull << nullity) +
                        " zeros; expected 1, 2 or 4");
    }
}

MDistribution m_distribution(const FieldCtx& F, const LParams& lp, int threads) {
    const auto elems = F.subfield_elements();
    std::vector<std::uint8_t> cls(elems.size(), 0);
    parallel_for(elems.size(), threads, [&](std::size_t i) {
        if (elems[i].bits == 0) return;
        cls[i] = static_cast<std::uint8_t>(classify_m(F, lp, elems[i]));
    });
    MDistribution dist;
    for (const std::uint8_t c : cls) {
        if (c == 1) ++dist.m1;
        else if (c == 2) ++dist.m2;
        else if (c == 4) ++dist.m4;
    }
    return dist;
}

MDistribution expected_m_distribution(int k) {
    const long long pk = 1ll << k;
    if (k % 2 == 1) return {(pk + 1) / 3, pk / 2 - 1, (pk / 2 - 1) / 3};
    return {(pk - 1) / 3, pk / 2, (pk / 2 - 2) / 3};
}

int m2_trace_criterion(const FieldCtx& F, const LParams& lp, Elem a) {
    require_nonzero_subfield(F, a);
    return F.trace_k(F.add(r_eval(F, lp, F.inv(a)), F.one()));
}

bool lemma3_check(const FieldCtx& F, const LParams& lp, Elem a) {
    require_nonzero_subfield(F, a);
    const Elem v0 = r_eval(F, lp, F.inv(a));
    const int t0 = F.trace_k(v0);
    const int tr_one = F.k() & 1;  // Tr_k(1) = k mod 2
    const std::uint64_t e = (std::uint64_t{1} << lp.l) + 1;
    const int lp_bit = lp.l_prime & 1;
    for (const Elem z : affine_zeros_a(F, lp, a).zeros) {
        if (F.trace_k(z) != t0) return false;
        const int lhs = F.trace_k(F.mul(a, F.pow(z, e)));
        const int const_bit = (z == v0 ? (lp.l_prime + 1) & 1 : lp_bit) & 1;
        const int rhs = (lp_bit & t0) ^ (const_bit & tr_one);
        if (lhs != rhs) return false;
    }
    return true;
}

Elem eval_linearized_l(const FieldCtx& F, const LParams& lp, Elem a, Elem z) {
    const Elem r = F.pick_noncube_r();
    const Elem ra = F.mul(r, a);
    const Elem ra2l = F.frob(ra, lp.l);
    return F.add(F.add(F.frob(z, F.k() + lp.l), F.mul(ra2l, F.frob(z, 2 * lp.l))),
                 F.mul(ra, z));
}

ZeroReport linearized_kernel_l(const FieldCtx& F, const LParams& lp, Elem a, ZeroMethod method) {
    check_ta_preconditions(F, lp, a);
    ZeroReport report;
    report.method = method;
    const Elem r = F.pick_noncube_r();
    const Elem ra = F.mul(r, a);
    const Elem ra2l = F.frob(ra, lp.l);
    const int m = F.m();
    const int ekl = F.k() + lp.l;  // < m since l < k
    const int e2l = 2 * lp.l;      // < m since l < k

    if (method == ZeroMethod::brute) {
        if (m > 20) throw PreconditionViolated("brute zero enumeration of L_a capped at m <= 20");
        for (std::uint64_t v = 0; v < (std::uint64_t{1} << m); ++v) {
            const Elem z{v};
            const Elem val =
                F.add(F.add(F.frob(z, ekl), F.mul(ra2l, F.frob(z, e2l))), F.mul(ra, z));
            if (val.bits == 0) report.zeros.push_back(z);
        }
        report.count = static_cast<long long>(report.zeros.size());
        return report;
    }

    std::vector<std::uint64_t> images;
    images.reserve(static_cast<std::size_t>(m));
    std::vector<Elem> basis;
    basis.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const Elem b{std::uint64_t{1} << j};
        basis.push_back(b);
        images.push_back(
            F.add(F.add(F.frob(b, ekl), F.mul(ra2l, F.frob(b, e2l))), F.mul(ra, b)).bits);
    }
    const auto combos = gf2_kernel(images);
    // In the polynomial basis a combination mask is itself the element.
    report.zeros = span_from_combos(F, combos, basis, F.zero());
    report.count = static_cast<long long>(report.zeros.size());
    return report;
}

bool lemma6_check(const FieldCtx& F, const LParams& lp, Elem a) {
    check_ta_preconditions(F, lp, a);
    const Elem r = F.pick_noncube_r();
    const std::uint64_t e = (std::uint64_t{1} << lp.l) + 1;
    for (const Elem z : linearized_kernel_l(F, lp, a).zeros) {
        const Elem w = F.mul(r, F.pow(z, e));
        const Elem val = F.mul(a, F.trace_k_m(w));
        if (val.bits > 1) return false;
    }
    return true;
}

}  // namespace seqcorr
