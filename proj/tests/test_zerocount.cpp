#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <vector>

#include "seqcorr/serialize.hpp"
#include "seqcorr/zerocount.hpp"

using namespace seqcorr;

namespace {

std::vector<int> coprime_ls(int k) {
    std::vector<int> out;
    for (int l = 1; l < k; ++l) {
        if (std::gcd(l, k) == 1) out.push_back(l);
    }
    return out;
}

std::vector<int> odd_coprime_ls(int k) {
    std::vector<int> out;
    for (int l = 1; l < k; l += 2) {
        if (std::gcd(l, k) == 1) out.push_back(l);
    }
    return out;
}

}  // namespace

TEST_CASE("the particular solution R(a^(-1)) is always among the zeros") {
    for (const int k : {3, 5}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            for (const Elem a : F.subfield_elements()) {
                if (a.bits == 0) continue;
                const Elem v0 = r_eval(F, lp, F.inv(a));
                const ZeroReport zr = affine_zeros_a(F, lp, a, ZeroMethod::brute);
                CHECK(std::binary_search(zr.zeros.begin(), zr.zeros.end(), v0));
            }
        }
    }
}

TEST_CASE("brute and kernel zero sets of A_a coincide, exhaustive k in {3, 4, 5}") {
    for (const int k : {3, 4, 5}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            for (const Elem a : F.subfield_elements()) {
                if (a.bits == 0) continue;
                const ZeroReport brute = affine_zeros_a(F, lp, a, ZeroMethod::brute);
                const ZeroReport kernel = affine_zeros_a(F, lp, a, ZeroMethod::kernel);
                CHECK(brute.count == kernel.count);
                CHECK(brute.zeros == kernel.zeros);
            }
        }
    }
}

TEST_CASE("zero-count tallies match the closed forms") {
    struct Case {
        int k;
        MDistribution expected;
    };
    for (const Case c : {Case{3, {3, 3, 1}}, Case{4, {5, 8, 2}}, Case{5, {11, 15, 5}},
                         Case{7, {43, 63, 21}}}) {
        const FieldCtx F = FieldCtx::build(c.k);
        CHECK(expected_m_distribution(c.k) == c.expected);
        for (const int l : coprime_ls(c.k)) {
            const LParams lp = make_lparams(c.k, l);
            const MDistribution dist = m_distribution(F, lp);
            CHECK(dist == c.expected);
            CHECK(dist.m1 + dist.m2 + dist.m4 == (1ll << c.k) - 1);
            CHECK(dist.m2 + 3 * dist.m4 == (1ll << c.k) - 2);
        }
    }
}

TEST_CASE("p_a zeros: a = 0 gives {0, 1}; otherwise count is N_a - 1, k <= 9") {
    for (int k = 3; k <= 9; ++k) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            const ZeroReport at_zero = p_zeros(F, lp, F.zero());
            CHECK(at_zero.count == 2);
            CHECK(at_zero.zeros == std::vector<Elem>{F.zero(), F.one()});
            for (const Elem a : F.subfield_elements()) {
                if (a.bits == 0) continue;
                CHECK(p_zeros(F, lp, a).count == affine_zeros_a(F, lp, a).count - 1);
            }
        }
    }
}

TEST_CASE("the unique a in M_4 at k=3, l=1") {
    const FieldCtx F = FieldCtx::build(3);
    const LParams lp = make_lparams(3, 1);
    std::vector<Elem> four;
    for (const Elem a : F.subfield_elements()) {
        if (a.bits == 0) continue;
        if (affine_zeros_a(F, lp, a, ZeroMethod::brute).count == 4) four.push_back(a);
    }
    REQUIRE(four.size() == 1);
    CHECK(classify_m(F, lp, four[0]) == MClass::m4);
    CHECK(p_zeros(F, lp, four[0]).count == 3);
    CHECK(m2_trace_criterion(F, lp, four[0]) == 0);
}

TEST_CASE("M_2 trace criterion matches the classification, exhaustive") {
    for (const int k : {3, 4, 5}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            for (const Elem a : F.subfield_elements()) {
                if (a.bits == 0) continue;
                const bool is_m2 = classify_m(F, lp, a) == MClass::m2;
                CHECK((m2_trace_criterion(F, lp, a) == 1) == is_m2);
            }
        }
    }
}

TEST_CASE("trace identities on the zero set, exhaustive k in {3, 5}") {
    for (const int k : {3, 5}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            for (const Elem a : F.subfield_elements()) {
                if (a.bits == 0) continue;
                CHECK(lemma3_check(F, lp, a));
            }
        }
    }
    // all four zeros of the single M_4 case share one trace value
    const FieldCtx F = FieldCtx::build(3);
    const LParams lp = make_lparams(3, 1);
    for (const Elem a : F.subfield_elements()) {
        if (a.bits == 0 || classify_m(F, lp, a) != MClass::m4) continue;
        const ZeroReport zr = affine_zeros_a(F, lp, a);
        REQUIRE(zr.count == 4);
        const int t = F.trace_k(zr.zeros[0]);
        for (const Elem z : zr.zeros) CHECK(F.trace_k(z) == t);
    }
}

TEST_CASE("zero reports serialize with hex zeros") {
    const FieldCtx F = FieldCtx::build(3);
    const LParams lp = make_lparams(3, 1);
    const std::string json = to_json(F, p_zeros(F, lp, F.zero()), -1);
    CHECK(json == R"({"count":2,"method":"brute","zeros":["00","01"]})");
}

TEST_CASE("argument validation") {
    const FieldCtx F = FieldCtx::build(3);
    const LParams lp = make_lparams(3, 1);
    CHECK_THROWS_AS(affine_zeros_a(F, lp, F.zero()), ZeroArgument);
    CHECK_THROWS_AS(classify_m(F, lp, F.zero()), ZeroArgument);
    CHECK_THROWS_AS(m2_trace_criterion(F, lp, F.zero()), ZeroArgument);
    CHECK_THROWS_AS(affine_zeros_a(F, lp, F.alpha()), NotInSubfield);
    CHECK_THROWS_AS(p_zeros(F, lp, F.alpha()), NotInSubfield);
}

TEST_CASE("T_a: zero counts of the linearized polynomial") {
    SUBCASE("a = 0 has the single zero z = 0") {
        const FieldCtx F = FieldCtx::build(3);
        const LParams lp = make_lparams(3, 1);
        const ZeroReport zr = linearized_kernel_l(F, lp, F.zero());
        CHECK(zr.count == 1);
        CHECK(zr.zeros == std::vector<Elem>{F.zero()});
    }
    SUBCASE("kernel and brute agree at m in {6, 10}") {
        for (const int k : {3, 5}) {
            const FieldCtx F = FieldCtx::build(k);
            for (const int l : odd_coprime_ls(k)) {
                const LParams lp = make_lparams(k, l);
                for (const Elem a : F.subfield_elements()) {
                    const ZeroReport brute = linearized_kernel_l(F, lp, a, ZeroMethod::brute);
                    const ZeroReport kernel = linearized_kernel_l(F, lp, a, ZeroMethod::kernel);
                    CHECK(brute.count == kernel.count);
                    CHECK(brute.zeros == kernel.zeros);
                }
            }
        }
    }
    SUBCASE("kernel and brute agree at m = 18 on sampled a") {
        const FieldCtx F = FieldCtx::build(9);
        const LParams lp = make_lparams(9, 1);
        const auto elems = F.subfield_elements();
        for (const std::size_t idx : {std::size_t{0}, std::size_t{1}, std::size_t{7},
                                      std::size_t{100}, std::size_t{300}, std::size_t{511}}) {
            const Elem a = elems[idx];
            const ZeroReport brute = linearized_kernel_l(F, lp, a, ZeroMethod::brute);
            const ZeroReport kernel = linearized_kernel_l(F, lp, a, ZeroMethod::kernel);
            CHECK(brute.count == kernel.count);
            CHECK(brute.zeros == kernel.zeros);
        }
    }
    SUBCASE("T_a in {1, 4}; zero trace of R(a^(-1)) forces T_a = 1") {
        for (const int k : {3, 5, 7}) {
            const FieldCtx F = FieldCtx::build(k);
            for (const int l : odd_coprime_ls(k)) {
                const LParams lp = make_lparams(k, l);
                for (const Elem a : F.subfield_elements()) {
                    const long long ta = linearized_kernel_l(F, lp, a).count;
                    CHECK((ta == 1 || ta == 4));
                    if (a.bits != 0 && F.trace_k(r_eval(F, lp, F.inv(a))) == 0) {
                        CHECK(ta == 1);
                    }
                }
            }
        }
    }
    SUBCASE("zero sets are closed under addition and the cube root of unity") {
        const FieldCtx F = FieldCtx::build(5);
        const Elem omega = F.alpha_pow(F.order() / 3);
        for (const int l : odd_coprime_ls(5)) {
            const LParams lp = make_lparams(5, l);
            for (const Elem a : F.subfield_elements()) {
                const ZeroReport zr = linearized_kernel_l(F, lp, a);
                for (const Elem z1 : zr.zeros) {
                    CHECK(std::binary_search(zr.zeros.begin(), zr.zeros.end(),
                                             F.mul(omega, z1)));
                    for (const Elem z2 : zr.zeros) {
                        CHECK(std::binary_search(zr.zeros.begin(), zr.zeros.end(),
                                                 F.add(z1, z2)));
                    }
                }
            }
        }
    }
    SUBCASE("parity preconditions") {
        const FieldCtx even = FieldCtx::build(4);
        const LParams lp_even = make_lparams(4, 1);
        CHECK_THROWS_AS(linearized_kernel_l(even, lp_even, even.one()), PreconditionViolated);
        const FieldCtx F = FieldCtx::build(5);
        const LParams lp2 = make_lparams(5, 2);
        CHECK_THROWS_AS(linearized_kernel_l(F, lp2, F.one()), PreconditionViolated);
    }
}

TEST_CASE("membership of a Tr_k^m(r z^(2^l+1)) in {0, 1}, exhaustive k=3") {
    const FieldCtx F = FieldCtx::build(3);
    const LParams lp = make_lparams(3, 1);
    const Elem r = F.pick_noncube_r();
    for (const Elem a : F.subfield_elements()) {
        CHECK(lemma6_check(F, lp, a));
        // nonzero zeros give the value exactly 1 when a != 0
        if (a.bits == 0) continue;
        for (const Elem z : linearized_kernel_l(F, lp, a).zeros) {
            if (z.bits == 0) continue;
            const Elem w = F.mul(r, F.pow(z, (std::uint64_t{1} << lp.l) + 1));
            CHECK(F.mul(a, F.trace_k_m(w)) == F.one());
        }
    }
}
