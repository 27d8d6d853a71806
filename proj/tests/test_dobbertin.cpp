#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>
#include <vector>

#include "seqcorr/dobbertin.hpp"

using namespace seqcorr;

namespace {

std::vector<int> coprime_ls(int k) {
    std::vector<int> out;
    for (int l = 1; l < k; ++l) {
        if (std::gcd(l, k) == 1) out.push_back(l);
    }
    return out;
}

// Test-side oracle for F_j/G_j: sum v^e over all signed exponent patterns
// e = sum of (-1)^(eps_i) 2^(il), i < j, with eps_{j-1} = 0, no adjacent
// (1,1) pair, and eps_0 = 0 for F (1 for G).
Elem fg_pattern_oracle(const FieldCtx& F, int k, int l, int j, Elem v, bool g_family) {
    const std::uint64_t nk = (std::uint64_t{1} << k) - 1;
    Elem acc = F.zero();
    for (std::uint32_t eps = 0; eps < (1u << j); ++eps) {
        if ((eps >> (j - 1)) & 1u) continue;
        if (((eps >> 0) & 1u) != (g_family ? 1u : 0u)) continue;
        bool adjacent = false;
        for (int i = 0; i + 1 < j; ++i) {
            if (((eps >> i) & 1u) && ((eps >> (i + 1)) & 1u)) adjacent = true;
        }
        if (adjacent) continue;
        std::int64_t e = 0;
        for (int i = 0; i < j; ++i) {
            const std::int64_t term = std::int64_t{1} << (i * l % k);
            e += ((eps >> i) & 1u) ? -term : term;
        }
        e %= static_cast<std::int64_t>(nk);
        if (e < 0) e += static_cast<std::int64_t>(nk);
        acc = F.add(acc, F.pow(v, static_cast<std::uint64_t>(e)));
    }
    return acc;
}

}  // namespace

TEST_CASE("make_lparams examples") {
    const LParams a = make_lparams(5, 2);
    CHECK(a.l_prime == 3);
    CHECK(a.e == std::vector<std::uint64_t>{1, 5, 21});
    CHECK(a.e.back() * 3 % 31 == 1);

    const LParams b = make_lparams(3, 1);
    CHECK(b.l_prime == 1);
    CHECK(b.e == std::vector<std::uint64_t>{1});

    CHECK_THROWS_AS(make_lparams(6, 2), NotCoprime);
    CHECK_THROWS_AS(make_lparams(5, 0), NotCoprime);
    CHECK_THROWS_AS(make_lparams(5, 5), NotCoprime);
}

TEST_CASE("F/G base cases and the signed exponent pattern, exhaustive at k=5") {
    const FieldCtx F = FieldCtx::build(5);
    for (const int l : coprime_ls(5)) {
        const LParams lp = make_lparams(5, l);
        for (const Elem v : F.subfield_elements()) {
            const FGPair base = fg_eval(F, lp, 1, v);
            CHECK(base.f == v);
            CHECK(base.g == F.zero());
            if (v.bits == 0) continue;
            for (int j = 1; j <= lp.l_prime + 1; ++j) {
                const FGPair fg = fg_eval(F, lp, j, v);
                CHECK(fg.f == fg_pattern_oracle(F, 5, l, j, v, false));
                CHECK(fg.g == fg_pattern_oracle(F, 5, l, j, v, true));
            }
        }
    }
}

TEST_CASE("F_3 unrolls to v^(2^(2l)+2^l+1) + v^(2^(2l)-2^l+1)") {
    const FieldCtx F = FieldCtx::build(5);
    const std::uint64_t nk = 31;
    for (const int l : coprime_ls(5)) {
        const LParams lp = make_lparams(5, l);
        if (lp.l_prime + 1 < 3) continue;
        const std::uint64_t p2l = std::uint64_t{1} << (2 * l % 5);
        const std::uint64_t pl = std::uint64_t{1} << (l % 5);
        const std::uint64_t e1 = (p2l + pl + 1) % nk;
        const std::uint64_t e2 = (p2l + nk - pl + 1) % nk;
        for (const Elem v : F.subfield_elements()) {
            if (v.bits == 0) continue;
            const Elem expected = F.add(F.pow(v, e1), F.pow(v, e2));
            CHECK(fg_eval(F, lp, 3, v).f == expected);
        }
    }
}

TEST_CASE("R collapses to the identity for l' = 1") {
    const FieldCtx F = FieldCtx::build(3);
    const LParams lp = make_lparams(3, 1);
    for (const Elem v : F.subfield_elements()) {
        CHECK(r_eval(F, lp, v) == v);
    }
}

TEST_CASE("D is a bijection of the punctured subfield and inverts R") {
    for (const int k : {3, 5, 7}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            std::set<std::uint64_t> image;
            for (const Elem v : F.subfield_elements()) {
                if (v.bits == 0) continue;
                const Elem dv = d_eval(F, lp, v);
                CHECK(F.in_subfield(dv));
                image.insert(dv.bits);
                // D(x) = y^(-1)  =>  R(y) = x
                const Elem y = F.inv(dv);
                CHECK(r_eval(F, lp, y) == v);
            }
            CHECK(image.size() == F.subfield_order());
        }
    }
    const FieldCtx F = FieldCtx::build(3);
    CHECK_THROWS_AS(d_eval(F, make_lparams(3, 1), F.zero()), ZeroArgument);
}

TEST_CASE("x^(2^(l'l)) = x^2 on the subfield, exhaustive k <= 7") {
    for (const int k : {3, 4, 5, 6, 7}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            for (const Elem x : F.subfield_elements()) {
                CHECK(F.frob(x, lp.l_prime * lp.l) == F.square(x));
            }
        }
    }
}

TEST_CASE("H_1, H_2, H_3 symbolic forms") {
    // k=5, l=2: l' = 3, so all three displayed polynomials exist
    const LParams lp = make_lparams(5, 2);
    const ExpSet h1 = h_expset(lp, 1);
    CHECK(h1.exponents == std::vector<std::uint64_t>{1});
    CHECK(!h1.constant);

    const ExpSet h2 = h_expset(lp, 2);
    CHECK(h2.exponents == std::vector<std::uint64_t>{5});  // v^(1+2^l)

    // H_3 = v + v^(1+2^(2l)) + v^(1+2^l+2^(2l))
    const ExpSet h3 = h_expset(lp, 3);
    CHECK(h3.exponents == std::vector<std::uint64_t>{1, 17, 21});
    CHECK(to_string(h3) == "v + v^17 + v^21");
}

TEST_CASE("term count recurrence #H_i = 2^(i-1) - #H_(i-1), k in {5, 7}") {
    for (const int k : {5, 7}) {
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            long long prev = 0;
            for (int i = 1; i <= lp.l_prime; ++i) {
                const ExpSet h = h_expset(lp, i);
                CHECK(!h.constant);
                const long long count = static_cast<long long>(h.exponents.size());
                if (i > 1) CHECK(count == (1ll << (i - 1)) - prev);
                prev = count;
            }
        }
    }
}

TEST_CASE("h_expset and the closed-form h_eval agree pointwise, k <= 7") {
    for (const int k : {3, 4, 5, 6, 7}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            for (int i = 1; i <= lp.l_prime; ++i) {
                const ExpSet set = h_expset(lp, i);
                for (const Elem v : F.subfield_elements()) {
                    CHECK(h_eval(F, lp, i, v) == eval_expset(F, set, v));
                }
            }
        }
    }
}

TEST_CASE("symbolic expansion is capped at k <= 11") {
    const LParams lp = make_lparams(13, 2);
    CHECK_THROWS_AS(h_expset(lp, 2), PreconditionViolated);
}

TEST_CASE("Q basics and the Q(H_l') product identity, exhaustive k in {3, 5}") {
    for (const int k : {3, 5}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            for (const Elem x0 : F.subfield_elements()) {
                if (x0.bits == 0) continue;
                CHECK(q_eval(F, lp, x0, F.zero()) == x0);
                const Elem lhs = q_eval(F, lp, x0, h_eval(F, lp, lp.l_prime, F.inv(x0)));
                const Elem rhs =
                    F.mul(F.add(F.one(), x0), F.pow(F.add(F.one(), F.inv(x0)), lp.e.back()));
                CHECK(lhs == rhs);
            }
        }
    }
    const FieldCtx F = FieldCtx::build(3);
    CHECK_THROWS_AS(q_eval(F, make_lparams(3, 1), F.zero(), F.one()), ZeroArgument);
}

TEST_CASE("trace of H_i matches the unreduced polynomial, exhaustive k <= 5") {
    for (const int k : {3, 4, 5}) {
        const FieldCtx F = FieldCtx::build(k);
        for (const int l : coprime_ls(k)) {
            const LParams lp = make_lparams(k, l);
            for (int i = 1; i <= lp.l_prime; ++i) {
                for (const Elem v : F.subfield_elements()) {
                    const int lhs = F.trace_k(h_eval(F, lp, i, v));
                    const int rhs =
                        F.trace_k(F.add(F.one(), F.pow(F.add(F.one(), v), lp.e[i - 1])));
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("lemma5_check passes for all admissible x0") {
    SUBCASE("k=3, l=1") {
        const FieldCtx F = FieldCtx::build(3);
        const LParams lp = make_lparams(3, 1);
        int admissible = 0;
        for (const Elem x0 : F.subfield_elements()) {
            if (x0.bits == 0 || x0 == F.one()) continue;
            CHECK(lemma5_check(F, lp, x0));
            ++admissible;
        }
        CHECK(admissible == 6);
    }
    SUBCASE("k=5, all l") {
        const FieldCtx F = FieldCtx::build(5);
        for (const int l : coprime_ls(5)) {
            const LParams lp = make_lparams(5, l);
            for (const Elem x0 : F.subfield_elements()) {
                if (x0.bits == 0 || x0 == F.one()) continue;
                CHECK(lemma5_check(F, lp, x0));
            }
        }
    }
    SUBCASE("degenerate arguments") {
        const FieldCtx F = FieldCtx::build(3);
        const LParams lp = make_lparams(3, 1);
        CHECK_THROWS_AS(lemma5_check(F, lp, F.zero()), DegenerateX0);
        CHECK_THROWS_AS(lemma5_check(F, lp, F.one()), DegenerateX0);
    }
}
