#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "seqcorr/serialize.hpp"
#include "seqcorr/verify.hpp"

using namespace seqcorr;

namespace {

std::vector<std::uint64_t> reps_of(const std::vector<DecimationClass>& classes) {
    std::vector<std::uint64_t> out;
    for (const auto& cls : classes) out.push_back(cls.rep);
    return out;
}

}  // namespace

TEST_CASE("valid decimation classes per k") {
    CHECK(reps_of(valid_decimations(3)) == std::vector<std::uint64_t>{3});
    CHECK(reps_of(valid_decimations(5)) == std::vector<std::uint64_t>{7, 11});
    CHECK(reps_of(valid_decimations(7)) == std::vector<std::uint64_t>{15, 27, 43});
    CHECK(reps_of(valid_decimations(9)) == std::vector<std::uint64_t>{31, 103, 171});
    CHECK(reps_of(valid_decimations(11)) ==
          std::vector<std::uint64_t>{63, 231, 365, 411, 683});
    // six classes at k=13; 1453 (from l=4) has no smaller coset member
    CHECK(reps_of(valid_decimations(13)) ==
          std::vector<std::uint64_t>{127, 911, 1243, 1453, 1639, 2731});

    CHECK_THROWS_AS(valid_decimations(4), EvenK);
    CHECK_THROWS_AS(valid_decimations(1), PreconditionViolated);
}

TEST_CASE("class structure invariants") {
    for (const int k : {5, 7, 9, 11, 13}) {
        const auto classes = valid_decimations(k);
        // l and k-l collapse to the same class: phi(k)/2 distinct classes
        long long phi = 0;
        for (int l = 1; l < k; ++l) {
            if (std::gcd(l, k) == 1) ++phi;
        }
        CHECK(static_cast<long long>(classes.size()) == phi / 2);
        for (const auto& cls : classes) {
            CHECK(cls.coprime);
            CHECK(cls.rep == cls.coset.front());
            // closed under doubling
            const std::set<std::uint64_t> members(cls.coset.begin(), cls.coset.end());
            for (const std::uint64_t x : cls.coset) {
                CHECK(members.contains(2 * x % ((std::uint64_t{1} << k) - 1)));
            }
            // every member is a usable decimation
            for (const std::uint64_t x : cls.coset) {
                CHECK(std::gcd(x, (std::uint64_t{1} << k) - 1) == 1);
            }
        }
    }
}

TEST_CASE("distribution solver") {
    CHECK(solve_distribution(3, 3) == DistributionSolution{3, 3, 0, 1});
    CHECK(solve_distribution(5, 11) == DistributionSolution{15, 11, 0, 5});
    CHECK(solve_distribution(7, 43) == DistributionSolution{63, 43, 0, 21});
    CHECK_THROWS_AS(solve_distribution(3, 2), NoSolution);
    CHECK_THROWS_AS(solve_distribution(3, 100), NoSolution);
}

TEST_CASE("expected spectra line up with the solver") {
    for (const int k : {3, 5, 7, 9}) {
        const DistributionSolution sol = solve_distribution(k, ((1ll << k) + 1) / 3);
        CHECK(sol.t == 0);
        const CorrDistribution s = expected_s_distribution(k);
        CHECK(s.count_of(0) == sol.r);
        CHECK(s.count_of(1ll << k) == sol.s);
        CHECK(s.count_of(-(1ll << k)) == 0);
        CHECK(s.count_of(-(2ll << k)) == sol.v);
        CHECK(s.total == (1ll << k) - 1);
    }
    CHECK_THROWS_AS(expected_s_distribution(4), EvenK);
}

TEST_CASE("search at k in {3, 5}") {
    for (const int k : {3, 5}) {
        const FieldCtx F = FieldCtx::build(k);
        const SearchResult res = search_three_valued(F);
        CHECK(res.conjecture_holds);
        CHECK(res.distributions_match);
        CHECK(reps_of(res.found) == reps_of(res.predicted));
        // found always contains every predicted class
        const std::vector<std::uint64_t> found_reps = reps_of(res.found);
        const std::set<std::uint64_t> found(found_reps.begin(), found_reps.end());
        for (const std::uint64_t rep : reps_of(res.predicted)) {
            CHECK(found.contains(rep));
        }
    }
    const FieldCtx even = FieldCtx::build(4);
    CHECK_THROWS_AS(search_three_valued(even), EvenK);
}

TEST_CASE("distribution is constant on a full coset (k=5 spot check)") {
    const FieldCtx F = FieldCtx::build(5);
    for (const auto& cls : valid_decimations(5)) {
        const CorrDistribution ref = crosscorr_distribution(F, cls.rep);
        for (const std::uint64_t d : cls.coset) {
            CHECK(crosscorr_distribution(F, d) == ref);
        }
    }
}

TEST_CASE("run_suite: canonical order, counts, and errors") {
    const FieldCtx F = FieldCtx::build(7);
    const auto reports = run_suite(F, {"theorem1", "lemma2"});
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].theorem == "lemma2");  // canonical order, not request order
    CHECK(reports[1].theorem == "theorem1");
    CHECK(reports[0].pass);
    CHECK(reports[0].checked == 127 * 6);
    CHECK(reports[0].counterexamples.empty());

    CHECK_THROWS_AS(run_suite(F, {"lemma0"}), UnknownTheorem);
    CHECK_THROWS_AS(run_suite(F, {}), PreconditionViolated);

    const FieldCtx even = FieldCtx::build(4);
    CHECK_THROWS_AS(run_suite(even, {"lemma6"}), EvenK);
    CHECK_THROWS_AS(run_suite(even, {"conjecture1"}), EvenK);
    CHECK(run_suite(even, {"theorem1"}).front().pass);
}

TEST_CASE("suite passes at k=5: corollary2 and lemma9 details") {
    const FieldCtx F = FieldCtx::build(5);
    const auto reports = run_suite(F, {"corollary2", "lemma9"});
    REQUIRE(reports.size() == 2);
    for (const auto& rep : reports) {
        CHECK(rep.pass);
        CHECK(rep.counterexamples.empty());
    }
    // lemma9 sweeps l in {1, 3} over all 32 subfield values
    CHECK(reports[0].theorem == "lemma9");
    CHECK(reports[0].checked == 2 * 32);
}

TEST_CASE("theorem2 and corollary1 emit one report per class") {
    const FieldCtx F = FieldCtx::build(5);
    const auto reports = run_suite(F, {"theorem2", "corollary1"});
    REQUIRE(reports.size() == 4);
    CHECK(reports[0].theorem == "theorem2");
    CHECK(reports[0].d == 7);
    CHECK(reports[1].d == 11);
    CHECK(reports[2].theorem == "corollary1");
    for (const auto& rep : reports) CHECK(rep.pass);
}

TEST_CASE("verify report JSON is deterministic and timing-free by default") {
    const FieldCtx F = FieldCtx::build(3);
    const auto a = to_json(run_suite(F, {"lemma2"}));
    const auto b = to_json(run_suite(F, {"lemma2"}));
    CHECK(a == b);
    CHECK(a.find("\"theorem\": \"lemma2\"") != std::string::npos);
    CHECK(a.find("\"pass\": true") != std::string::npos);
    CHECK(a.find("\"counterexamples\": []") != std::string::npos);
    CHECK(a.find("wall_time_ms") == std::string::npos);
    const auto timed = to_json(run_suite(F, {"lemma2"}), /*with_timing=*/true);
    CHECK(timed.find("wall_time_ms") != std::string::npos);
}

TEST_CASE("suite name registry") {
    const auto& names = suite_names();
    CHECK(names.size() == 14);
    CHECK(names.front() == "lemma1");
    CHECK(names.back() == "conjecture1");
}
