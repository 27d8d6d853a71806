#pragma once
// Verification harness: named identity suites, the valid-decimation
// enumeration, the exhaustive three-valued search, and the linear system
// fixing the final distribution counts.
//
// A decimation d is "valid" when d(2^l + 1) = 2^i mod 2^k - 1 for some l with
// 0 < l < k, gcd(l, k) = 1 (k odd).  Every valid d yields the three-valued
// spectrum; the search tests the converse numerically: no other coprime
// cyclotomic coset is three-valued.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seqcorr/field.hpp"
#include "seqcorr/sequences.hpp"

namespace seqcorr {

struct DecimationClass {
    std::vector<std::uint64_t> coset;  // orbit under doubling mod 2^k-1, sorted
    std::uint64_t rep = 0;             // canonical representative = min of coset
    bool coprime = false;
};

// One class per l with 0 < l < k, gcd(l, k) = 1, deduplicated and sorted by
// representative.  EvenK for even k.
std::vector<DecimationClass> valid_decimations(int k);

// All cyclotomic cosets of nonzero residues mod 2^k - 1 whose elements are
// coprime to 2^k - 1, sorted by representative.
std::vector<DecimationClass> coprime_classes(int k);

struct SearchResult {
    int k = 0;
    std::vector<DecimationClass> found;      // classes with exactly 3 distinct values
    std::vector<DecimationClass> predicted;  // valid_decimations(k)
    bool conjecture_holds = false;           // found == predicted (as rep sets)
    bool distributions_match = false;        // every found class matches the closed form
    long long classes_scanned = 0;
};

// Scans one representative per coprime coset and counts distinct values of
// the S(a) spectrum.  m <= 22 by default; m in (22, 26] requires long_run.
SearchResult search_three_valued(const FieldCtx& F, int threads = 0, bool long_run = false);

struct DistributionSolution {
    long long r = 0;  // multiplicity of value 0
    long long s = 0;  // multiplicity of value  2^k
    long long t = 0;  // multiplicity of value -2^k
    long long v = 0;  // multiplicity of value -2^(k+1)
    friend bool operator==(const DistributionSolution&, const DistributionSolution&) = default;
};

// Solves r+s+t+v = 2^k-1, s-t-2v = 1, s+t+4v = 2^k-1 under the side condition
// s+t = s_plus_t.  For s_plus_t = (2^k+1)/3 the unique solution is
// (2^(k-1)-1, (2^k+1)/3, 0, (2^(k-1)-1)/3).  NoSolution when inconsistent.
DistributionSolution solve_distribution(int k, long long s_plus_t);

// The closed-form spectra: S(a) takes -2^(k+1), 0, 2^k with multiplicities
// (2^(k-1)-1)/3, 2^(k-1)-1, (2^k+1)/3; C_d(tau) is shifted down by 1.
CorrDistribution expected_s_distribution(int k);
CorrDistribution expected_c_distribution(int k);

struct VerifyReport {
    std::string theorem;
    int k = 0;
    std::optional<int> l;
    std::optional<std::uint64_t> d;
    bool pass = false;
    long long checked = 0;
    std::vector<std::string> counterexamples;  // empty iff pass
    std::string info;                          // deterministic notes (sampling, tallies)
    double wall_ms = 0.0;
};

// Canonical suite order: lemma1..lemma9, theorem1, theorem2, corollary1,
// corollary2, conjecture1.
const std::vector<std::string>& suite_names();

// Runs the requested suites in canonical order.  UnknownTheorem for a name
// outside suite_names(); EvenK when an odd-k-only suite is requested on an
// even-k context.
std::vector<VerifyReport> run_suite(const FieldCtx& F, const std::vector<std::string>& which,
                                    int threads = 0, bool long_run = false);

}  // namespace seqcorr
