#pragma once
// JSON / CSV rendering of report types.  All output is deterministic: maps
// iterate in key order and object keys keep insertion order.

#include <string>
#include <vector>

#include "seqcorr/expsums.hpp"
#include "seqcorr/sequences.hpp"
#include "seqcorr/verify.hpp"
#include "seqcorr/zerocount.hpp"

namespace seqcorr {

// "value,count" rows sorted by value
std::string to_csv(const CorrDistribution& dist);

std::string to_json(const CorrDistribution& dist, int indent = 2);
std::string to_json(const FieldCtx& F, const ZeroReport& report, int indent = 2);
std::string to_json(const FieldCtx& F, const DecompositionReport& report, int indent = 2);
std::string to_json(const DecimationClass& cls, int indent = 2);
std::string to_json(const SearchResult& result, int indent = 2);
// with_timing controls emission of wall_time_ms (kept out by default so that
// identical runs produce byte-identical output)
std::string to_json(const VerifyReport& report, bool with_timing = false, int indent = 2);
std::string to_json(const std::vector<VerifyReport>& reports, bool with_timing = false,
                    int indent = 2);

}  // namespace seqcorr
