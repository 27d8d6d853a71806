#include "seqcorr/serialize.hpp"

#include <json.hpp>

namespace seqcorr {
namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json dist_obj(const CorrDistribution& dist) {
    ordered_json entries = ordered_json::array();
    for (const auto& [value, count] : dist.entries) {
        entries.push_back(ordered_json{{"value", value}, {"count", count}});
    }
    return ordered_json{{"total", dist.total}, {"entries", std::move(entries)}};
}

ordered_json class_obj(const DecimationClass& cls) {
    return ordered_json{{"rep", cls.rep}, {"coset", cls.coset}, {"coprime", cls.coprime}};
}

ordered_json report_obj(const VerifyReport& report, bool with_timing) {
    ordered_json j;
    j["theorem"] = report.theorem;
    j["k"] = report.k;
    if (report.l) j["l"] = *report.l;
    if (report.d) j["d"] = *report.d;
    j["pass"] = report.pass;
    j["checked"] = report.checked;
    j["counterexamples"] = report.counterexamples;
    if (!report.info.empty()) j["info"] = report.info;
    if (with_timing) j["wall_time_ms"] = report.wall_ms;
    return j;
}

}  // namespace

std::string to_csv(const CorrDistribution& dist) {
    std::string out;
    for (const auto& [value, count] : dist.entries) {
        out += std::to_string(value) + "," + std::to_string(count) + "\n";
    }
    return out;
}

std::string to_json(const CorrDistribution& dist, int indent) {
    return dist_obj(dist).dump(indent);
}

std::string to_json(const FieldCtx& F, const ZeroReport& report, int indent) {
    ordered_json zeros = ordered_json::array();
    for (const Elem z : report.zeros) zeros.push_back(F.hex(z));
    const ordered_json j{
        {"count", report.count}, {"method", to_string(report.method)}, {"zeros", std::move(zeros)}};
    return j.dump(indent);
}

std::string to_json(const FieldCtx& F, const DecompositionReport& report, int indent) {
    ordered_json rows = ordered_json::array();
    for (const SumRow& row : report.rows) {
        ordered_json r;
        r["a_hex"] = F.hex(row.a);
        r["S"] = row.s;
        r["S0"] = row.s0;
        r["S1"] = row.s1;
        r["S2"] = row.s2;
        if (row.ta) r["Ta"] = *row.ta;
        r["class"] = to_string(row.m_class);
        r["pass"] = row.pass;
        rows.push_back(std::move(r));
    }
    const ordered_json j{{"k", report.k},       {"l", report.l},
                         {"d", report.d},       {"pass", report.pass},
                         {"rows", std::move(rows)}, {"failures", report.failures}};
    return j.dump(indent);
}

std::string to_json(const DecimationClass& cls, int indent) {
    return class_obj(cls).dump(indent);
}

std::string to_json(const SearchResult& result, int indent) {
    ordered_json found = ordered_json::array();
    for (const auto& cls : result.found) found.push_back(class_obj(cls));
    ordered_json predicted = ordered_json::array();
    for (const auto& cls : result.predicted) predicted.push_back(class_obj(cls));
    const ordered_json j{{"k", result.k},
                         {"found", std::move(found)},
                         {"predicted", std::move(predicted)},
                         {"conjecture_holds", result.conjecture_holds},
                         {"distributions_match", result.distributions_match},
                         {"classes_scanned", result.classes_scanned}};
    return j.dump(indent);
}

std::string to_json(const VerifyReport& report, bool with_timing, int indent) {
    return report_obj(report, with_timing).dump(indent);
}

std::string to_json(const std::vector<VerifyReport>& reports, bool with_timing, int indent) {
    ordered_json arr = ordered_json::array();
    for (const VerifyReport& report : reports) arr.push_back(report_obj(report, with_timing));
    return arr.dump(indent);
}

}  // namespace seqcorr
