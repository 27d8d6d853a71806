// Command-line front end: field inspection, crosscorrelation queries, the
// three-valued search, verification suites, and a summary table of all
// three-valued decimation classes per field size.
//
// Exit codes: 0 all requested checks passed, 1 verification failure
// (counterexamples printed), 2 usage or parameter error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqcorr/expsums.hpp"
#include "seqcorr/field.hpp"
#include "seqcorr/parallel.hpp"
#include "seqcorr/sequences.hpp"
#include "seqcorr/serialize.hpp"
#include "seqcorr/verify.hpp"

namespace {

using seqcorr::FieldCtx;
using ordered_json = nlohmann::ordered_json;

std::uint64_t parse_hex(const std::string& s) {
    std::string h = s;
    if (h.starts_with("0x") || h.starts_with("0X")) h.erase(0, 2);
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(h, &used, 16);
    if (used != h.size()) throw seqcorr::Error("bad hex value '" + s + "'");
    return v;
}

FieldCtx build_field(int k, const std::optional<std::string>& modulus_hex,
                     const std::optional<std::string>& config_path) {
    std::optional<std::uint64_t> modulus;
    if (config_path) {
        const auto overrides = seqcorr::load_modulus_config(*config_path);
        if (const auto it = overrides.find(2 * k); it != overrides.end()) modulus = it->second;
    }
    if (modulus_hex) modulus = parse_hex(*modulus_hex);
    return FieldCtx::build(k, modulus);
}

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

int cmd_field_info(const FieldCtx& F, const std::string& output) {
    char modhex[32];
    std::snprintf(modhex, sizeof modhex, "%llx", static_cast<unsigned long long>(F.spec().modulus));
    if (output == "json") {
        ordered_json j;
        j["k"] = F.k();
        j["m"] = F.m();
        j["n"] = F.order();
        j["modulus_hex"] = modhex;
        j["modulus_poly"] = seqcorr::poly_to_string(F.spec().modulus);
        j["alpha"] = F.hex(F.alpha());
        j["beta"] = F.hex(F.beta());
        if (F.k() % 2 == 1) j["r"] = F.hex(F.pick_noncube_r());
        j["subfield_size"] = std::uint64_t{1} << F.k();
        j["log_tables"] = F.has_tables();
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "k: " << F.k() << "\n";
    std::cout << "m: " << F.m() << "\n";
    std::cout << "n: " << F.order() << "\n";
    std::cout << "modulus: " << modhex << " (" << seqcorr::poly_to_string(F.spec().modulus)
              << ")\n";
    std::cout << "alpha: " << F.hex(F.alpha()) << "\n";
    std::cout << "beta: " << F.hex(F.beta()) << "\n";
    if (F.k() % 2 == 1) {
        std::cout << "r (noncube, r^(2^k+1)=1): " << F.hex(F.pick_noncube_r()) << "\n";
    } else {
        std::cout << "r: none (k even)\n";
    }
    std::cout << "subfield size: " << (std::uint64_t{1} << F.k()) << "\n";
    std::cout << "log tables: " << (F.has_tables() ? "yes" : "no (carry-less path)") << "\n";
    return 0;
}

int cmd_xcorr(const FieldCtx& F, std::uint64_t d, bool dist, const std::string& output,
              int threads) {
    if (dist) {
        const seqcorr::CorrDistribution distribution =
            seqcorr::crosscorr_distribution(F, d, threads);
        if (output == "json") {
            ordered_json j;
            j["k"] = F.k();
            j["d"] = d;
            j["distribution"] = ordered_json::parse(seqcorr::to_json(distribution));
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << seqcorr::to_csv(distribution);
        }
        return 0;
    }
    if (std::gcd(d % F.subfield_order(), F.subfield_order()) != 1) {
        throw seqcorr::BadDecimation("gcd(d, 2^k - 1) must be 1, got d=" + std::to_string(d));
    }
    const seqcorr::BitSeq s = seqcorr::long_seq(F);
    const seqcorr::BitSeq u = seqcorr::short_seq(F, 1);
    std::vector<long long> values(F.subfield_order());
    seqcorr::parallel_for(values.size(), threads, [&](std::size_t tau) {
        values[tau] = seqcorr::crosscorr(s, u, d, tau);
    });
    if (output == "json") {
        ordered_json j;
        j["k"] = F.k();
        j["d"] = d;
        j["values"] = values;
        std::cout << j.dump(2) << "\n";
    } else {
        for (std::size_t tau = 0; tau < values.size(); ++tau) {
            std::cout << tau << "," << values[tau] << "\n";
        }
    }
    return 0;
}

int cmd_search(const FieldCtx& F, const std::string& output, int threads, bool long_run) {
    const seqcorr::SearchResult res = seqcorr::search_three_valued(F, threads, long_run);
    if (output == "json") {
        std::cout << seqcorr::to_json(res) << "\n";
    } else {
        auto reps = [](const std::vector<seqcorr::DecimationClass>& classes) {
            std::string s;
            for (const auto& cls : classes) {
                if (!s.empty()) s += " ";
                s += std::to_string(cls.rep);
            }
            return s;
        };
        std::cout << "k: " << res.k << "\n";
        std::cout << "classes scanned: " << res.classes_scanned << "\n";
        std::cout << "predicted: " << reps(res.predicted) << "\n";
        std::cout << "found: " << reps(res.found) << "\n";
        std::cout << "conjecture_holds: " << (res.conjecture_holds ? "true" : "false") << "\n";
        std::cout << "distributions_match: " << (res.distributions_match ? "true" : "false")
                  << "\n";
    }
    return res.conjecture_holds && res.distributions_match ? 0 : 1;
}

int cmd_verify(const FieldCtx& F, const std::string& suites, const std::string& output,
               int threads, bool long_run, bool timings) {
    const std::vector<std::string> names = split_csv(suites);
    const std::vector<seqcorr::VerifyReport> reports =
        seqcorr::run_suite(F, names, threads, long_run);
    bool all_pass = true;
    for (const auto& rep : reports) all_pass &= rep.pass;
    if (output == "json") {
        std::cout << seqcorr::to_json(reports, timings) << "\n";
        return all_pass ? 0 : 1;
    }
    for (const auto& rep : reports) {
        std::cout << rep.theorem << " k=" << rep.k;
        if (rep.l) std::cout << " l=" << *rep.l;
        if (rep.d) std::cout << " d=" << *rep.d;
        std::cout << ": " << (rep.pass ? "PASS" : "FAIL") << " (checked " << rep.checked;
        if (timings) std::printf(", %.1f ms", rep.wall_ms);
        std::cout << ")\n";
        if (!rep.info.empty()) std::cout << "  note: " << rep.info << "\n";
        for (const auto& cx : rep.counterexamples) std::cout << "  !! " << cx << "\n";
    }
    return all_pass ? 0 : 1;
}

int cmd_table1(int max_m, const std::optional<std::string>& config_path,
               const std::string& output, int threads, bool long_run) {
    struct Row {
        int m;
        std::vector<std::uint64_t> reps;
        bool conjecture_holds;
    };
    std::vector<Row> rows;
    bool all_hold = true;
    for (int k = 3; 2 * k <= max_m; k += 2) {
        if (2 * k > 22 && !long_run) {
            std::cerr << "note: skipping m=" << 2 * k << " (requires --long-run)\n";
            continue;
        }
        const FieldCtx F = build_field(k, std::nullopt, config_path);
        const seqcorr::SearchResult res = seqcorr::search_three_valued(F, threads, long_run);
        Row row{2 * k, {}, res.conjecture_holds && res.distributions_match};
        for (const auto& cls : res.found) row.reps.push_back(cls.rep);
        all_hold &= row.conjecture_holds;
        rows.push_back(std::move(row));
    }
    if (output == "json") {
        ordered_json arr = ordered_json::array();
        for (const Row& row : rows) {
            arr.push_back(ordered_json{{"m", row.m},
                                       {"three_valued", row.reps},
                                       {"conjecture_holds", row.conjecture_holds}});
        }
        std::cout << arr.dump(2) << "\n";
    } else {
        std::cout << "m\tthree-valued decimation class minima\n";
        for (const Row& row : rows) {
            std::cout << row.m << "\t";
            for (std::size_t i = 0; i < row.reps.size(); ++i) {
                if (i) std::cout << " ";
                std::cout << row.reps[i];
            }
            std::cout << "\n";
        }
    }
    return all_hold ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-sequence crosscorrelation laboratory over GF(2^m), m = 2k"};
    app.require_subcommand(1);

    int k = 3;
    std::optional<std::string> modulus_hex;
    std::optional<std::string> config_path;
    std::string output = "text";
    int threads = 0;
    bool long_run = false;
    bool timings = false;

    auto add_common = [&](CLI::App* sub, bool needs_k) {
        if (needs_k) sub->add_option("--k", k, "subfield degree k (field is GF(2^(2k)))")->required();
        sub->add_option("--modulus", modulus_hex, "modulus override as a hex bitstring");
        sub->add_option("--config", config_path, "modulus override file (lines: <m> <hex>)");
        sub->add_option("--output", output, "output format")
            ->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--threads", threads, "worker threads (0 = machine parallelism)");
    };

    CLI::App* info = app.add_subcommand("field-info", "print the field context");
    add_common(info, true);

    CLI::App* xcorr = app.add_subcommand("xcorr", "crosscorrelation values or distribution");
    std::uint64_t d = 1;
    bool dist = false;
    add_common(xcorr, true);
    xcorr->add_option("--d", d, "decimation, gcd(d, 2^k-1) = 1")->required();
    xcorr->add_flag("--dist", dist, "print the distribution over all shifts");

    CLI::App* search = app.add_subcommand("search", "exhaustive three-valued search");
    add_common(search, true);
    search->add_flag("--long-run", long_run, "allow m > 22 (up to 26)");

    CLI::App* verify = app.add_subcommand("verify", "run verification suites");
    std::string suites;
    add_common(verify, true);
    verify->add_option("--suite", suites, "comma-separated suite names (lemma1..lemma9, theorem1, theorem2, corollary1, corollary2, conjecture1)")
        ->required();
    verify->add_flag("--long-run", long_run, "allow m > 22 searches");
    verify->add_flag("--timings", timings, "include wall times in the output");

    CLI::App* table1 = app.add_subcommand("table1", "three-valued classes for all odd k with 2k <= max-m");
    int max_m = 18;
    add_common(table1, false);
    table1->add_option("--max-m", max_m, "largest field degree m to scan");
    table1->add_flag("--long-run", long_run, "allow m > 22 (up to 26)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (info->parsed()) {
            return cmd_field_info(build_field(k, modulus_hex, config_path), output);
        }
        if (xcorr->parsed()) {
            return cmd_xcorr(build_field(k, modulus_hex, config_path), d, dist, output, threads);
        }
        if (search->parsed()) {
            return cmd_search(build_field(k, modulus_hex, config_path), output, threads, long_run);
        }
        if (verify->parsed()) {
            return cmd_verify(build_field(k, modulus_hex, config_path), suites, output, threads,
                              long_run, timings);
        }
        if (table1->parsed()) {
            return cmd_table1(max_m, config_path, output, threads, long_run);
        }
    } catch (const seqcorr::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
