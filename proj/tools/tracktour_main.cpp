// tracktour: tracking strings, unique tournaments, and the maps between them.
//
// Exit codes: 0 success, 1 domain failure (mismatch, not unique, not
// decomposable), 2 usage error, 3 environment error (missing snapshot,
// failed fetch).

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tracktour/bijection.hpp"
#include "tracktour/counting.hpp"
#include "tracktour/dfa.hpp"
#include "tracktour/oeis.hpp"
#include "tracktour/oeis_http.hpp"
#include "tracktour/rule.hpp"
#include "tracktour/selfcheck.hpp"
#include "tracktour/tournament.hpp"

namespace {

using namespace tracktour;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kDomainFailure = 1;
constexpr int kUsageError = 2;
constexpr int kEnvironmentError = 3;

int usage_error(const std::string& message) {
    std::cerr << "error: " << message << '\n';
    return kUsageError;
}

std::filesystem::path default_snapshot() {
    if (const char* env = std::getenv("TRACKTOUR_SNAPSHOT")) return env;
    return TRACKTOUR_DEFAULT_SNAPSHOT;
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("TRACKTOUR_CACHE_DIR")) return env;
    return {};
}

// --- track-check ------------------------------------------------------------

int run_track_check(const std::string& bits, const std::string& rule_text, const std::string& format) {
    TrackingRule rule;
    try {
        rule = TrackingRule::parse(rule_text);
        require_binary(bits);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    if (format != "plain" && format != "json") return usage_error("track-check formats: plain, json");

    bool tracking = false;
    try {
        const bool by_oracle = is_tracking_oracle(bits, rule);
        const bool by_dfa = run_dfa(minimize_dfa(build_dfa(rule)), bits);
        if (by_oracle != by_dfa) {
            std::cerr << "error: oracle and automaton disagree on \"" << bits << "\"\n";
            return kDomainFailure;
        }
        tracking = by_oracle;
    } catch (const WindowTooLargeError& e) {
        return usage_error(e.what());
    }

    if (format == "json")
        std::cout << json{{"string", bits}, {"rule", rule.text()}, {"tracking", tracking}}.dump(2) << '\n';
    else
        std::cout << (tracking ? "tracking" : "non-tracking") << '\n';
    return kOk;
}

// --- counts -----------------------------------------------------------------

int run_counts(int max_k, const std::string& rule_text, const std::string& method,
               const std::string& format) {
    TrackingRule rule;
    try {
        rule = TrackingRule::parse(rule_text);
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    }
    if (max_k < 0) return usage_error("--max-k must be non-negative");
    if (method != "enum" && method != "matrix" && method != "recurrence" && method != "all")
        return usage_error("counts methods: enum, matrix, recurrence, all");
    if (format != "plain" && format != "json" && format != "csv")
        return usage_error("counts formats: plain, json, csv");

    const bool default_rule = rule.text() == TrackingRule{}.text();
    if (method == "recurrence" && !default_rule)
        return usage_error("the recurrence is specific to rule " + TrackingRule{}.text());
    if (method == "enum" && max_k > 24)
        return usage_error("enumeration is capped at length 24");

    struct Row {
        int k;
        std::string method;
        Bignum non_tracking;
        Bignum tracking;
    };
    std::vector<Row> rows;
    Dfa dfa;
    try {
        dfa = minimize_dfa(build_dfa(rule));
    } catch (const WindowTooLargeError& e) {
        return usage_error(e.what());
    }

    for (int k = 0; k <= max_k; ++k) {
        const Bignum total = Bignum(1) << k;
        if ((method == "enum" || method == "all") && k <= 24) {
            const EnumerationCounts counts = count_by_enumeration(k, rule);
            rows.push_back({k, "enum", counts.non_tracking, counts.tracking});
        }
        if (method == "matrix" || method == "all") {
            const Bignum ntr = count_by_transfer_matrix(k, dfa);
            rows.push_back({k, "matrix", ntr, total - ntr});
        }
        if ((method == "recurrence" || method == "all") && default_rule) {
            const Bignum ntr = recurrence_ntr(k);
            rows.push_back({k, "recurrence", ntr, total - ntr});
        }
    }

    if (format == "json") {
        json out = json::array();
        for (const auto& row : rows)
            out.push_back({{"k", row.k},
                           {"method", row.method},
                           {"non_tracking", row.non_tracking.str()},
                           {"tracking", row.tracking.str()}});
        std::cout << out.dump(2) << '\n';
    } else if (format == "csv") {
        std::cout << "k,method,non_tracking,tracking\n";
        for (const auto& row : rows)
            std::cout << row.k << ',' << row.method << ',' << row.non_tracking.str() << ','
                      << row.tracking.str() << '\n';
    } else {
        std::cout << "k method non_tracking tracking\n";
        for (const auto& row : rows)
            std::cout << row.k << ' ' << row.method << ' ' << row.non_tracking.str() << ' '
                      << row.tracking.str() << '\n';
    }

    for (std::size_t i = 1; i < rows.size(); ++i)
        if (rows[i].k == rows[i - 1].k && rows[i].non_tracking != rows[i - 1].non_tracking) {
            std::cerr << "error: methods disagree at length " << rows[i].k << '\n';
            return kDomainFailure;
        }
    return kOk;
}

// --- bijection --------------------------------------------------------------

std::optional<ILString> parse_il_argument(const std::string& argument, int& exit_code) {
    try {
        require_binary(argument);
    } catch (const std::invalid_argument& e) {
        exit_code = usage_error(e.what());
        return std::nullopt;
    }
    try {
        return ILString(argument);
    } catch (const std::exception&) {
        std::cerr << "error: not an initial-loss non-tracking string\n";
        exit_code = kDomainFailure;
        return std::nullopt;
    }
}

void print_tournament(const Tournament& t, const std::string& format) {
    if (format == "dot")
        std::cout << t.to_dot();
    else if (format == "json")
        std::cout << t.to_json().dump(2) << '\n';
    else
        std::cout << t.to_hex() << '\n';
}

int run_bijection(const std::string& action, const std::string& argument, const std::string& format) {
    const bool emits_tournament = action == "to-tournament";
    if (format != "plain" && format != "json" && !(emits_tournament && format == "dot"))
        return usage_error(emits_tournament ? "to-tournament formats: plain, json, dot"
                                            : "bijection formats: plain, json");

    if (action == "to-string") {
        Tournament t = basic_tournament(1);
        try {
            t = argument.find('{') != std::string::npos
                    ? Tournament::from_json(json::parse(argument))
                    : Tournament::from_hex(argument);
        } catch (const std::exception& e) {
            return usage_error(std::string("bad tournament encoding: ") + e.what());
        }
        try {
            const ILString il = tournament_to_string(t);
            if (format == "json")
                std::cout << json{{"string", il.bits}}.dump(2) << '\n';
            else
                std::cout << il.bits << '\n';
            return kOk;
        } catch (const NotUniqueError&) {
            std::cerr << "error: not a unique tournament\n";
            return kDomainFailure;
        }
    }

    int exit_code = kOk;
    const auto il = parse_il_argument(argument, exit_code);
    if (!il) return exit_code;

    if (action == "decompose") {
        const auto blocks = decompose_blocks(*il);
        if (format == "json") {
            std::cout << blocks_to_json(blocks).dump(2) << '\n';
        } else {
            for (std::size_t i = 0; i < blocks.size(); ++i)
                std::cout << (i ? " + " : "") << block_text(blocks[i]);
            std::cout << '\n';
        }
    } else if (action == "to-tournament") {
        print_tournament(string_to_tournament(*il), format);
    } else if (action == "score") {
        const ScoreVector sv = score_vector_from_string(*il);
        if (format == "json") {
            std::cout << sv.to_json().dump() << '\n';
        } else {
            for (std::size_t i = 0; i < sv.scores.size(); ++i)
                std::cout << (i ? " " : "") << sv.scores[i];
            std::cout << '\n';
        }
    } else if (action == "dual") {
        const ILString mirrored = string_dual(*il);
        if (format == "json")
            std::cout << json{{"string", mirrored.bits}}.dump(2) << '\n';
        else
            std::cout << mirrored.bits << '\n';
    } else {
        return usage_error("bijection actions: decompose, to-tournament, to-string, score, dual");
    }
    return kOk;
}

// --- census -----------------------------------------------------------------

int run_census(int n, const std::string& format) {
    if (n < 1 || n > 7) return usage_error("census supports 1 to 7 nodes");
    if (format != "plain" && format != "json" && format != "csv")
        return usage_error("census formats: plain, json, csv");

    const CensusResult census = unique_census(n);
    const Bignum expected = ut(n);
    const bool match = Bignum(census.unique_count()) == expected;

    if (format == "json") {
        json ambiguous = json::array();
        for (const auto& group : census.groups)
            if (group.representatives.size() > 1)
                ambiguous.push_back({{"score_vector", group.sv.to_json()},
                                     {"classes", group.representatives.size()}});
        std::cout << json{{"n", n},
                          {"unique_count", census.unique_count()},
                          {"sequence_value", expected.str()},
                          {"match", match},
                          {"ambiguous", ambiguous}}
                         .dump(2)
                  << '\n';
    } else if (format == "csv") {
        std::cout << "score_vector,classes\n";
        for (const auto& group : census.groups)
            std::cout << '"' << group.sv.text() << '"' << ',' << group.representatives.size() << '\n';
    } else {
        std::cout << "nodes: " << n << '\n';
        std::cout << "unique score vectors: " << census.unique_count() << '\n';
        std::cout << "sequence value: " << expected.str() << '\n';
        std::cout << "agreement: " << (match ? "yes" : "NO") << '\n';
        const auto ambiguous = census.non_unique_score_vectors();
        if (!ambiguous.empty()) {
            std::cout << "ambiguous score vectors:\n";
            for (const auto& sv : ambiguous)
                std::cout << "  " << sv.text() << ": " << census.find(sv)->representatives.size()
                          << " classes\n";
        }
    }

    if (!match) {
        std::cerr << "error: census disagrees with the sequence at " << n << " nodes\n";
        return kDomainFailure;
    }
    return kOk;
}

// --- verify -----------------------------------------------------------------

int run_verify(const std::string& level, const std::filesystem::path& snapshot) {
    if (level != "quick" && level != "full") return usage_error("verify levels: quick, full");

    CheckOptions options;
    options.level = level == "full" ? CheckLevel::full : CheckLevel::quick;
    options.snapshot_path = snapshot;

    const auto results = run_selfcheck(options);
    long long total_checks = 0;
    int passed = 0;
    for (const auto& result : results) {
        total_checks += result.checks;
        passed += result.passed ? 1 : 0;
        if (result.passed)
            std::cout << "PASS " << result.module << ' ' << result.invariant << " (" << result.checks
                      << " checks)\n";
        else
            std::cout << "FAIL " << result.module << ' ' << result.invariant << ": " << result.detail
                      << '\n';
    }
    std::cout << passed << '/' << results.size() << " invariants passed, " << total_checks
              << " properties checked\n";
    return passed == static_cast<int>(results.size()) ? kOk : kDomainFailure;
}

// --- oeis-check -------------------------------------------------------------

int run_oeis_check(const std::string& sequence_id, bool online, const std::filesystem::path& snapshot,
                   const std::filesystem::path& cache_dir) {
    BFile remote;
    try {
        remote = fetch_bfile(sequence_id, cache_dir, !online, snapshot,
                             online ? make_http_transport() : HttpGet{});
    } catch (const std::invalid_argument& e) {
        return usage_error(e.what());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kEnvironmentError;
    }
    if (remote.entries.empty()) {
        std::cerr << "error: b-file for " << sequence_id << " is empty\n";
        return kEnvironmentError;
    }

    SequenceTable local;
    local.name = "ut";
    local.offset = remote.entries.front().first;
    for (std::size_t i = 0; i < remote.entries.size(); ++i)
        local.terms.push_back(ut(static_cast<int>(local.offset + static_cast<long long>(i))));

    const CompareReport report = compare(local, remote);
    if (report.full_match()) {
        std::cout << "match over " << report.matched() << " terms (indices " << report.overlap_begin
                  << ".." << report.overlap_end << ")\n";
        return kOk;
    }
    std::cerr << "error: first mismatch at index " << *report.first_mismatch << '\n';
    return kDomainFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tracking strings, unique tournaments, and the bijection between them"};
    app.require_subcommand(1);
    int exit_code = kOk;

    // track-check
    std::string tc_string, tc_rule = "3,5,2", tc_format = "plain";
    auto* track_check = app.add_subcommand("track-check", "Classify a binary string under a tracking rule");
    track_check->add_option("string", tc_string, "observation string of 0s and 1s")->required();
    track_check->add_option("--rule", tc_rule, "rule as m,n,l (default 3,5,2)");
    track_check->add_option("--format", tc_format, "plain or json");
    track_check->callback([&] { exit_code = run_track_check(tc_string, tc_rule, tc_format); });

    // counts
    int ct_max_k = 14;
    std::string ct_rule = "3,5,2", ct_method = "all", ct_format = "plain";
    auto* counts = app.add_subcommand("counts", "Count tracking and non-tracking strings by length");
    counts->add_option("--max-k", ct_max_k, "largest string length (default 14)");
    counts->add_option("--rule", ct_rule, "rule as m,n,l (default 3,5,2)");
    counts->add_option("--method", ct_method, "enum, matrix, recurrence, or all (default all)");
    counts->add_option("--format", ct_format, "plain, json, or csv");
    counts->callback([&] { exit_code = run_counts(ct_max_k, ct_rule, ct_method, ct_format); });

    // bijection
    std::string bj_action, bj_argument, bj_format = "plain";
    auto* bijection = app.add_subcommand("bijection", "Map between strings and unique tournaments");
    bijection->add_option("action", bj_action, "decompose, to-tournament, to-string, score, or dual")
        ->required();
    bijection->add_option("argument", bj_argument, "initial-loss string, or tournament hex/JSON")
        ->required();
    bijection->add_option("--format", bj_format, "plain, json, or dot (tournament output only)");
    bijection->callback([&] { exit_code = run_bijection(bj_action, bj_argument, bj_format); });

    // census
    int cs_n = 5;
    std::string cs_format = "plain";
    auto* census = app.add_subcommand("census", "Brute-force unique-tournament count on n nodes");
    census->add_option("n", cs_n, "number of nodes, 1 to 7")->required();
    census->add_option("--format", cs_format, "plain, json, or csv");
    census->callback([&] { exit_code = run_census(cs_n, cs_format); });

    // verify
    std::string vf_level = "quick";
    std::filesystem::path vf_snapshot = default_snapshot();
    auto* verify = app.add_subcommand("verify", "Run the library's invariant sweeps");
    verify->add_option("--level", vf_level, "quick or full (default quick)");
    verify->add_option("--snapshot", vf_snapshot, "b-file snapshot for the sequence cross-check");
    verify->callback([&] { exit_code = run_verify(vf_level, vf_snapshot); });

    // oeis-check
    std::string oc_sequence = "A000570";
    bool oc_offline = true, oc_online = false;
    std::filesystem::path oc_snapshot = default_snapshot();
    std::filesystem::path oc_cache = default_cache_dir();
    auto* oeis_check = app.add_subcommand("oeis-check", "Compare the sequence against its b-file");
    oeis_check->add_option("--sequence", oc_sequence, "sequence id (default A000570)");
    oeis_check->add_flag("--offline", oc_offline, "use cache/snapshot only (default)");
    oeis_check->add_flag("--online", oc_online, "fetch over HTTP, then cache");
    oeis_check->add_option("--snapshot", oc_snapshot, "bundled b-file used offline");
    oeis_check->add_option("--cache-dir", oc_cache, "cache directory (env TRACKTOUR_CACHE_DIR)");
    oeis_check->callback(
        [&] { exit_code = run_oeis_check(oc_sequence, oc_online, oc_snapshot, oc_cache); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kEnvironmentError;
    }
    return exit_code;
}
