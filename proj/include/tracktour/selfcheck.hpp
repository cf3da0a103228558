#pragma once

// Self-verification sweeps: every cross-module identity the library rests on,
// runnable as a quick smoke pass or a full exhaustive pass. The CLI's
// `verify` command is a thin shell around run_selfcheck.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "tracktour/bijection.hpp"
#include "tracktour/counting.hpp"
#include "tracktour/dfa.hpp"
#include "tracktour/oeis.hpp"
#include "tracktour/rule.hpp"
#include "tracktour/tournament.hpp"

namespace tracktour {

enum class CheckLevel { quick, full };

struct CheckResult {
    std::string module;
    std::string invariant;
    bool passed = true;
    long long checks = 0;  // individual properties examined
    std::string detail;    // first failure, empty when passed
};

struct CheckOptions {
    CheckLevel level = CheckLevel::quick;
    std::filesystem::path snapshot_path;  // b-file for the sequence cross-check
};

namespace detail {

class Recorder {
public:
    Recorder(std::string module, std::string invariant) {
        result_.module = std::move(module);
        result_.invariant = std::move(invariant);
    }

    void require(bool ok, const std::string& on_failure) {
        ++result_.checks;
        if (!ok && result_.passed) {
            result_.passed = false;
            result_.detail = on_failure;
        }
    }

    CheckResult take() { return std::move(result_); }

private:
    CheckResult result_;
};

inline std::vector<std::string> binary_strings(int length) {
    std::vector<std::string> out;
    out.reserve(1ull << length);
    for (std::uint64_t bits = 0; bits < (1ull << length); ++bits) {
        std::string s(static_cast<std::size_t>(length), '0');
        for (int i = 0; i < length; ++i)
            if ((bits >> (length - 1 - i)) & 1) s[static_cast<std::size_t>(i)] = '1';
        out.push_back(std::move(s));
    }
    return out;
}

inline std::vector<std::string> il_strings(int length) {
    std::vector<std::string> out;
    if (length == 1) {
        out.push_back("0");
        return out;
    }
    for (auto& tail : binary_strings(length - 2))
        if (!is_tracking_oracle(tail)) out.push_back("00" + tail);
    return out;
}

// Reference values, as published.
inline const std::vector<long long>& published_ntr() {
    static const std::vector<long long> v = {2, 4, 7, 11, 18, 31, 53, 89, 149, 251, 424, 715, 1204, 2028};
    return v;  // k = 1..14
}

inline const std::vector<long long>& published_ut() {
    static const std::vector<long long> v = {1,  1,  2,   4,   7,   11,  18,  31, 53,
                                             89, 149, 251, 424, 715, 1204, 2028, 3418};
    return v;  // n = 1..17
}

inline const std::vector<std::vector<std::string>>& published_nontracking_lists() {
    // Lengths 3, 4, 5.
    static const std::vector<std::vector<std::string>> lists = {
        {"000", "001", "010", "011", "100", "101", "110"},
        {"0000", "0001", "0010", "0011", "0100", "0101", "0110", "1000", "1001", "1010", "1100"},
        {"00000", "00001", "00010", "00011", "00100", "00101", "00110", "01000", "01001", "01010",
         "01100", "10000", "10001", "10010", "10011", "10100", "11000", "11001"},
    };
    return lists;
}

}  // namespace detail

inline std::vector<CheckResult> run_selfcheck(const CheckOptions& options = {}) {
    const bool full = options.level == CheckLevel::full;
    std::vector<CheckResult> results;

    {
        detail::Recorder r("rule_automaton", "published-string-lists");
        const auto& lists = detail::published_nontracking_lists();
        for (std::size_t i = 0; i < lists.size(); ++i) {
            const int k = static_cast<int>(i) + 3;
            const auto enumerated = non_tracking_strings(k);
            r.require(enumerated == lists[i],
                      "non-tracking list for length " + std::to_string(k) + " differs");
        }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("rule_automaton", "oracle-dfa-agreement");
        const int max_len = full ? 12 : 8;
        for (const TrackingRule& rule :
             {TrackingRule{3, 5, 2}, TrackingRule{2, 3, 2}, TrackingRule{3, 4, 2}, TrackingRule{4, 6, 3}}) {
            const Dfa dfa = minimize_dfa(build_dfa(rule));
            for (int len = 0; len <= max_len; ++len)
                for (const auto& s : detail::binary_strings(len))
                    r.require(run_dfa(dfa, s) == is_tracking_oracle(s, rule),
                              "rule " + rule.text() + " disagrees on \"" + s + "\"");
        }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("counting", "published-sequence");
        for (int k = 1; k <= 14; ++k) {
            const Bignum expected = detail::published_ntr()[static_cast<std::size_t>(k - 1)];
            r.require(count_by_enumeration(k).non_tracking == expected,
                      "enumeration differs at length " + std::to_string(k));
            r.require(count_by_transfer_matrix(k) == expected,
                      "transfer matrix differs at length " + std::to_string(k));
            r.require(recurrence_ntr(k) == expected, "recurrence differs at length " + std::to_string(k));
        }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("counting", "three-way-agreement");
        const int max_enum = full ? 18 : 14;
        const int max_k = full ? 40 : 14;
        for (int k = 0; k <= max_k; ++k) {
            const Bignum by_matrix = count_by_transfer_matrix(k);
            r.require(recurrence_ntr(k) == by_matrix, "recurrence vs matrix at length " + std::to_string(k));
            if (k <= max_enum) {
                const EnumerationCounts counts = count_by_enumeration(k);
                r.require(counts.non_tracking == by_matrix,
                          "enumeration vs matrix at length " + std::to_string(k));
                r.require(counts.tracking + counts.non_tracking == Bignum(1) << k,
                          "tracking + non-tracking is not 2^k at length " + std::to_string(k));
            }
        }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("counting", "shift-and-compositions");
        for (int k = 0; k <= 40; ++k)
            r.require(recurrence_ntr(k) == ut(k + 2), "two-index shift fails at length " + std::to_string(k));
        for (int n = 1; n <= 40; ++n)
            r.require(count_compositions(n) == ut(n), "composition count differs at size " + std::to_string(n));
        for (int n = 1; n <= 17; ++n)
            r.require(ut(n) == detail::published_ut()[static_cast<std::size_t>(n - 1)],
                      "sequence value differs at size " + std::to_string(n));
        results.push_back(r.take());
    }

    {
        detail::Recorder r("tournament_core", "basic-self-dual");
        for (int size : {1, 3, 4, 5}) {
            const Tournament t = basic_tournament(size);
            r.require(is_isomorphic(t, dual(t)), "basic size " + std::to_string(size) + " is not self-dual");
        }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("tournament_core", "census-counts");
        const int max_n = full ? 7 : 5;
        for (int n = 1; n <= max_n; ++n) {
            const CensusResult census = unique_census(n);
            r.require(Bignum(census.unique_count()) == ut(n),
                      "census count differs from the sequence at " + std::to_string(n) + " nodes");
            if (n == 5) {
                const auto ambiguous = census.non_unique_score_vectors();
                r.require(ambiguous.size() == 2 && ambiguous[0].scores == std::vector<int>{1, 1, 2, 3, 3} &&
                              ambiguous[1].scores == std::vector<int>{1, 2, 2, 2, 3},
                          "five-node ambiguous score vectors differ");
                const auto* group = census.find(ScoreVector({1, 2, 2, 2, 3}));
                r.require(group != nullptr && group->representatives.size() == 3,
                          "{1,2,2,2,3} does not have three classes");
            }
        }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("bijection", "codec-round-trip");
        const int max_len = full ? 12 : 8;
        for (int len = 1; len <= max_len; ++len) {
            const auto strings = detail::il_strings(len);
            for (const auto& text : strings) {
                const ILString il{std::string(text)};
                r.require(concatenate_blocks(decompose_blocks(il)) == text,
                          "block codec fails on \"" + text + "\"");
            }
            r.require(Bignum(strings.size()) == ut(len),
                      "string count differs from the sequence at length " + std::to_string(len));
        }
        results.push_back(r.take());
    }

    if (full) {
        detail::Recorder r("bijection", "unique-decodability");
        const std::vector<std::string> blocks = {"0", "001", "0011", "00101"};
        for (int len = 0; len <= 12; ++len)
            for (const auto& s : detail::binary_strings(len)) {
                std::vector<long long> ways(s.size() + 1, 0);
                ways[0] = 1;
                for (std::size_t i = 1; i <= s.size(); ++i)
                    for (const auto& b : blocks)
                        if (i >= b.size() && s.compare(i - b.size(), b.size(), b) == 0)
                            ways[i] += ways[i - b.size()];
                r.require(ways[s.size()] <= 1, "\"" + s + "\" factors two ways");
            }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("bijection", "tournament-round-trip");
        for (int len = 1; len <= 8; ++len)
            for (const auto& text : detail::il_strings(len)) {
                const ILString il{std::string(text)};
                r.require(tournament_to_string(string_to_tournament(il)) == il,
                          "string round-trip fails on \"" + text + "\"");
            }
        if (full) {
            for (int n = 1; n <= 6; ++n)
                for (const auto& group : unique_census(n).groups)
                    if (group.representatives.size() == 1) {
                        const Tournament& t = group.representatives.front();
                        r.require(is_isomorphic(string_to_tournament(tournament_to_string(t)), t),
                                  "tournament round-trip fails for score vector " + group.sv.text());
                    }
        }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("bijection", "score-consistency");
        const int max_len = full ? 10 : 8;
        for (int len = 1; len <= max_len; ++len)
            for (const auto& text : detail::il_strings(len)) {
                const ILString il{std::string(text)};
                r.require(score_vector_from_string(il) == score_vector(string_to_tournament(il)),
                          "score table disagrees on \"" + text + "\"");
            }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("bijection", "duality-commutes");
        for (int len = 1; len <= 8; ++len)
            for (const auto& text : detail::il_strings(len)) {
                const ILString il{std::string(text)};
                const ILString mirrored = string_dual(il);
                r.require(string_dual(mirrored) == il, "dual is not an involution on \"" + text + "\"");
                r.require(is_isomorphic(string_to_tournament(mirrored), dual(string_to_tournament(il))),
                          "dual tournament mismatch on \"" + text + "\"");
            }
        results.push_back(r.take());
    }

    {
        detail::Recorder r("oeis_client", "snapshot-match");
        if (options.snapshot_path.empty()) {
            r.require(false, "no snapshot path provided");
        } else {
            try {
                const BFile remote = fetch_bfile("A000570", {}, true, options.snapshot_path);
                SequenceTable local;
                local.name = "ut";
                local.offset = 1;
                for (std::size_t n = 1; n <= remote.entries.size(); ++n)
                    local.terms.push_back(ut(static_cast<int>(n)));
                const CompareReport report = compare(local, remote);
                for (const auto& row : report.rows)
                    r.require(row.match, "mismatch at index " + std::to_string(row.index));
            } catch (const std::exception& e) {
                r.require(false, e.what());
            }
        }
        results.push_back(r.take());
    }

    return results;
}

}  // namespace tracktour
