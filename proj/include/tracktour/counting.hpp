#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "tracktour/dfa.hpp"
#include "tracktour/rule.hpp"

namespace tracktour {

using Bignum = boost::multiprecision::cpp_int;

struct RangeTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A named integer sequence with an explicit index of its first term.
struct SequenceTable {
    std::string name;
    long long offset = 0;
    std::vector<Bignum> terms;

    bool operator==(const SequenceTable&) const = default;

    std::string to_csv() const {
        std::ostringstream os;
        os << "k,value\n";
        for (std::size_t i = 0; i < terms.size(); ++i)
            os << offset + static_cast<long long>(i) << ',' << terms[i].str() << '\n';
        return os.str();
    }

    static SequenceTable from_csv(const std::string& text, std::string name = {}) {
        SequenceTable t;
        t.name = std::move(name);
        std::istringstream is(text);
        std::string line;
        bool first_row = true;
        while (std::getline(is, line)) {
            if (line.empty() || line == "k,value") continue;
            auto comma = line.find(',');
            if (comma == std::string::npos)
                throw std::invalid_argument("csv row missing comma: " + line);
            long long k = std::stoll(line.substr(0, comma));
            if (first_row) {
                t.offset = k;
                first_row = false;
            }
            t.terms.emplace_back(line.substr(comma + 1));
        }
        return t;
    }

    // Terms are decimal strings in JSON; they outgrow every fixed-width type.
    nlohmann::json to_json() const {
        nlohmann::json j;
        j["name"] = name;
        j["offset"] = offset;
        j["terms"] = nlohmann::json::array();
        for (const auto& v : terms) j["terms"].push_back(v.str());
        return j;
    }

    static SequenceTable from_json(const nlohmann::json& j) {
        SequenceTable t;
        t.name = j.at("name").get<std::string>();
        t.offset = j.at("offset").get<long long>();
        for (const auto& v : j.at("terms")) t.terms.emplace_back(v.get<std::string>());
        return t;
    }

    /// OEIS b-file text: one "n a(n)" pair per line.
    std::string to_bfile() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < terms.size(); ++i)
            os << offset + static_cast<long long>(i) << ' ' << terms[i].str() << '\n';
        return os.str();
    }
};

struct EnumerationCounts {
    Bignum tracking;
    Bignum non_tracking;
};

/// Classifies all 2^k observation strings with the compiled automaton.
/// Capped at k <= 24; past that the transfer matrix is the right tool.
inline EnumerationCounts count_by_enumeration(int k, const TrackingRule& rule = {}) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (k > 24) throw RangeTooLargeError("enumeration is capped at k <= 24");
    const Dfa d = minimize_dfa(build_dfa(rule));
    std::uint64_t tracked = 0;
    const std::uint64_t total = 1ull << k;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::uint32_t state = d.start;
        for (int pos = k - 1; pos >= 0; --pos)
            state = d.transition[state][(bits >> pos) & 1u];
        if (state == d.tracked) ++tracked;
    }
    return {Bignum(tracked), Bignum(total - tracked)};
}

/// The non-tracking strings of length k in lexicographic order.
inline std::vector<std::string> non_tracking_strings(int k, const TrackingRule& rule = {}) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    if (k > 24) throw RangeTooLargeError("enumeration is capped at k <= 24");
    const Dfa d = minimize_dfa(build_dfa(rule));
    std::vector<std::string> out;
    const std::uint64_t total = 1ull << k;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::string s(static_cast<std::size_t>(k), '0');
        std::uint32_t state = d.start;
        for (int pos = 0; pos < k; ++pos) {
            int b = static_cast<int>((bits >> (k - 1 - pos)) & 1u);
            if (b) s[static_cast<std::size_t>(pos)] = '1';
            state = d.transition[state][b];
        }
        if (state != d.tracked) out.push_back(std::move(s));
    }
    return out;
}

/// Number of length-k strings the automaton does not absorb, by iterating
/// the state-occupancy vector. Exact at any k.
inline Bignum count_by_transfer_matrix(int k, const Dfa& d) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    std::vector<Bignum> occupancy(d.state_count(), 0);
    occupancy[d.start] = 1;
    for (int step = 0; step < k; ++step) {
        std::vector<Bignum> next(d.state_count(), 0);
        for (std::uint32_t s = 0; s < d.state_count(); ++s) {
            if (occupancy[s] == 0) continue;
            next[d.transition[s][0]] += occupancy[s];
            next[d.transition[s][1]] += occupancy[s];
        }
        occupancy = std::move(next);
    }
    Bignum alive = 0;
    for (std::uint32_t s = 0; s < d.state_count(); ++s)
        if (s != d.tracked) alive += occupancy[s];
    return alive;
}

inline Bignum count_by_transfer_matrix(int k, const TrackingRule& rule = {}) {
    return count_by_transfer_matrix(k, minimize_dfa(build_dfa(rule)));
}

/// Non-tracking count for the 3-out-of-5-loss-2 rule via the linear
/// recurrence a(k) = a(k-1) + a(k-3) + a(k-4) + a(k-5).
inline Bignum recurrence_ntr(int k) {
    if (k < 0) throw std::invalid_argument("k must be non-negative");
    static const Bignum seeds[6] = {1, 2, 4, 7, 11, 18};
    if (k <= 5) return seeds[k];
    std::vector<Bignum> a(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i <= 5; ++i) a[static_cast<std::size_t>(i)] = seeds[i];
    for (int i = 6; i <= k; ++i)
        a[i] = a[i - 1] + a[i - 3] + a[i - 4] + a[i - 5];
    return a[static_cast<std::size_t>(k)];
}

/// Number of tournaments on n nodes determined by their score vector.
/// Shifted copy of the non-tracking sequence: UT(n) = NTr(n-2) for n >= 2.
inline Bignum ut(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (n == 1) return 1;
    return recurrence_ntr(n - 2);
}

/// Ordered compositions of n into parts {1, 3, 4, 5}.
inline Bignum count_compositions(int n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    std::vector<Bignum> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    static constexpr int parts[4] = {1, 3, 4, 5};
    for (int i = 1; i <= n; ++i)
        for (int p : parts)
            if (i >= p) c[i] += c[i - p];
    return c[static_cast<std::size_t>(n)];
}

}  // namespace tracktour
