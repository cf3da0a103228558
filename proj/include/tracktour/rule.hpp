#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tracktour {

/// A track-initiation rule "m out of n with loss l": a track is declared as
/// soon as at least `min_detections` detections fall inside a window of at
/// most `window` consecutive observations, provided no run of `loss` or more
/// misses occurs between the detections of that window.
struct TrackingRule {
    int min_detections = 3;  // m
    int window = 5;          // n
    int loss = 2;            // l

    TrackingRule() = default;

    TrackingRule(int m, int n, int l) : min_detections(m), window(n), loss(l) {
        if (m < 1 || n < 1 || l < 1 || m > n || l > n)
            throw std::invalid_argument("tracking rule requires 1 <= m <= n and 1 <= l <= n");
    }

    bool operator==(const TrackingRule&) const = default;

    /// Text form "m,n,l", e.g. "3,5,2".
    std::string text() const {
        std::ostringstream os;
        os << min_detections << ',' << window << ',' << loss;
        return os.str();
    }

    static TrackingRule parse(std::string_view text) {
        int vals[3];
        std::size_t pos = 0;
        for (int i = 0; i < 3; ++i) {
            std::size_t end = i < 2 ? text.find(',', pos) : text.size();
            if (end == std::string_view::npos)
                throw std::invalid_argument("rule must have the form m,n,l");
            std::string part(text.substr(pos, end - pos));
            try {
                std::size_t used = 0;
                vals[i] = std::stoi(part, &used);
                if (used != part.size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw std::invalid_argument("rule must have the form m,n,l with integer fields");
            }
            pos = end + 1;
        }
        return TrackingRule(vals[0], vals[1], vals[2]);
    }
};

/// Observation strings are ASCII text over '0' (miss) and '1' (detection).
/// The empty string is a valid record of zero observations.
inline bool is_binary_string(std::string_view s) {
    return std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

inline void require_binary(std::string_view s) {
    if (!is_binary_string(s))
        throw std::invalid_argument("observation string may contain only '0' and '1'");
}

/// Reference decision procedure: does `s` establish a track under `rule`?
///
/// Scans every window that starts and ends with a detection. A window
/// qualifies when it spans at most rule.window observations, contains at
/// least rule.min_detections ones and no run of rule.loss zeros. Boundary
/// zeros never help (they only widen the window), so the start/end-on-'1'
/// restriction loses nothing. This is the plain-sight oracle the automaton
/// is checked against.
inline bool is_tracking_oracle(std::string_view s, const TrackingRule& rule = {}) {
    require_binary(s);
    const int len = static_cast<int>(s.size());
    for (int i = 0; i < len; ++i) {
        if (s[i] != '1') continue;
        int ones = 0;
        int zero_run = 0;
        const int last = std::min(len - 1, i + rule.window - 1);
        for (int j = i; j <= last; ++j) {
            if (s[j] == '1') {
                ++ones;
                zero_run = 0;
                if (ones >= rule.min_detections) return true;
            } else {
                if (++zero_run >= rule.loss) break;
            }
        }
    }
    return false;
}

}  // namespace tracktour
