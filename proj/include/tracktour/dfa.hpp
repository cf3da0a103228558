#pragma once

#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <stdexcept>
#include <vector>

#include "tracktour/rule.hpp"

namespace tracktour {

struct WindowTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Deterministic automaton over {'0','1'} with a single absorbing accepting
/// state (`tracked`). Transitions are total; every state is reachable from
/// `start`.
struct Dfa {
    std::vector<std::array<std::uint32_t, 2>> transition;
    std::uint32_t start = 0;
    std::uint32_t tracked = 0;

    std::uint32_t state_count() const { return static_cast<std::uint32_t>(transition.size()); }

    std::uint32_t step(std::uint32_t state, char bit) const {
        return transition[state][bit == '1' ? 1 : 0];
    }
};

/// Feeds `s` bit by bit from the start state; true iff the run ends tracked.
inline bool run_dfa(const Dfa& d, std::string_view s) {
    require_binary(s);
    std::uint32_t state = d.start;
    for (char c : s) state = d.step(state, c);
    return state == d.tracked;
}

/// Compiles `rule` into a Dfa that agrees with is_tracking_oracle on every
/// string.
///
/// A non-tracked state is the last window-1 observed bits, zero padded on
/// the left while fewer have been seen. Padding is safe: a qualifying window
/// must start with a detection, so fabricated leading zeros can neither
/// create nor destroy one. Any window that first qualifies when a bit is
/// appended lies inside the last `window` bits, so this suffix is all the
/// history a state needs. At most 2^(window-1) + 1 states before cleanup;
/// unreachable suffixes are dropped by a BFS pass.
inline Dfa build_dfa(const TrackingRule& rule) {
    if (rule.window > 16)
        throw WindowTooLargeError("rule window exceeds the supported maximum of 16");

    const int w = rule.window - 1;
    const std::uint32_t suffix_mask = (1u << w) - 1;
    const std::uint32_t tracked_raw = 1u << w;

    auto advance = [&](std::uint32_t suffix, int bit) -> std::uint32_t {
        std::string hist(static_cast<std::size_t>(rule.window), '0');
        std::uint32_t full = (suffix << 1) | static_cast<std::uint32_t>(bit);
        for (int i = rule.window - 1; i >= 0; --i, full >>= 1)
            hist[static_cast<std::size_t>(i)] = (full & 1u) ? '1' : '0';
        if (bit == 1 && is_tracking_oracle(hist, rule)) return tracked_raw;
        return ((suffix << 1) | static_cast<std::uint32_t>(bit)) & suffix_mask;
    };

    // BFS from the empty history, numbering states in discovery order.
    std::map<std::uint32_t, std::uint32_t> id;
    std::deque<std::uint32_t> queue;
    Dfa d;
    auto intern = [&](std::uint32_t raw) {
        auto [it, inserted] = id.emplace(raw, static_cast<std::uint32_t>(id.size()));
        if (inserted) {
            d.transition.push_back({0, 0});
            queue.push_back(raw);
        }
        return it->second;
    };
    d.start = intern(0);
    while (!queue.empty()) {
        std::uint32_t raw = queue.front();
        queue.pop_front();
        std::uint32_t self = id.at(raw);
        if (raw == tracked_raw) {
            d.transition[self] = {self, self};
            d.tracked = self;
            continue;
        }
        for (int bit = 0; bit < 2; ++bit)
            d.transition[self][bit] = intern(advance(raw, bit));
    }
    return d;
}

/// Partition-refinement minimization with accepting set {tracked}. The
/// result recognizes the same language with the fewest states.
inline Dfa minimize_dfa(const Dfa& d) {
    const std::uint32_t n = d.state_count();
    std::vector<std::uint32_t> cls(n);
    for (std::uint32_t s = 0; s < n; ++s) cls[s] = (s == d.tracked) ? 1 : 0;

    for (;;) {
        std::map<std::array<std::uint32_t, 3>, std::uint32_t> sig_id;
        std::vector<std::uint32_t> next(n);
        for (std::uint32_t s = 0; s < n; ++s) {
            std::array<std::uint32_t, 3> sig = {cls[s], cls[d.transition[s][0]], cls[d.transition[s][1]]};
            auto [it, _] = sig_id.emplace(sig, static_cast<std::uint32_t>(sig_id.size()));
            next[s] = it->second;
        }
        bool stable = true;
        for (std::uint32_t s = 0; s < n && stable; ++s) stable = next[s] == cls[s];
        cls = std::move(next);
        if (stable) break;
    }

    std::uint32_t class_count = 0;
    for (std::uint32_t c : cls) class_count = std::max(class_count, c + 1);

    Dfa out;
    out.transition.assign(class_count, {0, 0});
    for (std::uint32_t s = 0; s < n; ++s) {
        out.transition[cls[s]][0] = cls[d.transition[s][0]];
        out.transition[cls[s]][1] = cls[d.transition[s][1]];
    }
    out.start = cls[d.start];
    out.tracked = cls[d.tracked];
    return out;
}

}  // namespace tracktour
