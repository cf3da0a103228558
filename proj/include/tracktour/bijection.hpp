#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tracktour/rule.hpp"
#include "tracktour/tournament.hpp"

namespace tracktour {

struct InputTracksError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooShortError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotDecomposableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The four strings that build every initial-loss non-tracking string, one
/// per basic tournament size.
enum class BasicBlock { b1, b3, b4, b5 };

inline std::string_view block_text(BasicBlock b) {
    switch (b) {
        case BasicBlock::b1: return "0";
        case BasicBlock::b3: return "001";
        case BasicBlock::b4: return "0011";
        case BasicBlock::b5: return "00101";
    }
    throw std::invalid_argument("unknown block");
}

inline int block_size(BasicBlock b) {
    return static_cast<int>(block_text(b).size());
}

inline BasicBlock block_for_size(int size) {
    switch (size) {
        case 1: return BasicBlock::b1;
        case 3: return BasicBlock::b3;
        case 4: return BasicBlock::b4;
        case 5: return BasicBlock::b5;
        default: throw InvalidBasicSizeError("blocks exist only for sizes 1, 3, 4, 5");
    }
}

/// Score a block's members get relative to their global position.
inline const std::vector<int>& block_adjustments(BasicBlock b) {
    static const std::vector<int> a1 = {0};
    static const std::vector<int> a3 = {1, 0, -1};
    static const std::vector<int> a4 = {1, 0, 0, -1};
    static const std::vector<int> a5 = {2, 1, 0, -1, -2};
    switch (b) {
        case BasicBlock::b1: return a1;
        case BasicBlock::b3: return a3;
        case BasicBlock::b4: return a4;
        case BasicBlock::b5: return a5;
    }
    throw std::invalid_argument("unknown block");
}

inline nlohmann::json blocks_to_json(const std::vector<BasicBlock>& blocks) {
    nlohmann::json out = nlohmann::json::array();
    for (BasicBlock b : blocks) out.push_back(std::string(block_text(b)));
    return out;
}

/// Non-tracking string that opens with a lost track: either "0" alone or
/// "00" followed by anything that keeps the whole string non-tracking.
struct ILString {
    std::string bits;

    explicit ILString(std::string s) : bits(std::move(s)) {
        require_binary(bits);
        if (bits.empty()) throw std::invalid_argument("initial-loss string cannot be empty");
        if (bits.size() == 1 && bits != "0")
            throw std::invalid_argument("the only initial-loss string of length 1 is 0");
        if (bits.size() >= 2 && (bits[0] != '0' || bits[1] != '0'))
            throw std::invalid_argument("initial-loss strings start with two zeros");
        if (is_tracking_oracle(bits))
            throw InputTracksError("string declares a track, so it is not initial-loss non-tracking");
    }

    bool operator==(const ILString&) const = default;
};

/// Prefixes a non-tracking string with a lost track.
inline ILString il_from_nontracking(std::string_view s) {
    require_binary(s);
    if (is_tracking_oracle(s)) throw InputTracksError("string declares a track");
    return ILString("00" + std::string(s));
}

/// Inverse of il_from_nontracking: drops the leading "00".
inline std::string strip_initial_loss(const ILString& il) {
    if (il.bits.size() < 2)
        throw TooShortError("length-1 initial-loss string has no two-zero prefix to strip");
    return il.bits.substr(2);
}

/// Factors a raw bit string into basic blocks. Reads right to left: the
/// reversed block set {0, 100, 1100, 10100} is prefix-free, so each step is
/// forced and the factorization is unique when it exists.
inline std::vector<BasicBlock> decode_blocks(std::string_view bits) {
    require_binary(bits);
    std::vector<BasicBlock> reversed;
    std::size_t pos = bits.size();
    auto bit = [&](std::size_t back) { return bits[pos - back]; };
    while (pos > 0) {
        if (bit(1) == '0') {
            reversed.push_back(BasicBlock::b1);
            pos -= 1;
        } else if (pos >= 2 && bit(2) == '1') {
            if (pos < 4 || bit(3) != '0' || bit(4) != '0')
                throw NotDecomposableError("ending 11 is only reachable through 0011");
            reversed.push_back(BasicBlock::b4);
            pos -= 4;
        } else if (pos >= 3 && bit(3) == '1') {
            if (pos < 5 || bit(4) != '0' || bit(5) != '0')
                throw NotDecomposableError("ending 101 is only reachable through 00101");
            reversed.push_back(BasicBlock::b5);
            pos -= 5;
        } else {
            if (pos < 3)
                throw NotDecomposableError("ending 1 is only reachable through 001, 0011, or 00101");
            reversed.push_back(BasicBlock::b3);
            pos -= 3;
        }
    }
    return {reversed.rbegin(), reversed.rend()};
}

inline std::vector<BasicBlock> decompose_blocks(const ILString& il) {
    return decode_blocks(il.bits);
}

inline std::string concatenate_blocks(const std::vector<BasicBlock>& blocks) {
    std::string out;
    for (BasicBlock b : blocks) out += block_text(b);
    return out;
}

/// Builds the tournament whose layers are the string's blocks, leftmost
/// block at the bottom.
inline Tournament string_to_tournament(const ILString& il) {
    const auto blocks = decompose_blocks(il);
    Tournament t = basic_tournament(block_size(blocks.front()));
    for (std::size_t i = 1; i < blocks.size(); ++i)
        t = compose(t, basic_tournament(block_size(blocks[i])));
    return t;
}

/// Reads the layer sizes of a unique tournament back off as blocks.
inline ILString tournament_to_string(const Tournament& t) {
    std::vector<BasicBlock> blocks;
    for (int part : decompose_unique(t).parts) blocks.push_back(block_for_size(part));
    return ILString(concatenate_blocks(blocks));
}

/// Score of person i read straight off the string: i plus the adjustment for
/// i's place within its block.
inline ScoreVector score_vector_from_string(const ILString& il) {
    std::vector<int> scores;
    int offset = 0;
    for (BasicBlock b : decompose_blocks(il)) {
        const auto& adjust = block_adjustments(b);
        for (std::size_t p = 0; p < adjust.size(); ++p)
            scores.push_back(offset + static_cast<int>(p) + adjust[p]);
        offset += block_size(b);
    }
    return ScoreVector::from_unsorted(std::move(scores));
}

/// String-level duality: reverse the block order. An involution that tracks
/// tournament duality exactly.
inline ILString string_dual(const ILString& il) {
    auto blocks = decompose_blocks(il);
    std::reverse(blocks.begin(), blocks.end());
    return ILString(concatenate_blocks(blocks));
}

}  // namespace tracktour
