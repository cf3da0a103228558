#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

namespace tracktour {

struct SizeTooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidBasicSizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotUniqueError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Non-decreasing list of outdegrees of a tournament's nodes.
struct ScoreVector {
    std::vector<int> scores;

    ScoreVector() = default;

    explicit ScoreVector(std::vector<int> sorted_scores) : scores(std::move(sorted_scores)) {
        if (!std::is_sorted(scores.begin(), scores.end()))
            throw std::invalid_argument("score vector must be non-decreasing");
        const long long n = static_cast<long long>(scores.size());
        long long sum = 0;
        for (int s : scores) {
            if (s < 0 || s > n - 1)
                throw std::invalid_argument("score out of range for tournament size");
            sum += s;
        }
        if (sum != n * (n - 1) / 2)
            throw std::invalid_argument("scores must sum to n(n-1)/2");
    }

    static ScoreVector from_unsorted(std::vector<int> raw) {
        std::sort(raw.begin(), raw.end());
        return ScoreVector(std::move(raw));
    }

    auto operator<=>(const ScoreVector&) const = default;

    std::string text() const {
        std::ostringstream os;
        os << '{';
        for (std::size_t i = 0; i < scores.size(); ++i) {
            if (i) os << ',';
            os << scores[i];
        }
        os << '}';
        return os.str();
    }

    nlohmann::json to_json() const { return nlohmann::json(scores); }
};

/// Complete oriented graph: every unordered pair of nodes carries exactly one
/// directed edge, winner to loser.
class Tournament {
public:
    static Tournament from_edges(int n, const std::vector<std::pair<int, int>>& winner_loser) {
        Tournament t(n);
        for (auto [w, l] : winner_loser) {
            if (w < 0 || w >= n || l < 0 || l >= n || w == l)
                throw std::invalid_argument("edge endpoints out of range");
            t.set_result(w, l);
        }
        t.require_complete();
        return t;
    }

    /// Upper-triangle bits in row-major pair order (0,1),(0,2),...,(n-2,n-1),
    /// most significant first; a set bit means the lower-numbered node wins.
    static Tournament from_mask(int n, std::uint64_t bits) {
        if (pair_count(n) > 64) throw SizeTooLargeError("mask form supports at most 64 node pairs");
        Tournament t(n);
        const int total = pair_count(n);
        int p = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++p) {
                bool low_wins = (bits >> (total - 1 - p)) & 1u;
                t.set_result(low_wins ? i : j, low_wins ? j : i);
            }
        return t;
    }

    int size() const { return n_; }

    bool beats(int winner, int loser) const {
        return matrix_[static_cast<std::size_t>(winner) * static_cast<std::size_t>(n_) +
                       static_cast<std::size_t>(loser)] != 0;
    }

    bool operator==(const Tournament&) const = default;

    /// Sub-tournament induced by `nodes`, relabeled 0..|nodes|-1 in order.
    Tournament induced(const std::vector<int>& nodes) const {
        Tournament t(static_cast<int>(nodes.size()));
        for (std::size_t i = 0; i < nodes.size(); ++i)
            for (std::size_t j = 0; j < nodes.size(); ++j)
                if (i != j && beats(nodes[i], nodes[j]))
                    t.set_result(static_cast<int>(i), static_cast<int>(j));
        return t;
    }

    /// New tournament whose node map[v] plays as node v does here.
    Tournament relabeled(const std::vector<int>& map) const {
        Tournament t(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (i != j && beats(i, j)) t.set_result(map[i], map[j]);
        return t;
    }

    // --- text encodings ---------------------------------------------------

    /// "n:hex" where the hex digits pack the upper-triangle bits row by row,
    /// four per digit, zero padded at the tail.
    std::string to_hex() const {
        std::ostringstream os;
        os << n_ << ':';
        int nibble = 0, filled = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                nibble = (nibble << 1) | (beats(i, j) ? 1 : 0);
                if (++filled == 4) {
                    os << "0123456789abcdef"[nibble];
                    nibble = filled = 0;
                }
            }
        if (filled) os << "0123456789abcdef"[nibble << (4 - filled)];
        if (pair_count(n_) == 0) os << '0';
        return os.str();
    }

    static Tournament from_hex(std::string_view text) {
        auto colon = text.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("tournament hex form is n:digits");
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(std::string(text.substr(0, colon)), &used);
            if (used != colon) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("bad node count in tournament hex form");
        }
        if (n < 1) throw std::invalid_argument("tournament needs at least one node");
        std::string_view digits = text.substr(colon + 1);
        const int total = pair_count(n);
        const std::size_t expected = std::max<std::size_t>(1, (static_cast<std::size_t>(total) + 3) / 4);
        if (digits.size() != expected)
            throw std::invalid_argument("tournament hex form has the wrong digit count");
        std::vector<bool> bits;
        for (char c : digits) {
            int v = c >= '0' && c <= '9'   ? c - '0'
                    : c >= 'a' && c <= 'f' ? c - 'a' + 10
                    : c >= 'A' && c <= 'F' ? c - 'A' + 10
                                           : -1;
            if (v < 0) throw std::invalid_argument("bad hex digit in tournament form");
            for (int b = 3; b >= 0; --b) bits.push_back((v >> b) & 1);
        }
        for (std::size_t p = static_cast<std::size_t>(total); p < bits.size(); ++p)
            if (bits[p]) throw std::invalid_argument("nonzero padding in tournament hex form");
        Tournament t(n);
        int p = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++p)
                t.set_result(bits[static_cast<std::size_t>(p)] ? i : j, bits[static_cast<std::size_t>(p)] ? j : i);
        return t;
    }

    std::string to_dot() const {
        std::ostringstream os;
        os << "digraph tournament {\n";
        if (n_ == 1) os << "  0;\n";
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                if (beats(i, j))
                    os << "  " << i << " -> " << j << ";\n";
                else
                    os << "  " << j << " -> " << i << ";\n";
            }
        os << "}\n";
        return os.str();
    }

    /// {"n": ..., "edges": [[winner, loser], ...]}
    nlohmann::json to_json() const {
        nlohmann::json edges = nlohmann::json::array();
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) {
                if (beats(i, j))
                    edges.push_back({i, j});
                else
                    edges.push_back({j, i});
            }
        return nlohmann::json{{"n", n_}, {"edges", edges}};
    }

    static Tournament from_json(const nlohmann::json& j) {
        int n = j.at("n").get<int>();
        if (n < 1) throw std::invalid_argument("tournament needs at least one node");
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges"))
            edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return from_edges(n, edges);
    }

private:
    explicit Tournament(int n) : n_(n), matrix_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        if (n < 1) throw std::invalid_argument("tournament needs at least one node");
    }

    void set_result(int winner, int loser) {
        if (beats(loser, winner) || beats(winner, loser))
            throw std::invalid_argument("duplicate result for a node pair");
        matrix_[static_cast<std::size_t>(winner) * static_cast<std::size_t>(n_) +
                static_cast<std::size_t>(loser)] = 1;
    }

    void require_complete() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (!beats(i, j) && !beats(j, i))
                    throw std::invalid_argument("missing result for a node pair");
    }

    static int pair_count(int n) { return n * (n - 1) / 2; }

    friend Tournament compose(const Tournament&, const Tournament&);
    friend Tournament dual(const Tournament&);

    int n_;
    std::vector<std::uint8_t> matrix_;
};

inline std::vector<int> raw_scores(const Tournament& t) {
    std::vector<int> scores(static_cast<std::size_t>(t.size()), 0);
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j)
            if (i != j && t.beats(i, j)) ++scores[static_cast<std::size_t>(i)];
    return scores;
}

inline ScoreVector score_vector(const Tournament& t) {
    return ScoreVector::from_unsorted(raw_scores(t));
}

/// Composition a + b: both groups keep their internal results and every
/// b-node beats every a-node.
inline Tournament compose(const Tournament& a, const Tournament& b) {
    Tournament t(a.size() + b.size());
    const int na = a.size();
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            if (i != j && a.beats(i, j)) t.set_result(i, j);
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < b.size(); ++j)
            if (i != j && b.beats(i, j)) t.set_result(na + i, na + j);
    for (int i = 0; i < b.size(); ++i)
        for (int j = 0; j < na; ++j) t.set_result(na + i, j);
    return t;
}

/// Same nodes, every edge reversed.
inline Tournament dual(const Tournament& t) {
    Tournament d(t.size());
    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j)
            if (i != j && t.beats(j, i)) d.set_result(i, j);
    return d;
}

/// Pinned representatives of the four basic unique tournaments: a single
/// node, the 3-cycle, the unique 4-node strong tournament, and the circulant
/// on five nodes where i beats i+1 and i+2.
inline Tournament basic_tournament(int size) {
    switch (size) {
        case 1:
            return Tournament::from_edges(1, {});
        case 3:
            return Tournament::from_edges(3, {{0, 1}, {1, 2}, {2, 0}});
        case 4:
            return Tournament::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {3, 0}, {3, 1}, {2, 3}});
        case 5: {
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i < 5; ++i) {
                edges.emplace_back(i, (i + 1) % 5);
                edges.emplace_back(i, (i + 2) % 5);
            }
            return Tournament::from_edges(5, edges);
        }
        default:
            throw InvalidBasicSizeError("basic tournaments exist only for sizes 1, 3, 4, 5");
    }
}

/// True iff some node bijection carries the beats relation of `a` onto `b`.
/// Equal score vectors gate a backtracking search over score-compatible maps.
inline bool is_isomorphic(const Tournament& a, const Tournament& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    std::vector<int> sa = raw_scores(a), sb = raw_scores(b);
    {
        std::vector<int> ca = sa, cb = sb;
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return false;
    }

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return sa[x] < sa[y]; });

    std::vector<int> map(static_cast<std::size_t>(n), -1);
    std::vector<bool> used(static_cast<std::size_t>(n), false);

    auto search = [&](auto&& self, int depth) -> bool {
        if (depth == n) return true;
        const int v = order[static_cast<std::size_t>(depth)];
        for (int w = 0; w < n; ++w) {
            if (used[static_cast<std::size_t>(w)] || sb[static_cast<std::size_t>(w)] != sa[static_cast<std::size_t>(v)])
                continue;
            bool ok = true;
            for (int k = 0; k < depth && ok; ++k) {
                const int u = order[static_cast<std::size_t>(k)];
                ok = a.beats(u, v) == b.beats(map[static_cast<std::size_t>(u)], w) &&
                     a.beats(v, u) == b.beats(w, map[static_cast<std::size_t>(u)]);
            }
            if (!ok) continue;
            used[static_cast<std::size_t>(w)] = true;
            map[static_cast<std::size_t>(v)] = w;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(w)] = false;
            map[static_cast<std::size_t>(v)] = -1;
        }
        return false;
    };
    return search(search, 0);
}

namespace detail {

inline std::uint64_t encode_upper_triangle(const Tournament& t) {
    const int n = t.size();
    const int total = n * (n - 1) / 2;
    std::uint64_t bits = 0;
    int p = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++p)
            if (t.beats(i, j)) bits |= 1ull << (total - 1 - p);
    return bits;
}

}  // namespace detail

/// Deterministic complete invariant for n <= 8: the smallest upper-triangle
/// encoding over all relabelings whose score sequence is non-decreasing.
/// Equal forms exactly when the tournaments are isomorphic.
inline std::uint64_t canonical_form(const Tournament& t) {
    if (t.size() > 8) throw SizeTooLargeError("canonical form supports at most 8 nodes");
    const int n = t.size();
    const std::vector<int> scores = raw_scores(t);

    std::vector<int> pick(static_cast<std::size_t>(n));
    std::iota(pick.begin(), pick.end(), 0);

    std::uint64_t best = ~0ull;
    do {
        bool sorted = true;
        for (int i = 1; i < n && sorted; ++i)
            sorted = scores[static_cast<std::size_t>(pick[static_cast<std::size_t>(i - 1)])] <=
                     scores[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])];
        if (!sorted) continue;
        // new node i plays as original node pick[i]
        const int total = n * (n - 1) / 2;
        std::uint64_t bits = 0;
        int p = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++p)
                if (t.beats(pick[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(j)]))
                    bits |= 1ull << (total - 1 - p);
        best = std::min(best, bits);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return best;
}

/// Strongly connected components in bottom-up order: the first component
/// loses every cross match, the last wins every one. In a tournament this
/// order is total.
inline std::vector<std::vector<int>> condensation(const Tournament& t) {
    const int n = t.size();
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int i = 0; i < n; ++i) {
        reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = true;
        for (int j = 0; j < n; ++j)
            if (i != j && t.beats(i, j)) reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)])
                for (int j = 0; j < n; ++j)
                    if (reach[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)])
                        reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = true;

    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> groups;
    for (int i = 0; i < n; ++i) {
        if (comp[static_cast<std::size_t>(i)] >= 0) continue;
        const int id = static_cast<int>(groups.size());
        groups.emplace_back();
        for (int j = i; j < n; ++j)
            if (comp[static_cast<std::size_t>(j)] < 0 && reach[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] &&
                reach[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
                comp[static_cast<std::size_t>(j)] = id;
                groups[static_cast<std::size_t>(id)].push_back(j);
            }
    }
    std::sort(groups.begin(), groups.end(), [&](const std::vector<int>& x, const std::vector<int>& y) {
        return t.beats(y.front(), x.front());
    });
    return groups;
}

/// Ordered basic-component sizes of a unique tournament, all-losing group
/// first.
struct Decomposition {
    std::vector<int> parts;

    bool operator==(const Decomposition&) const = default;

    std::string text() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) os << '+';
            os << parts[i];
        }
        return os.str();
    }
};

/// Splits `t` along its condensation and matches every component against the
/// basic tournaments. Failure of any component to match means the score
/// vector of `t` does not pin it down.
inline Decomposition decompose_unique(const Tournament& t) {
    Decomposition d;
    for (const auto& group : condensation(t)) {
        const int size = static_cast<int>(group.size());
        if (size != 1 && size != 3 && size != 4 && size != 5)
            throw NotUniqueError("strong component of size " + std::to_string(size) +
                                 " matches no basic tournament");
        if (!is_isomorphic(t.induced(group), basic_tournament(size)))
            throw NotUniqueError("strong component of size " + std::to_string(size) +
                                 " is not the basic tournament");
        d.parts.push_back(size);
    }
    return d;
}

/// Rebuilds the composition described by `d`, first part at the bottom.
inline Tournament compose_basics(const Decomposition& d) {
    if (d.parts.empty()) throw std::invalid_argument("decomposition must have at least one part");
    Tournament t = basic_tournament(d.parts.front());
    for (std::size_t i = 1; i < d.parts.size(); ++i)
        t = compose(t, basic_tournament(d.parts[i]));
    return t;
}

/// Exhaustive census of all labeled tournaments on n nodes, grouped by score
/// vector with one representative per isomorphism class. Brute-force ground
/// truth for the unique-tournament count.
struct CensusResult {
    struct Group {
        ScoreVector sv;
        std::vector<Tournament> representatives;  // one per isomorphism class
        std::vector<std::uint64_t> canonical_forms;
    };

    int n = 0;
    std::vector<Group> groups;  // ordered by score vector

    int unique_count() const {
        int count = 0;
        for (const auto& g : groups)
            if (g.representatives.size() == 1) ++count;
        return count;
    }

    std::vector<ScoreVector> non_unique_score_vectors() const {
        std::vector<ScoreVector> out;
        for (const auto& g : groups)
            if (g.representatives.size() > 1) out.push_back(g.sv);
        return out;
    }

    const Group* find(const ScoreVector& sv) const {
        for (const auto& g : groups)
            if (g.sv == sv) return &g;
        return nullptr;
    }
};

inline CensusResult unique_census(int n) {
    if (n < 1) throw std::invalid_argument("census needs at least one node");
    if (n > 7) throw SizeTooLargeError("census is capped at 7 nodes");

    const int total_pairs = n * (n - 1) / 2;
    const std::uint32_t total_masks = 1u << total_pairs;

    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> pair_index(static_cast<std::size_t>(n),
                                             std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            pair_index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(pairs.size());
            pairs.emplace_back(i, j);
        }

    std::vector<std::vector<int>> perms;
    {
        std::vector<int> p(static_cast<std::size_t>(n));
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }

    std::vector<bool> visited(total_masks, false);
    std::map<ScoreVector, CensusResult::Group> by_sv;

    for (std::uint32_t mask = 0; mask < total_masks; ++mask) {
        if (visited[mask]) continue;

        std::vector<int> scores(static_cast<std::size_t>(n), 0);
        for (int p = 0; p < total_pairs; ++p) {
            auto [i, j] = pairs[static_cast<std::size_t>(p)];
            bool low_wins = (mask >> (total_pairs - 1 - p)) & 1u;
            ++scores[static_cast<std::size_t>(low_wins ? i : j)];
        }

        // Orbit of this tournament under all relabelings; the canonical form
        // is the smallest score-sorted member.
        std::uint64_t canon = ~0ull;
        for (const auto& p : perms) {
            std::uint32_t remapped = 0;
            for (int q = 0; q < total_pairs; ++q) {
                auto [i, j] = pairs[static_cast<std::size_t>(q)];
                bool low_wins = (mask >> (total_pairs - 1 - q)) & 1u;
                int w = p[static_cast<std::size_t>(low_wins ? i : j)];
                int l = p[static_cast<std::size_t>(low_wins ? j : i)];
                if (w < l)
                    remapped |= 1u << (total_pairs - 1 -
                                       pair_index[static_cast<std::size_t>(w)][static_cast<std::size_t>(l)]);
            }
            visited[remapped] = true;

            // score of new node x is scores[inverse(x)]
            std::vector<int> new_scores(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) new_scores[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])] =
                scores[static_cast<std::size_t>(v)];
            if (std::is_sorted(new_scores.begin(), new_scores.end()))
                canon = std::min(canon, static_cast<std::uint64_t>(remapped));
        }

        ScoreVector sv = ScoreVector::from_unsorted(scores);
        auto& group = by_sv[sv];
        group.sv = sv;
        group.representatives.push_back(Tournament::from_mask(n, mask));
        group.canonical_forms.push_back(canon);
    }

    CensusResult result;
    result.n = n;
    for (auto& [sv, group] : by_sv) result.groups.push_back(std::move(group));
    return result;
}

}  // namespace tracktour
