#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "tracktour/counting.hpp"
#include "tracktour/tournament.hpp"

using namespace tracktour;

namespace {

// Isomorphism oracle by exhaustion: try every node bijection and compare the
// full beats relation. Independent of the library's pruned search.
bool brute_iso(const Tournament& a, const Tournament& b) {
    if (a.size() != b.size()) return false;
    const int n = a.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool match = true;
        for (int i = 0; i < n && match; ++i)
            for (int j = 0; j < n && match; ++j)
                if (i != j) match = a.beats(i, j) == b.beats(perm[i], perm[j]);
        if (match) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Counts isomorphism classes of tournaments on n nodes by Burnside's lemma:
// a node permutation fixes some tournament exactly when all of its cycles
// have odd length, and then it fixes one orientation per orbit of node pairs.
long long burnside_classes(int n) {
    std::vector<std::pair<int, int>> pairs;
    std::map<std::pair<int, int>, int> index;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            index[{i, j}] = static_cast<int>(pairs.size());
            pairs.emplace_back(i, j);
        }

    long long total = 0, perm_count = 0;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        ++perm_count;
        std::vector<bool> seen(n, false);
        bool all_odd = true;
        for (int s = 0; s < n && all_odd; ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (int x = s; !seen[x]; x = perm[x]) {
                seen[x] = true;
                ++len;
            }
            all_odd = len % 2 == 1;
        }
        if (!all_odd) continue;

        std::vector<bool> seen_pair(pairs.size(), false);
        int orbits = 0;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if (seen_pair[k]) continue;
            ++orbits;
            auto [a, b] = pairs[k];
            while (!seen_pair[static_cast<std::size_t>(index[{std::min(a, b), std::max(a, b)}])]) {
                seen_pair[static_cast<std::size_t>(index[{std::min(a, b), std::max(a, b)}])] = true;
                a = perm[a];
                b = perm[b];
            }
        }
        total += 1ll << orbits;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total / perm_count;
}

// All ordered lists of parts from {1,3,4,5} summing to n.
std::vector<std::vector<int>> all_part_lists(int n) {
    std::vector<std::vector<int>> out;
    if (n == 0) {
        out.push_back({});
        return out;
    }
    for (int part : {1, 3, 4, 5}) {
        if (part > n) continue;
        for (auto tail : all_part_lists(n - part)) {
            tail.insert(tail.begin(), part);
            out.push_back(std::move(tail));
        }
    }
    return out;
}

Tournament transitive(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(j, i);
    return Tournament::from_edges(n, edges);
}

}  // namespace

TEST_CASE("score vectors validate their shape") {
    CHECK(ScoreVector({1, 1, 1}).text() == "{1,1,1}");
    CHECK(ScoreVector({0}).text() == "{0}");
    CHECK(ScoreVector({1, 2, 2, 2, 3}).text() == "{1,2,2,2,3}");

    CHECK_THROWS_AS(ScoreVector({2, 1, 1}), std::invalid_argument);   // not sorted
    CHECK_THROWS_AS(ScoreVector({0, 1, 1}), std::invalid_argument);   // wrong sum
    CHECK_THROWS_AS(ScoreVector({0, 0, 3}), std::invalid_argument);   // score > n-1
    CHECK(ScoreVector::from_unsorted({2, 0, 1}).text() == "{0,1,2}");
}

TEST_CASE("basic tournaments are strong, self-dual, and regular-ish") {
    const std::vector<std::vector<int>> expected_sv = {{0}, {1, 1, 1}, {1, 1, 2, 2}, {2, 2, 2, 2, 2}};
    const std::vector<int> sizes = {1, 3, 4, 5};
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        const Tournament t = basic_tournament(sizes[k]);
        INFO("basic size " << sizes[k]);
        CHECK(score_vector(t).scores == expected_sv[k]);
        CHECK(condensation(t).size() == 1);  // strongly connected
        CHECK(brute_iso(t, dual(t)));
    }
    CHECK_THROWS_AS(basic_tournament(2), InvalidBasicSizeError);
    CHECK_THROWS_AS(basic_tournament(6), InvalidBasicSizeError);
    CHECK_THROWS_AS(basic_tournament(0), InvalidBasicSizeError);
}

TEST_CASE("construction rejects incomplete or conflicting results") {
    CHECK_THROWS_AS(Tournament::from_edges(3, {{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_edges(3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_edges(2, {{0, 0}, {0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Tournament::from_mask(12, 0), SizeTooLargeError);  // 66 pairs > 64 bits

    const Tournament lone = Tournament::from_edges(1, {});
    CHECK(lone.size() == 1);
    CHECK(raw_scores(lone) == std::vector<int>{0});
}

TEST_CASE("hex, json, and dot encodings round-trip") {
    for (int n = 1; n <= 4; ++n) {
        const int total = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
            const Tournament t = Tournament::from_mask(n, mask);
            CHECK(Tournament::from_hex(t.to_hex()) == t);
            CHECK(Tournament::from_json(t.to_json()) == t);
        }
    }
    for (std::uint64_t mask : {0ull, 1ull, 0x155ull, 0x2aaull, 0x3ffull}) {
        const Tournament t = Tournament::from_mask(5, mask);
        CHECK(Tournament::from_hex(t.to_hex()) == t);
        CHECK(Tournament::from_json(t.to_json()) == t);
    }

    const Tournament cycle = basic_tournament(3);
    CHECK(cycle.to_hex() == "3:a");  // pair bits 1,0,1 -> nibble 1010
    CHECK(cycle.to_dot() == "digraph tournament {\n  0 -> 1;\n  2 -> 0;\n  1 -> 2;\n}\n");
    CHECK(Tournament::from_edges(1, {}).to_dot() == "digraph tournament {\n  0;\n}\n");
    CHECK(Tournament::from_edges(1, {}).to_hex() == "1:0");

    CHECK_THROWS_AS(Tournament::from_hex("3c"), std::invalid_argument);     // no colon
    CHECK_THROWS_AS(Tournament::from_hex("3:cc"), std::invalid_argument);   // wrong length
    CHECK_THROWS_AS(Tournament::from_hex("3:g"), std::invalid_argument);    // bad digit
    CHECK_THROWS_AS(Tournament::from_hex("3:d"), std::invalid_argument);    // nonzero padding
    CHECK_THROWS_AS(Tournament::from_hex("0:0"), std::invalid_argument);    // empty tournament
    CHECK_THROWS_AS(Tournament::from_hex("x:0"), std::invalid_argument);    // bad node count

    const auto j = cycle.to_json();
    CHECK(j.at("n") == 3);
    CHECK(j.at("edges").size() == 3);
}

TEST_CASE("composition stacks groups and duality reverses them") {
    const Tournament a = basic_tournament(3);
    const Tournament b = basic_tournament(4);
    const Tournament ab = compose(a, b);

    CHECK(ab.size() == 7);
    // Bottom group keeps its scores; each top node adds a win over every
    // bottom node.
    CHECK(raw_scores(ab) == std::vector<int>{1, 1, 1, 4, 4, 5, 5});
    for (int top = 3; top < 7; ++top)
        for (int bottom = 0; bottom < 3; ++bottom) CHECK(ab.beats(top, bottom));

    CHECK(dual(dual(ab)) == ab);
    CHECK(brute_iso(dual(ab), compose(dual(b), dual(a))));

    const Tournament chain = transitive(4);
    CHECK(raw_scores(chain) == std::vector<int>{0, 1, 2, 3});
    CHECK(dual(chain) == Tournament::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}

TEST_CASE("isomorphism test agrees with exhaustive relabeling") {
    // Exhaustive on 4 nodes: every pair of the 64 labeled tournaments.
    std::vector<Tournament> all4;
    for (std::uint64_t mask = 0; mask < 64; ++mask) all4.push_back(Tournament::from_mask(4, mask));
    for (const auto& x : all4)
        for (const auto& y : all4) CHECK(is_isomorphic(x, y) == brute_iso(x, y));

    CHECK_FALSE(is_isomorphic(basic_tournament(3), basic_tournament(4)));
    CHECK_FALSE(is_isomorphic(transitive(5), basic_tournament(5)));
    CHECK(is_isomorphic(compose(basic_tournament(1), basic_tournament(3)),
                        compose(basic_tournament(1), basic_tournament(3))));
}

TEST_CASE("canonical form is a complete isomorphism invariant") {
    CHECK_THROWS_AS(canonical_form(transitive(9)), SizeTooLargeError);

    // Decoding the canonical form gives back an isomorphic tournament, and
    // relabeling never changes it.
    for (std::uint64_t mask : {0ull, 5ull, 0x12ull, 0x3bull, 0x3ffull, 0x155ull}) {
        const int n = mask > 63 ? 5 : 4;
        const Tournament t = Tournament::from_mask(n, mask);
        const std::uint64_t canon = canonical_form(t);
        CHECK(brute_iso(Tournament::from_mask(n, canon), t));

        std::vector<int> relabel(n);
        std::iota(relabel.begin(), relabel.end(), 0);
        std::rotate(relabel.begin(), relabel.begin() + 1, relabel.end());
        CHECK(canonical_form(t.relabeled(relabel)) == canon);
    }

    // Equal canonical forms exactly when isomorphic: all 1024 tournaments on
    // five nodes, compared within equal score vectors (different vectors can
    // never be isomorphic and never collide, since the form decodes back).
    std::map<std::vector<int>, std::vector<Tournament>> by_sv;
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
        Tournament t = Tournament::from_mask(5, mask);
        by_sv[score_vector(t).scores].push_back(std::move(t));
    }
    for (const auto& [sv, group] : by_sv) {
        for (const auto& x : group) {
            const bool iso = brute_iso(x, group.front());
            CHECK(iso == (canonical_form(x) == canonical_form(group.front())));
        }
    }
}

TEST_CASE("condensation orders strong components losers first") {
    const Tournament chain = transitive(5);
    const auto comps = condensation(chain);
    REQUIRE(comps.size() == 5);
    for (int i = 0; i < 5; ++i) CHECK(comps[i] == std::vector<int>{i});

    const Tournament stacked = compose(compose(basic_tournament(3), basic_tournament(1)), basic_tournament(4));
    const auto parts = condensation(stacked);
    REQUIRE(parts.size() == 3);
    CHECK(parts[0] == std::vector<int>{0, 1, 2});
    CHECK(parts[1] == std::vector<int>{3});
    CHECK(parts[2] == std::vector<int>{4, 5, 6, 7});

    CHECK(condensation(basic_tournament(5)).size() == 1);
}

TEST_CASE("unique tournaments decompose into basic layers and rebuild") {
    CHECK(decompose_unique(transitive(6)).parts == std::vector<int>{1, 1, 1, 1, 1, 1});
    CHECK(decompose_unique(basic_tournament(5)).parts == std::vector<int>{5});
    CHECK(decompose_unique(compose(basic_tournament(4), basic_tournament(3))).parts == std::vector<int>{4, 3});
    CHECK(Decomposition{{1, 3, 4}}.text() == "1+3+4");

    // Round trip across every layer list for sizes up to 8.
    for (int n = 1; n <= 8; ++n) {
        std::set<std::uint64_t> canons;
        for (const auto& parts : all_part_lists(n)) {
            const Tournament t = compose_basics(Decomposition{parts});
            CHECK(decompose_unique(t).parts == parts);
            canons.insert(canonical_form(t));
        }
        // Distinct layer lists give non-isomorphic tournaments, and their
        // count matches the counting module.
        CHECK(canons.size() == all_part_lists(n).size());
        CHECK(static_cast<long long>(canons.size()) == static_cast<long long>(ut(n)));
    }
}

TEST_CASE("non-unique tournaments are rejected with a reason") {
    // Strong on six nodes: a transitive chain with the top-bottom edge
    // reversed has no basic component of its size.
    std::vector<std::pair<int, int>> edges6;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            if (i == 0 && j == 5)
                edges6.emplace_back(0, 5);
            else
                edges6.emplace_back(j, i);
        }
    const Tournament strong6 = Tournament::from_edges(6, edges6);
    CHECK(condensation(strong6).size() == 1);
    CHECK_THROWS_AS(decompose_unique(strong6), NotUniqueError);

    // Strong on five nodes but not the rotational one: flip one edge of it.
    std::vector<std::pair<int, int>> edges5;
    for (int i = 0; i < 5; ++i)
        for (int d : {1, 2}) {
            int j = (i + d) % 5;
            if (i == 0 && j == 1)
                edges5.emplace_back(1, 0);
            else
                edges5.emplace_back(i, j);
        }
    const Tournament lopsided = Tournament::from_edges(5, edges5);
    CHECK(score_vector(lopsided).scores == std::vector<int>{1, 2, 2, 2, 3});
    CHECK(condensation(lopsided).size() == 1);
    CHECK_THROWS_AS(decompose_unique(lopsided), NotUniqueError);
}

TEST_CASE("a score vector pins down its tournament exactly when all layers are basic") {
    // Definition-level oracle: a tournament is determined by its score vector
    // exactly when every labeled tournament with the same vector is
    // isomorphic to it. Exhaustive over all labeled tournaments up to n = 5.
    for (int n = 1; n <= 5; ++n) {
        const int total = n * (n - 1) / 2;
        std::map<std::vector<int>, std::vector<Tournament>> by_sv;
        for (std::uint64_t mask = 0; mask < (1ull << total); ++mask) {
            Tournament t = Tournament::from_mask(n, mask);
            by_sv[score_vector(t).scores].push_back(std::move(t));
        }
        for (const auto& [sv, group] : by_sv) {
            bool single_class = true;
            for (const auto& t : group)
                if (!brute_iso(t, group.front())) {
                    single_class = false;
                    break;
                }
            for (const auto& t : group) {
                bool decomposes = true;
                try {
                    decompose_unique(t);
                } catch (const NotUniqueError&) {
                    decomposes = false;
                }
                INFO("n=" << n << " sv=" << ScoreVector::from_unsorted(std::vector<int>(sv)).text());
                CHECK(decomposes == single_class);
            }
        }
    }
}

TEST_CASE("census counts classes per score vector") {
    CHECK_THROWS_AS(unique_census(0), std::invalid_argument);
    CHECK_THROWS_AS(unique_census(8), SizeTooLargeError);

    const std::vector<int> expected_unique = {1, 1, 2, 4, 7, 11};
    for (int n = 1; n <= 6; ++n) {
        const CensusResult census = unique_census(n);
        CHECK(census.n == n);
        CHECK(census.unique_count() == expected_unique[n - 1]);

        long long classes = 0;
        for (const auto& g : census.groups) {
            classes += static_cast<long long>(g.representatives.size());
            REQUIRE(g.representatives.size() == g.canonical_forms.size());
            // Representatives within a group are pairwise non-isomorphic and
            // all carry the group's score vector.
            for (std::size_t i = 0; i < g.representatives.size(); ++i) {
                CHECK(score_vector(g.representatives[i]) == g.sv);
                CHECK(canonical_form(g.representatives[i]) == g.canonical_forms[i]);
                for (std::size_t j = i + 1; j < g.representatives.size(); ++j)
                    CHECK_FALSE(is_isomorphic(g.representatives[i], g.representatives[j]));
            }
        }
        CHECK(classes == burnside_classes(n));
        CHECK(std::is_sorted(census.groups.begin(), census.groups.end(),
                             [](const auto& a, const auto& b) { return a.sv < b.sv; }));
    }
}

TEST_CASE("census on five nodes shows the two ambiguous score vectors") {
    const CensusResult census = unique_census(5);
    const auto ambiguous = census.non_unique_score_vectors();
    REQUIRE(ambiguous.size() == 2);
    CHECK(ambiguous[0].scores == std::vector<int>{1, 1, 2, 3, 3});
    CHECK(ambiguous[1].scores == std::vector<int>{1, 2, 2, 2, 3});

    const auto* three_way = census.find(ScoreVector({1, 2, 2, 2, 3}));
    REQUIRE(three_way != nullptr);
    CHECK(three_way->representatives.size() == 3);

    const auto* two_way = census.find(ScoreVector({1, 1, 2, 3, 3}));
    REQUIRE(two_way != nullptr);
    CHECK(two_way->representatives.size() == 2);

    const auto* regular = census.find(ScoreVector({2, 2, 2, 2, 2}));
    REQUIRE(regular != nullptr);
    REQUIRE(regular->representatives.size() == 1);
    CHECK(is_isomorphic(regular->representatives.front(), basic_tournament(5)));

    CHECK(census.find(ScoreVector({0, 1, 2, 3, 4})) != nullptr);
}

TEST_CASE("census on seven nodes matches the sequence") {
    const CensusResult census = unique_census(7);
    CHECK(census.unique_count() == 18);
    CHECK(static_cast<long long>(census.unique_count()) == static_cast<long long>(ut(7)));

    long long classes = 0;
    for (const auto& g : census.groups) classes += static_cast<long long>(g.representatives.size());
    CHECK(classes == burnside_classes(7));
}
