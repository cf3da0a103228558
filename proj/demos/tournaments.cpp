// Walks the tournament side of the library: from a binary string to a
// tournament and back, score vectors read off the string, duality, and the
// brute-force census that certifies the counts.

#include <iostream>

#include "tracktour/bijection.hpp"
#include "tracktour/tournament.hpp"

using namespace tracktour;

int main() {
    // One losing observer, then a rock-paper-scissors cycle, then a
    // four-player layer on top: the string spells out the whole hierarchy.
    const ILString il("000010011");
    std::cout << "string: " << il.bits << "\nblocks:";
    for (BasicBlock block : decompose_blocks(il)) std::cout << ' ' << block_text(block);
    std::cout << '\n';

    const Tournament t = string_to_tournament(il);
    std::cout << "tournament: " << t.to_hex() << " on " << t.size() << " nodes\n";
    std::cout << "score vector: " << score_vector(t).text() << " (from the string: "
              << score_vector_from_string(il).text() << ")\n";
    std::cout << "layers: " << decompose_unique(t).text() << '\n';

    const ILString mirrored = string_dual(il);
    std::cout << "dual string: " << mirrored.bits << ", dual layers: "
              << decompose_unique(dual(t)).text() << "\n\n";

    std::cout << "graph of the bottom five nodes:\n" << t.induced({0, 1, 2, 3, 4}).to_dot() << '\n';

    // Five players is the first size where a score vector can be ambiguous.
    const CensusResult census = unique_census(5);
    std::cout << "five-node census: " << census.unique_count() << " unique score vectors\n";
    for (const auto& group : census.groups)
        if (group.representatives.size() > 1)
            std::cout << "  " << group.sv.text() << " is shared by " << group.representatives.size()
                      << " non-isomorphic tournaments\n";
    return 0;
}
