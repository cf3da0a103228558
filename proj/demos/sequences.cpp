// Walks the counting side of the library: the same sequence computed by
// exhaustive enumeration, by the automaton's transfer matrix, and by the
// linear recurrence, then the shifted tournament sequence.

#include <iostream>

#include "tracktour/counting.hpp"
#include "tracktour/dfa.hpp"
#include "tracktour/rule.hpp"

using namespace tracktour;

int main() {
    const TrackingRule rule;  // 3 out of 5 with loss 2
    const Dfa dfa = minimize_dfa(build_dfa(rule));
    std::cout << "rule " << rule.text() << ", minimized automaton has " << dfa.state_count()
              << " states\n\n";

    std::cout << "k  enumeration  matrix  recurrence\n";
    for (int k = 0; k <= 14; ++k) {
        const Bignum by_enum = count_by_enumeration(k, rule).non_tracking;
        const Bignum by_matrix = count_by_transfer_matrix(k, dfa);
        const Bignum by_recurrence = recurrence_ntr(k);
        std::cout << k << "  " << by_enum.str() << "  " << by_matrix.str() << "  "
                  << by_recurrence.str() << (by_enum == by_matrix && by_matrix == by_recurrence
                                                 ? ""
                                                 : "  <-- DISAGREEMENT")
                  << '\n';
    }

    std::cout << "\nnon-tracking strings of length 5:\n";
    for (const auto& s : non_tracking_strings(5)) std::cout << "  " << s << '\n';

    // The tournament count is the same sequence read two indices later.
    std::cout << "\nunique tournaments by node count:\n";
    SequenceTable table;
    table.name = "unique-tournaments";
    table.offset = 1;
    for (int n = 1; n <= 17; ++n) table.terms.push_back(ut(n));
    std::cout << table.to_csv();

    std::cout << "\nfar out, the terms keep growing: ut(60) = " << ut(60).str() << '\n';
    return 0;
}
