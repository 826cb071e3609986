#pragma once

#include <variant>
#include <vector>

#include "rfcode/code.hpp"
#include "rfcode/grid.hpp"

namespace rfcode {

// A 1D realization as the left-to-right sequence of atom labels. The empty
// word may appear as a separator; each neuron's positions must be
// consecutive and each non-empty codeword must occur.
struct AtomWord {
    std::vector<Codeword> entries;
};

struct NotRealizable1D {
    std::int64_t nodes = 0;                      // states explored before exhaustion
};

using WordSearchResult = std::variant<AtomWord, NotRealizable1D>;

// Exact decision by depth-first search over words of length <= 2n+1.
// n receptive-field intervals have at most 2n endpoints, hence at most
// 2n+1 maximal constant regions on the line, so the length bound is
// complete and a negative answer is definitive. Deterministic: codewords
// are tried in (cardinality, lexicographic) order.
WordSearchResult search_word(const Code& code);

// Independent certificate check: entry membership, coverage, comparability
// of neighbors, neuron contiguity, and the length bound. Shares no pruning
// logic with search_word.
bool verify_word(const Code& code, const AtomWord& word);

// One cell per entry. Throws InternalError when the word does not verify.
GridRealization word_to_grid(const Code& code, const AtomWord& word);

std::string format_word(const AtomWord& word);   // "(1, 12, 2)"

}  // namespace rfcode
