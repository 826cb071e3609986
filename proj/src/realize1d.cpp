#include "rfcode/realize1d.hpp"

#include <algorithm>
#include <unordered_map>

namespace rfcode {

namespace {

// DFS state: last entry, the set of neurons whose interval has closed, and
// the set of codewords already used. A state that failed with r remaining
// positions also fails with fewer, so the memo stores the best r seen.
struct MemoKey {
    std::uint64_t last;
    std::uint64_t closed;
    std::uint64_t used;
    bool operator==(const MemoKey&) const = default;
};

struct MemoHash {
    std::size_t operator()(const MemoKey& k) const {
        std::uint64_t h = k.last * 0x9e3779b97f4a7c15ull;
        h ^= k.closed + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= k.used + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

struct WordSearch {
    const std::vector<Codeword>& words;          // canonical order, words[0] == {}
    int max_len;
    std::uint64_t full_used;                     // bit per non-empty word
    std::vector<Codeword> seq;
    std::int64_t nodes = 0;
    bool memo_enabled;
    std::unordered_map<MemoKey, int, MemoHash> failed;

    WordSearch(const std::vector<Codeword>& w, int n)
        : words(w), max_len(2 * n + 1), memo_enabled(w.size() <= 64) {
        full_used = 0;
        for (std::size_t k = 1; k < words.size(); ++k) full_used |= std::uint64_t{1} << k;
    }

    bool dfs(std::size_t last_idx, std::uint64_t closed, std::uint64_t used) {
        ++nodes;
        if (used == full_used) return true;
        int remaining = max_len - static_cast<int>(seq.size());
        if (remaining <= 0) return false;
        // every still-unused codeword must avoid the closed neurons
        int missing = 0;
        for (std::size_t k = 1; k < words.size(); ++k) {
            if (used & (std::uint64_t{1} << k)) continue;
            if (words[k].bits & closed) return false;
            ++missing;
        }
        if (missing > remaining) return false;

        MemoKey key{words[last_idx].bits, closed, used};
        if (memo_enabled) {
            auto it = failed.find(key);
            if (it != failed.end() && it->second >= remaining) return false;
        }

        Codeword last = words[last_idx];
        for (std::size_t k = 0; k < words.size(); ++k) {
            Codeword w = words[k];
            if (w == last) continue;             // equal neighbors merge into one region
            if (!w.comparable(last)) continue;
            if (w.bits & closed) continue;       // reopening a closed neuron
            std::uint64_t next_closed = closed | (last.bits & ~w.bits);
            std::uint64_t next_used = used | (w.is_empty() ? 0 : (std::uint64_t{1} << k));
            seq.push_back(w);
            if (dfs(k, next_closed, next_used)) return true;
            seq.pop_back();
        }
        if (memo_enabled) {
            auto [it, inserted] = failed.emplace(key, remaining);
            if (!inserted) it->second = std::max(it->second, remaining);
        }
        return false;
    }
};

}  // namespace

WordSearchResult search_word(const Code& code) {
    auto conn = is_connected_code(code);
    if (!conn.connected) throw NotConnectedError(*conn.witness);

    const auto& words = code.words();
    if (words.size() == 1)                       // the empty-only code: a single outside cell
        return AtomWord{{Codeword::empty()}};

    WordSearch search(words, code.neuron_count());
    // leading separators are pointless, so the first entry is non-empty
    for (std::size_t k = 1; k < words.size(); ++k) {
        search.seq.assign(1, words[k]);
        if (search.dfs(k, 0, std::uint64_t{1} << k)) return AtomWord{search.seq};
    }
    return NotRealizable1D{search.nodes};
}

bool verify_word(const Code& code, const AtomWord& word) {
    const auto& entries = word.entries;
    if (entries.empty()) return false;
    if (static_cast<int>(entries.size()) > 2 * code.neuron_count() + 1) return false;
    for (Codeword w : entries)
        if (!code.contains(w)) return false;     // foreign codeword
    for (Codeword w : code.words()) {
        if (w.is_empty()) continue;
        if (std::find(entries.begin(), entries.end(), w) == entries.end()) return false;
    }
    for (std::size_t p = 0; p + 1 < entries.size(); ++p)
        if (!entries[p].comparable(entries[p + 1])) return false;
    for (int i = 1; i <= code.neuron_count(); ++i) {
        int first = -1, last = -1;
        for (std::size_t p = 0; p < entries.size(); ++p)
            if (entries[p].contains(i)) {
                if (first == -1) first = static_cast<int>(p);
                last = static_cast<int>(p);
            }
        for (int p = first; first != -1 && p <= last; ++p)
            if (!entries[static_cast<std::size_t>(p)].contains(i)) return false;
    }
    return true;
}

GridRealization word_to_grid(const Code& code, const AtomWord& word) {
    if (!verify_word(code, word)) throw InternalError("word_to_grid: unverified atom word");
    GridRealization grid(1, {static_cast<int>(word.entries.size()), 1, 1}, code.neuron_count());
    for (std::size_t p = 0; p < word.entries.size(); ++p)
        grid.set(static_cast<int>(p), 0, 0, word.entries[p]);
    return grid;
}

std::string format_word(const AtomWord& word) {
    std::string s = "(";
    for (std::size_t p = 0; p < word.entries.size(); ++p) {
        if (p) s += ", ";
        s += compact_form(word.entries[p]);
    }
    return s + ")";
}

}  // namespace rfcode
