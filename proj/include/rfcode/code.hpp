#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rfcode {

constexpr int kMaxNeurons = 64;

// Raised when input text cannot be turned into a valid Code.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised on broken internal invariants (CLI maps this to exit 70).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// A codeword: subset of neurons 1..n, stored as a bit mask (neuron i -> bit i-1).
struct Codeword {
    std::uint64_t bits = 0;

    static constexpr Codeword empty() { return {}; }
    static Codeword single(int neuron) { return {std::uint64_t{1} << (neuron - 1)}; }

    bool contains(int neuron) const { return (bits >> (neuron - 1)) & 1u; }
    int size() const { return std::popcount(bits); }
    bool is_empty() const { return bits == 0; }

    bool subset_of(Codeword o) const { return (bits & ~o.bits) == 0; }
    bool strict_subset_of(Codeword o) const { return bits != o.bits && subset_of(o); }
    bool comparable(Codeword o) const { return subset_of(o) || o.subset_of(*this); }

    Codeword with(int neuron) const { return {bits | (std::uint64_t{1} << (neuron - 1))}; }
    std::vector<int> neurons() const;

    friend bool operator==(Codeword a, Codeword b) { return a.bits == b.bits; }
};

// Canonical order: cardinality first, then lexicographic on the ascending
// neuron-index list. For equal cardinality the smaller word is the one
// owning the lowest differing neuron.
inline bool word_less(Codeword a, Codeword b) {
    int ca = a.size(), cb = b.size();
    if (ca != cb) return ca < cb;
    if (a.bits == b.bits) return false;
    std::uint64_t d = a.bits ^ b.bits;
    return ((d & (~d + 1)) & a.bits) != 0;
}

std::string brace_form(Codeword w);              // "{1,2}" / "{}"
std::string compact_form(Codeword w);            // "12" / "e" (indices <= 9 only)

// A code: finite set of codewords on n neurons, always containing the empty word.
class Code {
public:
    Code() : n_(1), words_{Codeword::empty()} {}
    Code(int n, std::vector<Codeword> words);    // sorts, dedups, inserts the empty word

    int neuron_count() const { return n_; }
    const std::vector<Codeword>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool contains(Codeword w) const;
    int nonempty_count() const { return static_cast<int>(words_.size()) - 1; }

    friend bool operator==(const Code& a, const Code& b) {
        return a.n_ == b.n_ && a.words_ == b.words_;
    }

private:
    int n_;
    std::vector<Codeword> words_;                // canonical order, words_[0] == {}
};

struct ParsedCode {
    Code code;
    bool inserted_empty = false;                 // input lacked the empty word
    int duplicates_removed = 0;
};

// Accepts shorthand ("e,1,12,123", digits 1..9 only), brace syntax
// ("{},{1},{1,12}") and the canonical JSON document.
ParsedCode parse_code(const std::string& text, std::optional<int> n = std::nullopt);

// Canonical serialization: JSON with words sorted by (cardinality, lex).
std::string serialize_code(const Code& code);
std::uint64_t code_hash(const Code& code);       // FNV-1a of the serialization

Code permute_neurons(const Code& code, const std::vector<int>& perm);  // perm[i-1] = image of i

// Vertices are the codewords containing neuron i; edges join words related
// by strict containment.
struct NeuronGraph {
    std::vector<Codeword> vertices;
    std::vector<std::pair<int, int>> edges;      // indices into vertices, a < b
};

NeuronGraph neuron_graph(const Code& code, int neuron);

struct ConnectivityWitness {
    int neuron = 0;
    Codeword a, b;                               // in different components of neuron_graph
};

struct ConnectivityResult {
    bool connected = false;
    std::optional<ConnectivityWitness> witness;  // lexicographically smallest failure
};

// The chain condition: every neuron's graph of containment-comparable
// codewords is connected.
ConnectivityResult is_connected_code(const Code& code);

// Thrown by constructions whose precondition is a connected code.
struct NotConnectedError : std::runtime_error {
    ConnectivityWitness witness;
    explicit NotConnectedError(ConnectivityWitness w);
};

}  // namespace rfcode
