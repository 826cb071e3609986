#include "rfcode/code.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace rfcode {

std::vector<int> Codeword::neurons() const {
    std::vector<int> out;
    std::uint64_t b = bits;
    while (b) {
        out.push_back(std::countr_zero(b) + 1);
        b &= b - 1;
    }
    return out;
}

std::string brace_form(Codeword w) {
    std::string s = "{";
    bool first = true;
    for (int i : w.neurons()) {
        if (!first) s += ',';
        s += std::to_string(i);
        first = false;
    }
    return s + "}";
}

std::string compact_form(Codeword w) {
    if (w.is_empty()) return "e";
    std::string s;
    for (int i : w.neurons()) {
        if (i > 9) return brace_form(w);
        s += static_cast<char>('0' + i);
    }
    return s;
}

Code::Code(int n, std::vector<Codeword> words) : n_(n) {
    if (n < 1 || n > kMaxNeurons)
        throw ParseError("neuron count must be in 1..64, got " + std::to_string(n));
    std::uint64_t allowed = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    for (Codeword w : words)
        if ((w.bits & ~allowed) != 0)
            throw ParseError("codeword " + brace_form(w) + " references a neuron beyond n=" +
                             std::to_string(n));
    words.push_back(Codeword::empty());
    std::sort(words.begin(), words.end(), word_less);
    words.erase(std::unique(words.begin(), words.end()), words.end());
    words_ = std::move(words);
}

bool Code::contains(Codeword w) const {
    return std::binary_search(words_.begin(), words_.end(), w, word_less);
}

namespace {

int parse_index(const std::string& tok) {
    if (tok.empty()) throw ParseError("empty neuron index");
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ParseError("malformed neuron index '" + tok + "'");
    long v = std::stol(tok);
    if (v < 1 || v > kMaxNeurons)
        throw ParseError("neuron index " + tok + " out of range 1..64");
    return static_cast<int>(v);
}

std::vector<Codeword> words_from_json(const nlohmann::json& doc, std::optional<int>& n_out) {
    if (!doc.is_object() || !doc.contains("codewords"))
        throw ParseError("JSON code document requires a 'codewords' field");
    if (doc.contains("n")) n_out = doc.at("n").get<int>();
    std::vector<Codeword> words;
    for (const auto& arr : doc.at("codewords")) {
        Codeword w;
        for (const auto& idx : arr) {
            int i = idx.get<int>();
            if (i < 1 || i > kMaxNeurons)
                throw ParseError("neuron index " + std::to_string(i) + " out of range 1..64");
            w = w.with(i);
        }
        words.push_back(w);
    }
    return words;
}

std::vector<Codeword> words_from_braces(const std::string& text) {
    std::vector<Codeword> words;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ','))
            ++pos;
        if (pos >= text.size()) break;
        if (text[pos] != '{') throw ParseError("expected '{' in brace syntax");
        std::size_t close = text.find('}', pos);
        if (close == std::string::npos) throw ParseError("unterminated '{' in brace syntax");
        std::string inner = text.substr(pos + 1, close - pos - 1);
        Codeword w;
        std::stringstream ss(inner);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::erase_if(tok, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
            if (tok.empty()) continue;
            w = w.with(parse_index(tok));
        }
        words.push_back(w);
        pos = close + 1;
    }
    return words;
}

std::vector<Codeword> words_from_shorthand(const std::string& text) {
    std::vector<Codeword> words;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::erase_if(tok, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        if (tok.empty()) throw ParseError("empty token in code text");
        if (tok == "e") {
            words.push_back(Codeword::empty());
            continue;
        }
        Codeword w;
        for (char c : tok) {
            if (c < '1' || c > '9')
                throw ParseError("malformed token '" + tok +
                                 "' (shorthand uses digits 1..9; use brace syntax for n > 9)");
            w = w.with(c - '0');
        }
        words.push_back(w);
    }
    return words;
}

}  // namespace

ParsedCode parse_code(const std::string& text, std::optional<int> n) {
    std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw ParseError("empty code text");

    std::vector<Codeword> words;
    std::optional<int> n_doc;
    if (text[first] == '{' && text.find("codewords") != std::string::npos) {
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            throw ParseError(std::string("bad JSON code document: ") + e.what());
        }
        words = words_from_json(doc, n_doc);
    } else if (text[first] == '{') {
        words = words_from_braces(text);
    } else {
        words = words_from_shorthand(text);
    }

    if (n && n_doc && *n != *n_doc)
        throw ParseError("explicit neuron count disagrees with the document's n");
    if (!n) n = n_doc;

    int max_idx = 0;
    for (Codeword w : words)
        if (!w.is_empty()) max_idx = std::max(max_idx, 64 - std::countl_zero(w.bits));
    int nn = n.value_or(std::max(1, max_idx));
    if (nn < max_idx)
        throw ParseError("n=" + std::to_string(nn) + " but a codeword references neuron " +
                         std::to_string(max_idx));

    ParsedCode out{Code(nn, words), false, 0};
    bool had_empty = std::any_of(words.begin(), words.end(),
                                 [](Codeword w) { return w.is_empty(); });
    out.inserted_empty = !had_empty;
    std::sort(words.begin(), words.end(), word_less);
    out.duplicates_removed = static_cast<int>(
        words.end() - std::unique(words.begin(), words.end()));
    return out;
}

std::string serialize_code(const Code& code) {
    nlohmann::json doc;
    doc["n"] = code.neuron_count();
    auto arr = nlohmann::json::array();
    for (Codeword w : code.words()) arr.push_back(w.neurons());
    doc["codewords"] = arr;
    return doc.dump();
}

std::uint64_t code_hash(const Code& code) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (char c : serialize_code(code)) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

Code permute_neurons(const Code& code, const std::vector<int>& perm) {
    int n = code.neuron_count();
    if (static_cast<int>(perm.size()) != n)
        throw InternalError("permutation size mismatch");
    std::vector<Codeword> words;
    for (Codeword w : code.words()) {
        Codeword out;
        for (int i : w.neurons()) out = out.with(perm[i - 1]);
        words.push_back(out);
    }
    return Code(n, std::move(words));
}

NeuronGraph neuron_graph(const Code& code, int neuron) {
    NeuronGraph g;
    for (Codeword w : code.words())
        if (w.contains(neuron)) g.vertices.push_back(w);
    for (std::size_t a = 0; a < g.vertices.size(); ++a)
        for (std::size_t b = a + 1; b < g.vertices.size(); ++b)
            if (g.vertices[a].strict_subset_of(g.vertices[b]) ||
                g.vertices[b].strict_subset_of(g.vertices[a]))
                g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    return g;
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

ConnectivityResult is_connected_code(const Code& code) {
    for (int i = 1; i <= code.neuron_count(); ++i) {
        NeuronGraph g = neuron_graph(code, i);
        if (g.vertices.size() <= 1) continue;
        UnionFind uf(static_cast<int>(g.vertices.size()));
        for (auto [a, b] : g.edges) uf.unite(a, b);
        int root = uf.find(0);
        for (std::size_t v = 1; v < g.vertices.size(); ++v) {
            if (uf.find(static_cast<int>(v)) != root) {
                // vertices are in canonical order, so (i, vertex 0, first
                // stranger) is the lexicographically smallest witness
                return {false, ConnectivityWitness{i, g.vertices[0], g.vertices[v]}};
            }
        }
    }
    return {true, std::nullopt};
}

NotConnectedError::NotConnectedError(ConnectivityWitness w)
    : std::runtime_error("code is not connected: neuron " + std::to_string(w.neuron) +
                         ", codewords " + brace_form(w.a) + " and " + brace_form(w.b)),
      witness(w) {}

}  // namespace rfcode
