#include "rfcode/formats.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace rfcode {

namespace {

using nlohmann::json;

json word_array(Codeword w) { return json(w.neurons()); }

Codeword word_from_array(const json& arr) {
    Codeword w;
    for (const auto& idx : arr) {
        int i = idx.get<int>();
        if (i < 1 || i > kMaxNeurons)
            throw ParseError("neuron index " + std::to_string(i) + " out of range 1..64");
        w = w.with(i);
    }
    return w;
}

json parse_doc(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON document: ") + e.what());
    }
}

}  // namespace

std::string grid_to_json(const GridRealization& grid) {
    json doc;
    doc["dim"] = grid.dim();
    doc["n"] = grid.neuron_count();
    auto extents = json::array();
    for (int d = 0; d < grid.dim(); ++d) extents.push_back(grid.extents()[static_cast<std::size_t>(d)]);
    doc["extents"] = extents;
    auto cells = json::array();
    for (std::int64_t i = 0; i < grid.cell_count(); ++i) cells.push_back(word_array(grid.at(i)));
    doc["cells"] = cells;
    return doc.dump();
}

GridRealization grid_from_json(const std::string& text) {
    json doc = parse_doc(text);
    if (!doc.contains("dim") || !doc.contains("extents") || !doc.contains("cells"))
        throw ParseError("grid document requires dim, extents and cells");
    int dim = doc["dim"].get<int>();
    if (dim < 1 || dim > 3) throw ParseError("grid dim must be 1..3");
    std::array<int, 3> extents{1, 1, 1};
    auto ext = doc["extents"];
    if (static_cast<int>(ext.size()) != dim) throw ParseError("extents length must equal dim");
    for (int d = 0; d < dim; ++d) {
        extents[static_cast<std::size_t>(d)] = ext[static_cast<std::size_t>(d)].get<int>();
        if (extents[static_cast<std::size_t>(d)] < 1) throw ParseError("extents must be positive");
    }
    int n = doc.value("n", 0);
    std::vector<Codeword> labels;
    for (const auto& cell : doc["cells"]) labels.push_back(word_from_array(cell));
    if (n == 0)
        for (Codeword w : labels)
            if (!w.is_empty()) n = std::max(n, 64 - std::countl_zero(w.bits));
    n = std::max(n, 1);
    std::int64_t expected = static_cast<std::int64_t>(extents[0]) * extents[1] * extents[2];
    if (expected != static_cast<std::int64_t>(labels.size()))
        throw ParseError("cell count does not match extents");
    if (expected > kMaxGridCells) throw ParseError("grid exceeds the cell budget");
    GridRealization grid(dim, extents, n);
    for (std::int64_t i = 0; i < expected; ++i) {
        Codeword w = labels[static_cast<std::size_t>(i)];
        if (!w.is_empty() && 64 - std::countl_zero(w.bits) > n)
            throw ParseError("cell label references a neuron beyond n");
        grid.set(i, w);
    }
    return grid;
}

std::string graph_to_json(const AdmissibleGraph& graph) {
    json doc;
    doc["n"] = graph.n;
    auto verts = json::array();
    for (Codeword w : graph.labels) verts.push_back(word_array(w));
    doc["vertices"] = verts;
    auto edges = json::array();
    for (auto [a, b] : graph.edges) edges.push_back(json::array({a, b}));
    doc["edges"] = edges;
    return doc.dump();
}

AdmissibleGraph graph_from_json(const std::string& text) {
    json doc = parse_doc(text);
    if (!doc.contains("vertices") || !doc.contains("edges"))
        throw ParseError("graph document requires vertices and edges");
    AdmissibleGraph g;
    for (const auto& v : doc["vertices"]) g.labels.push_back(word_from_array(v));
    for (const auto& e : doc["edges"]) {
        if (e.size() != 2) throw ParseError("graph edge must be an index pair");
        int a = e[0].get<int>(), b = e[1].get<int>();
        if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count() || a == b)
            throw ParseError("graph edge endpoints out of range");
        g.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    int n = doc.value("n", 0);
    if (n == 0)
        for (Codeword w : g.labels)
            if (!w.is_empty()) n = std::max(n, 64 - std::countl_zero(w.bits));
    g.n = std::max(n, 1);
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

std::string word_to_json(int n, const AtomWord& word) {
    json doc;
    doc["n"] = n;
    auto entries = json::array();
    for (Codeword w : word.entries) entries.push_back(word_array(w));
    doc["word"] = entries;
    return doc.dump();
}

AtomWord word_from_json(const std::string& text) {
    json doc = parse_doc(text);
    if (!doc.contains("word")) throw ParseError("word document requires a word field");
    AtomWord w;
    for (const auto& entry : doc["word"]) w.entries.push_back(word_from_array(entry));
    return w;
}

std::string embedding_to_json(const Embedding& emb) {
    json doc;
    doc["rotation"] = emb.rotation;
    doc["faces"] = emb.face_count;
    return doc.dump();
}

std::string witness_to_json(const KuratowskiWitness& w) {
    json doc;
    doc["kind"] = (w.kind == KuratowskiWitness::Kind::K5) ? "K5" : "K3,3";
    auto edges = json::array();
    for (auto [a, b] : w.edges) edges.push_back(json::array({a, b}));
    doc["edges"] = edges;
    return doc.dump();
}

CertKind detect_certificate(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception&) {
        return CertKind::Unknown;
    }
    if (doc.contains("cells")) return CertKind::Grid;
    if (doc.contains("vertices") && doc.contains("edges")) return CertKind::Graph;
    if (doc.contains("word")) return CertKind::Word;
    return CertKind::Unknown;
}

namespace {

std::string css_color(Codeword w) {
    if (w.is_empty()) return "#ffffff";
    std::uint64_t x = (w.bits + 1) * 0x9e3779b97f4a7c15ull;
    int r = 100 + static_cast<int>(x & 0x7f);
    int g = 100 + static_cast<int>((x >> 8) & 0x7f);
    int b = 100 + static_cast<int>((x >> 16) & 0x7f);
    char buf[8];
    std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
    return buf;
}

}  // namespace

std::string svg_from_grid(const GridRealization& grid) {
    if (grid.dim() > 2) throw InternalError("svg_from_grid: dimension must be 1 or 2");
    const int cell = 14;
    int w = grid.extents()[0], h = grid.extents()[1];
    Code code = extract_code(grid);
    int legend_height = 20 * static_cast<int>(code.words().size()) + 10;
    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * cell + 160
        << "\" height=\"" << std::max(h * cell, legend_height) + 10 << "\">\n";
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            Codeword c = grid.at(x, y, 0);
            svg << "<rect x=\"" << x * cell << "\" y=\"" << (h - 1 - y) * cell << "\" width=\""
                << cell << "\" height=\"" << cell << "\" fill=\"" << css_color(c)
                << "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        }
    int ly = 10;
    for (Codeword c : code.words()) {
        svg << "<rect x=\"" << w * cell + 16 << "\" y=\"" << ly << "\" width=\"14\" height=\"14\" fill=\""
            << css_color(c) << "\" stroke=\"#444444\"/>\n";
        svg << "<text x=\"" << w * cell + 36 << "\" y=\"" << ly + 12
            << "\" font-family=\"monospace\" font-size=\"12\">" << brace_form(c) << "</text>\n";
        ly += 20;
    }
    svg << "</svg>\n";
    return svg.str();
}

std::string scene_from_grid(const GridRealization& grid) {
    if (grid.dim() != 3) throw InternalError("scene_from_grid: dimension must be 3");
    json doc;
    doc["type"] = "cube_scene";
    doc["n"] = grid.neuron_count();
    doc["extents"] = {grid.extents()[0], grid.extents()[1], grid.extents()[2]};
    auto cubes = json::array();
    for (std::int64_t i = 0; i < grid.cell_count(); ++i) {
        Codeword w = grid.at(i);
        if (w.is_empty()) continue;
        auto [x, y, z] = grid.coords(i);
        json cube;
        cube["pos"] = {x, y, z};
        cube["word"] = word_array(w);
        cubes.push_back(cube);
    }
    doc["cubes"] = cubes;
    return doc.dump();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

}  // namespace rfcode
