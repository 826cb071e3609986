#pragma once

#include <string>

#include "rfcode/code.hpp"
#include "rfcode/graph.hpp"
#include "rfcode/grid.hpp"
#include "rfcode/planarity.hpp"
#include "rfcode/realize1d.hpp"

namespace rfcode {

// JSON documents. Grid cells are row-major with x fastest; all writers are
// byte-deterministic for fixed inputs.
std::string grid_to_json(const GridRealization& grid);
GridRealization grid_from_json(const std::string& text);

std::string graph_to_json(const AdmissibleGraph& graph);
AdmissibleGraph graph_from_json(const std::string& text);

std::string word_to_json(int n, const AtomWord& word);
AtomWord word_from_json(const std::string& text);

std::string embedding_to_json(const Embedding& emb);
std::string witness_to_json(const KuratowskiWitness& w);

enum class CertKind { Grid, Graph, Word, Unknown };
CertKind detect_certificate(const std::string& text);

// One colored rectangle per cell plus a legend; dimension 1 or 2 grids.
std::string svg_from_grid(const GridRealization& grid);

// Scene document for 3D grids: one unit cube per non-empty cell.
std::string scene_from_grid(const GridRealization& grid);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace rfcode
