// Command-line front end: connectivity checks, d* verdicts, realizations in
// dimensions 1-3, canonical graphs, planarity certificates, small-n census
// tables, renderers and certificate re-verification.

#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rfcode/code.hpp"
#include "rfcode/dimension.hpp"
#include "rfcode/enumerate.hpp"
#include "rfcode/formats.hpp"
#include "rfcode/graph.hpp"
#include "rfcode/grid.hpp"
#include "rfcode/planarity.hpp"
#include "rfcode/realize1d.hpp"
#include "rfcode/realize2d.hpp"
#include "rfcode/realize3d.hpp"

namespace {

using nlohmann::json;
using namespace rfcode;

constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

struct Options {
    bool json_output = false;
};

Code load_code(const std::string& arg) {
    std::string text = arg;
    if (std::filesystem::exists(arg) && std::filesystem::is_regular_file(arg))
        text = read_text_file(arg);
    ParsedCode parsed = parse_code(text);
    if (parsed.inserted_empty)
        std::cerr << "note: empty codeword added to the code\n";
    if (parsed.duplicates_removed > 0)
        std::cerr << "note: " << parsed.duplicates_removed << " duplicate codeword(s) removed\n";
    return parsed.code;
}

json witness_json(const ConnectivityWitness& w) {
    return json{{"neuron", w.neuron}, {"a", w.a.neurons()}, {"b", w.b.neurons()}};
}

std::string witness_text(const ConnectivityWitness& w) {
    return "neuron " + std::to_string(w.neuron) + ", codewords " + brace_form(w.a) + " and " +
           brace_form(w.b);
}

int cmd_check(const Options& opt, const std::string& code_arg) {
    Code code = load_code(code_arg);
    ConnectivityResult res = is_connected_code(code);
    if (opt.json_output) {
        json doc{{"connected", res.connected}};
        if (!res.connected) doc["witness"] = witness_json(*res.witness);
        std::cout << doc.dump() << "\n";
    } else if (res.connected) {
        std::cout << "CONNECTED\n";
    } else {
        std::cout << "NOT CONNECTED: " << witness_text(*res.witness) << "\n";
    }
    return res.connected ? 0 : 1;
}

int cmd_dim(const Options& opt, const std::string& code_arg, int dup_bound,
            std::int64_t budget, const std::string& out_dir) {
    Code code = load_code(code_arg);
    DStarResult res = d_star(code, {dup_bound, budget});

    json doc;
    std::string text;
    json certs = json::object();
    if (auto* verdict = std::get_if<DimensionVerdict>(&res)) {
        doc["connected"] = true;
        doc["d_star"] = verdict->value;
        doc["exactness"] =
            verdict->exactness == Exactness::Exact ? "exact" : "conditional_on_bound";
        if (verdict->exactness == Exactness::ConditionalOnBound)
            doc["dup_bound"] = verdict->dup_bound;
        text = "d* = " + std::to_string(verdict->value);
        text += verdict->exactness == Exactness::Exact
                    ? " (exact)"
                    : " (conditional on duplication bound " + std::to_string(verdict->dup_bound) + ")";
        if (verdict->word) {
            text += "\nword: " + format_word(*verdict->word);
            doc["word"] = json::parse(word_to_json(code.neuron_count(), *verdict->word));
        }
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            if (verdict->word) {
                std::string p = out_dir + "/word.json";
                write_text_file(p, word_to_json(code.neuron_count(), *verdict->word));
                write_text_file(out_dir + "/grid1.json",
                                grid_to_json(word_to_grid(code, *verdict->word)));
                certs["word"] = p;
                certs["grid"] = out_dir + "/grid1.json";
            } else if (verdict->planar) {
                write_text_file(out_dir + "/graph.json", graph_to_json(verdict->planar->graph));
                write_text_file(out_dir + "/embedding.json",
                                embedding_to_json(verdict->planar->embedding));
                write_text_file(out_dir + "/grid2.json", grid_to_json(verdict->planar->grid));
                write_text_file(out_dir + "/realization.svg",
                                svg_from_grid(verdict->planar->grid));
                certs["graph"] = out_dir + "/graph.json";
                certs["embedding"] = out_dir + "/embedding.json";
                certs["grid"] = out_dir + "/grid2.json";
                certs["svg"] = out_dir + "/realization.svg";
            } else if (verdict->real3) {
                write_text_file(out_dir + "/grid3.json", grid_to_json(verdict->real3->grid));
                write_text_file(out_dir + "/scene.json", scene_from_grid(verdict->real3->grid));
                certs["grid"] = out_dir + "/grid3.json";
                certs["scene"] = out_dir + "/scene.json";
            }
        }
    } else if (auto* nc = std::get_if<NotConnectedVerdict>(&res)) {
        doc["connected"] = false;
        doc["witness"] = witness_json(nc->witness);
        text = "NOT CONNECTED: " + witness_text(nc->witness);
    } else {
        const auto& undecided = std::get<Undecided23>(res);
        doc["connected"] = true;
        doc["d_star_range"] = {2, 3};
        doc["nodes"] = undecided.nodes;
        text = "d* in {2,3}: planar search budget exhausted after " +
               std::to_string(undecided.nodes) + " nodes";
        if (!out_dir.empty()) {
            std::filesystem::create_directories(out_dir);
            write_text_file(out_dir + "/grid3.json", grid_to_json(undecided.real3.grid));
            certs["grid"] = out_dir + "/grid3.json";
        }
    }
    if (!certs.empty()) doc["certificates"] = certs;
    if (opt.json_output) {
        std::cout << doc.dump() << "\n";
    } else {
        std::cout << text << "\n";
        for (auto& [kind, path] : certs.items())
            std::cout << kind << " certificate: " << path.get<std::string>() << "\n";
    }
    return 0;
}

int cmd_realize(const Options& opt, const std::string& code_arg, int dim,
                const std::string& out_dir, int dup_bound, std::int64_t budget) {
    Code code = load_code(code_arg);
    ConnectivityResult conn = is_connected_code(code);
    if (!conn.connected) {
        std::string msg = "NOT CONNECTED: " + witness_text(*conn.witness);
        if (opt.json_output)
            std::cout << json{{"realizable", false}, {"reason", "not_connected"},
                              {"witness", witness_json(*conn.witness)}}.dump()
                      << "\n";
        else
            std::cout << msg << "\n";
        return 2;
    }
    std::filesystem::create_directories(out_dir);

    if (dim == 1) {
        WordSearchResult res = search_word(code);
        if (auto* word = std::get_if<AtomWord>(&res)) {
            GridRealization grid = word_to_grid(code, *word);
            std::string grid_path = out_dir + "/grid1.json";
            write_text_file(grid_path, grid_to_json(grid));
            write_text_file(out_dir + "/word.json", word_to_json(code.neuron_count(), *word));
            if (opt.json_output)
                std::cout << json{{"realizable", true},
                                  {"word", json::parse(word_to_json(code.neuron_count(), *word))["word"]},
                                  {"grid", grid_path}}.dump()
                          << "\n";
            else
                std::cout << "word: " << format_word(*word) << "\ngrid: " << grid_path << "\n";
            return 0;
        }
        if (opt.json_output)
            std::cout << json{{"realizable", false}, {"reason", "no_atom_word"}}.dump() << "\n";
        else
            std::cout << "not realizable in dimension 1 (no atom word of length <= "
                      << 2 * code.neuron_count() + 1 << ")\n";
        return 2;
    }

    if (dim == 2) {
        PlanarSearchResult res = search_planar_admissible(code, {dup_bound, budget});
        if (auto* found = std::get_if<PlanarFound>(&res)) {
            auto coords = planar_coordinates(found->graph.skeleton(), found->embedding);
            GridRealization grid = fatten_embedding(code, found->graph, coords);
            std::string grid_path = out_dir + "/grid2.json";
            write_text_file(grid_path, grid_to_json(grid));
            write_text_file(out_dir + "/graph.json", graph_to_json(found->graph));
            write_text_file(out_dir + "/realization.svg", svg_from_grid(grid));
            if (opt.json_output)
                std::cout << json{{"realizable", true},
                                  {"grid", grid_path},
                                  {"graph", out_dir + "/graph.json"},
                                  {"svg", out_dir + "/realization.svg"}}.dump()
                          << "\n";
            else
                std::cout << "planar admissible graph with " << found->graph.vertex_count()
                          << " vertices, " << found->graph.edges.size() << " edges\ngrid: " << grid_path
                          << "\nsvg: " << out_dir + "/realization.svg" << "\n";
            return 0;
        }
        bool exhausted = std::holds_alternative<ExhaustedNotFound>(res);
        if (opt.json_output)
            std::cout << json{{"realizable", false},
                              {"reason", exhausted ? "exhausted_not_found" : "budget_exceeded"},
                              {"dup_bound", dup_bound}}.dump()
                      << "\n";
        else if (exhausted)
            std::cout << "not realizable in dimension 2 at duplication bound " << dup_bound << "\n";
        else
            std::cout << "undecided in dimension 2: search budget exceeded\n";
        return 2;
    }

    Realization3D real3 = build_3d(code);
    std::string grid_path = out_dir + "/grid3.json";
    write_text_file(grid_path, grid_to_json(real3.grid));
    write_text_file(out_dir + "/scene.json", scene_from_grid(real3.grid));
    if (opt.json_output)
        std::cout << json{{"realizable", true},
                          {"grid", grid_path},
                          {"scene", out_dir + "/scene.json"},
                          {"balls", real3.ball_cells.size()},
                          {"tubes", real3.tube_pairs.size()}}.dump()
                  << "\n";
    else
        std::cout << real3.ball_cells.size() << " balls, " << real3.tube_pairs.size()
                  << " tubes\ngrid: " << grid_path << "\nscene: " << out_dir + "/scene.json" << "\n";
    return 0;
}

int cmd_graph(const Options& opt, const std::string& code_arg, const std::string& out_file) {
    Code code = load_code(code_arg);
    ConnectivityResult conn = is_connected_code(code);
    if (!conn.connected) {
        if (opt.json_output)
            std::cout << json{{"connected", false}, {"witness", witness_json(*conn.witness)}}.dump()
                      << "\n";
        else
            std::cout << "NOT CONNECTED: " << witness_text(*conn.witness) << "\n";
        return 1;
    }
    std::string doc = graph_to_json(canonical_graph(code));
    if (out_file.empty())
        std::cout << doc << "\n";
    else
        write_text_file(out_file, doc);
    return 0;
}

int cmd_planar(const Options& opt, const std::string& graph_file) {
    AdmissibleGraph graph = graph_from_json(read_text_file(graph_file));
    SimpleGraph g = graph.skeleton();
    PlanarityResult res = is_planar(g);
    if (const Embedding* emb = std::get_if<Embedding>(&res)) {
        if (!verify_embedding(g, *emb)) throw InternalError("planar: embedding failed verification");
        if (opt.json_output)
            std::cout << json{{"planar", true},
                              {"embedding", json::parse(embedding_to_json(*emb))}}.dump()
                      << "\n";
        else
            std::cout << "PLANAR: V=" << g.vertex_count << " E=" << g.edges.size()
                      << " F=" << emb->face_count << "\n"
                      << embedding_to_json(*emb) << "\n";
        return 0;
    }
    const auto& w = std::get<KuratowskiWitness>(res);
    if (!verify_kuratowski(g, w)) throw InternalError("planar: witness failed verification");
    if (opt.json_output)
        std::cout << json{{"planar", false}, {"witness", json::parse(witness_to_json(w))}}.dump()
                  << "\n";
    else
        std::cout << "NOT PLANAR: Kuratowski witness ("
                  << (w.kind == KuratowskiWitness::Kind::K5 ? "K5" : "K3,3") << ")\n"
                  << witness_to_json(w) << "\n";
    return 0;
}

int cmd_enumerate(const Options& opt, int n, int dup_bound, std::int64_t budget,
                  const std::string& out_file, const std::string& cert_dir) {
    Census census = classify_all(n, {dup_bound, budget}, cert_dir);
    if (opt.json_output) {
        json doc{{"n", census.n}, {"codes", census.rows.size()}};
        json summary = json::object();
        for (const auto& [key, count] : census.summary) summary[key] = count;
        doc["summary"] = summary;
        std::cout << doc.dump() << "\n";
        if (!out_file.empty()) write_text_file(out_file, census_to_table(census));
        return 0;
    }
    std::string table = census_to_table(census);
    if (out_file.empty())
        std::cout << table;
    else
        write_text_file(out_file, table);
    return 0;
}

int cmd_render(const std::string& grid_file, const std::string& out_file) {
    GridRealization grid = grid_from_json(read_text_file(grid_file));
    if (grid.dim() <= 2)
        write_text_file(out_file, svg_from_grid(grid));
    else
        write_text_file(out_file, scene_from_grid(grid));
    std::cout << "wrote " << out_file << "\n";
    return 0;
}

int cmd_verify(const Options& opt, const std::string& code_arg, const std::string& cert_file) {
    Code code = load_code(code_arg);
    std::string text = read_text_file(cert_file);
    bool ok = false;
    std::string detail;
    switch (detect_certificate(text)) {
        case CertKind::Grid: {
            GridRealization grid = grid_from_json(text);
            auto adm = check_admissible(grid);
            if (!adm.ok) {
                detail = "grid has " + std::to_string(adm.violations.size()) +
                         " inadmissible adjacencies";
            } else if (!all_fields_connected(grid)) {
                detail = "grid has a disconnected receptive field";
            } else if (!(extract_code(grid) == code)) {
                detail = "grid extracts a different code";
            } else {
                ok = true;
                detail = "grid realizes the code in dimension " + std::to_string(grid.dim());
            }
            break;
        }
        case CertKind::Graph: {
            AdmissibleGraph graph = graph_from_json(text);
            ValidationResult res = validate(graph, code);
            ok = res.ok;
            detail = ok ? "graph validates against the code" : res.violation->describe();
            break;
        }
        case CertKind::Word: {
            AtomWord word = word_from_json(text);
            ok = verify_word(code, word);
            detail = ok ? "atom word realizes the code on the line"
                        : "atom word fails verification";
            break;
        }
        case CertKind::Unknown:
            throw ParseError("unrecognized certificate document: " + cert_file);
    }
    if (opt.json_output)
        std::cout << json{{"ok", ok}, {"detail", detail}}.dump() << "\n";
    else
        std::cout << (ok ? "OK: " : "FAIL: ") << detail << "\n";
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connected receptive-field codes: realizability and embedding dimension"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--json", opt.json_output, "structured JSON output");

    std::string code_arg, graph_file, grid_file, cert_file, out_dir = ".", out_file, cert_dir;
    int dim = 0, n = 0, dup_bound = 2;
    std::int64_t budget = 1'000'000;

    auto* check = app.add_subcommand("check", "decide connectivity");
    check->add_option("CODE", code_arg)->required();

    auto* dimc = app.add_subcommand("dim", "compute d* with certificates");
    dimc->add_option("CODE", code_arg)->required();
    dimc->add_option("--dup-bound", dup_bound);
    dimc->add_option("--budget", budget);
    dimc->add_option("-o,--output", out_dir)->default_str("");

    auto* realize = app.add_subcommand("realize", "emit a realization in a given dimension");
    realize->add_option("CODE", code_arg)->required();
    realize->add_option("--dim", dim)->required()->check(CLI::Range(1, 3));
    realize->add_option("-o,--output", out_dir);
    realize->add_option("--dup-bound", dup_bound);
    realize->add_option("--budget", budget);

    auto* graphc = app.add_subcommand("graph", "canonical admissible graph");
    graphc->add_option("CODE", code_arg)->required();
    graphc->add_option("-o,--output", out_file);

    auto* planar = app.add_subcommand("planar", "planarity certificate for a graph file");
    planar->add_option("GRAPHFILE", graph_file)->required();

    auto* enumerate = app.add_subcommand("enumerate", "census of all codes on n neurons");
    enumerate->add_option("-n", n)->required()->check(CLI::Range(1, 4));
    enumerate->add_option("--dup-bound", dup_bound);
    enumerate->add_option("--budget", budget);
    enumerate->add_option("-o,--output", out_file);
    enumerate->add_option("--certs", cert_dir);

    auto* render = app.add_subcommand("render", "render a grid file (SVG or scene doc)");
    render->add_option("GRIDFILE", grid_file)->required();
    render->add_option("-o,--output", out_file)->required();

    auto* verify = app.add_subcommand("verify", "re-check a certificate against a code");
    verify->add_option("CODE", code_arg)->required();
    verify->add_option("CERTFILE", cert_file)->required();

    std::string dim_out;
    dimc->callback([&]() { dim_out = dimc->count("-o") ? out_dir : ""; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*check) return cmd_check(opt, code_arg);
        if (*dimc) return cmd_dim(opt, code_arg, dup_bound, budget, dim_out);
        if (*realize) return cmd_realize(opt, code_arg, dim, out_dir, dup_bound, budget);
        if (*graphc) return cmd_graph(opt, code_arg, out_file);
        if (*planar) return cmd_planar(opt, graph_file);
        if (*enumerate) return cmd_enumerate(opt, n, dup_bound, budget, out_file, cert_dir);
        if (*render) return cmd_render(grid_file, out_file);
        if (*verify) return cmd_verify(opt, code_arg, cert_file);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
