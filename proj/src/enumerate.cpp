#include "rfcode/enumerate.hpp"

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include "rfcode/formats.hpp"
#include "rfcode/realize2d.hpp"

namespace rfcode {

namespace {

// all non-empty subsets of [n] in canonical codeword order
std::vector<Codeword> word_universe(int n) {
    std::vector<Codeword> words;
    std::uint64_t top = (std::uint64_t{1} << n);
    for (std::uint64_t bits = 1; bits < top; ++bits) words.push_back({bits});
    std::sort(words.begin(), words.end(), word_less);
    return words;
}

std::string exactness_name(Exactness e, int dup_bound) {
    if (e == Exactness::Exact) return "exact";
    return "cond(" + std::to_string(dup_bound) + ")";
}

}  // namespace

Census classify_all(int n, const DStarOptions& opts, const std::string& cert_dir) {
    if (n < 1 || n > 4) throw InternalError("classify_all supports n in 1..4");
    auto words = word_universe(n);
    int t = static_cast<int>(words.size());

    if (!cert_dir.empty()) std::filesystem::create_directories(cert_dir);

    Census census;
    census.n = n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << t); ++mask) {
        std::vector<Codeword> selection;
        for (int k = 0; k < t; ++k)
            if (mask & (std::uint64_t{1} << k)) selection.push_back(words[static_cast<std::size_t>(k)]);
        Code code(n, std::move(selection));

        CensusRow row;
        row.code = code;
        row.hash = code_hash(code);
        DStarResult res = d_star(code, opts);
        if (auto* verdict = std::get_if<DimensionVerdict>(&res)) {
            row.connected = true;
            row.d_star = verdict->value;
            row.exactness = verdict->exactness;
            if (!cert_dir.empty()) {
                char name[32];
                std::snprintf(name, sizeof name, "%016llx",
                              static_cast<unsigned long long>(row.hash));
                std::string base = cert_dir + "/" + name;
                if (verdict->word)
                    write_text_file(base + ".word.json", word_to_json(n, *verdict->word));
                else if (verdict->planar)
                    write_text_file(base + ".grid2.json", grid_to_json(verdict->planar->grid));
                else if (verdict->real3)
                    write_text_file(base + ".grid3.json", grid_to_json(verdict->real3->grid));
            }
        } else if (std::get_if<Undecided23>(&res)) {
            row.connected = true;
            row.d_star = -1;                     // budget ran out: d* in {2,3}
        } else {
            row.connected = false;
            row.d_star = 0;
        }
        census.rows.push_back(std::move(row));
    }

    std::sort(census.rows.begin(), census.rows.end(), [](const CensusRow& a, const CensusRow& b) {
        return serialize_code(a.code) < serialize_code(b.code);
    });
    for (const CensusRow& row : census.rows) {
        std::string key;
        if (!row.connected)
            key = "not_connected";
        else if (row.d_star == -1)
            key = "budget_exceeded";
        else
            key = "d*=" + std::to_string(row.d_star) + " " +
                  exactness_name(row.exactness, opts.dup_bound);
        ++census.summary[key];
    }
    return census;
}

std::vector<Code> random_connected_codes(int n, int count, std::uint64_t seed) {
    if (n < 1 || n > 6) throw InternalError("random_connected_codes supports n in 1..6");
    if (count < 0 || count > 10'000) throw InternalError("count must be in 0..10000");
    std::mt19937_64 engine(seed);
    int t = (1 << n) - 1;                        // non-empty words on n neurons
    std::uint64_t mask_all = (t >= 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << t) - 1);
    auto words = word_universe(n);

    std::vector<Code> out;
    std::int64_t rejections = 0;
    while (static_cast<int>(out.size()) < count) {
        std::uint64_t mask = engine() & mask_all;
        std::vector<Codeword> selection;
        for (int k = 0; k < t; ++k)
            if (mask & (std::uint64_t{1} << k)) selection.push_back(words[static_cast<std::size_t>(k)]);
        Code code(n, std::move(selection));
        if (is_connected_code(code).connected) {
            out.push_back(std::move(code));
        } else if (++rejections > 1'000'000) {
            throw std::runtime_error("random_connected_codes: sampling exhausted");
        }
    }
    return out;
}

std::string census_to_table(const Census& census) {
    std::ostringstream out;
    out << "code\tconnected\td_star\texactness\n";
    for (const CensusRow& row : census.rows) {
        out << "\"";
        bool first = true;
        for (Codeword w : row.code.words()) {
            if (!first) out << ",";
            out << compact_form(w);
            first = false;
        }
        out << "\"\t" << (row.connected ? "yes" : "no") << "\t";
        if (!row.connected)
            out << "-\t-";
        else if (row.d_star == -1)
            out << "{2,3}\tbudget_exceeded";
        else
            out << row.d_star << "\t"
                << (row.exactness == Exactness::Exact ? "exact" : "conditional");
        out << "\n";
    }
    out << "\nsummary (n=" << census.n << ", " << census.rows.size() << " codes)\n";
    for (const auto& [key, count] : census.summary) out << key << "\t" << count << "\n";
    return out.str();
}

}  // namespace rfcode
