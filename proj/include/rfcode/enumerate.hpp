#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rfcode/code.hpp"
#include "rfcode/dimension.hpp"

namespace rfcode {

struct CensusRow {
    Code code;
    bool connected = false;
    int d_star = 0;                              // 0 when disconnected
    Exactness exactness = Exactness::Exact;
    std::uint64_t hash = 0;
};

struct Census {
    int n = 0;
    std::vector<CensusRow> rows;                 // sorted by serialized form
    std::map<std::string, std::int64_t> summary; // verdict class -> count
};

// Classifies every code on n neurons containing the empty word (2^(2^n - 1)
// codes, so n <= 4). Certificates are recomputed and verified inside d_star;
// pass cert_dir to keep them on disk keyed by code hash.
Census classify_all(int n, const DStarOptions& opts = {}, const std::string& cert_dir = "");

// Rejection sampling of connected codes, deterministic for a given seed.
// Throws after 10^6 rejected draws.
std::vector<Code> random_connected_codes(int n, int count, std::uint64_t seed);

std::string census_to_table(const Census& census);   // delimiter-separated + summary block

}  // namespace rfcode
