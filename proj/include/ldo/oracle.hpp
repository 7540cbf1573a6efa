#pragma once

#include <cstdint>
#include <vector>

#include "ldo/formula.hpp"

// Brute-force ground truth: try every assignment. Deliberately shares no code
// with the mask algebra or the disk machine so it can arbitrate between them.

namespace ldo {

struct OracleResult {
    bool sat = false;
    std::vector<uint64_t> models;  // ascending assignment indices
};

/// Enumerates all 2^n assignments and evaluates the formula on each.
/// Refuses n above var_cap (the loop is exponential by construction).
OracleResult brute_force(const CnfFormula& f, uint32_t var_cap = 20);

}  // namespace ldo
