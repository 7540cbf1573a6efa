#pragma once

#include <cstdint>
#include <random>

#include "ldo/formula.hpp"

namespace ldo {

/// Knobs for the seeded instance generator used by the self-test command and
/// the cross-engine property suites.
struct RandomCnfParams {
    uint32_t min_vars = 1;
    uint32_t max_vars = 10;
    uint32_t min_clauses = 0;
    uint32_t max_clauses = 30;
    uint32_t max_width = 5;
    double empty_clause_prob = 0.02;  // occasionally emit [] — it is legal input
};

/// Random CNF with duplicates and tautologies left as drawn (never
/// normalized: they change the cost accounting). var_count is drawn from
/// [min_vars, max_vars] even when some variables end up unreferenced.
CnfFormula random_cnf(std::mt19937_64& rng, const RandomCnfParams& params = {});

}  // namespace ldo
