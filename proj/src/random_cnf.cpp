#include "ldo/random_cnf.hpp"

namespace ldo {

CnfFormula random_cnf(std::mt19937_64& rng, const RandomCnfParams& params) {
    std::uniform_int_distribution<uint32_t> var_count_dist(params.min_vars, params.max_vars);
    std::uniform_int_distribution<uint32_t> clause_count_dist(params.min_clauses,
                                                              params.max_clauses);
    std::uniform_int_distribution<uint32_t> width_dist(1, params.max_width);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    CnfFormula f;
    f.var_count = var_count_dist(rng);
    std::uniform_int_distribution<uint32_t> var_dist(1, f.var_count);
    const uint32_t clause_count = clause_count_dist(rng);
    for (uint32_t c = 0; c < clause_count; ++c) {
        Clause clause;
        if (coin(rng) >= params.empty_clause_prob) {
            const uint32_t width = width_dist(rng);
            for (uint32_t l = 0; l < width; ++l)
                clause.literals.push_back({VarId{var_dist(rng)}, coin(rng) < 0.5});
        }
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

}  // namespace ldo
