#include "ldo/oracle.hpp"

namespace ldo {

OracleResult brute_force(const CnfFormula& f, uint32_t var_cap) {
    if (f.var_count > var_cap)
        throw std::invalid_argument("brute_force: " + std::to_string(f.var_count) +
                                    " variables exceeds cap of " + std::to_string(var_cap));
    validate(f);
    OracleResult result;
    const uint64_t t = uint64_t{1} << f.var_count;
    for (uint64_t j = 0; j < t; ++j) {
        if (eval_cnf(f, decode_assignment(j, f.var_count)))
            result.models.push_back(j);
    }
    result.sat = !result.models.empty();
    return result;
}

}  // namespace ldo
