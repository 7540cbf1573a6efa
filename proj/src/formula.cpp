#include "ldo/formula.hpp"

namespace ldo {

uint64_t CnfFormula::literal_count() const {
    uint64_t n = 0;
    for (const Clause& c : clauses) n += c.literals.size();
    return n;
}

uint32_t CnfFormula::max_referenced_index() const {
    uint32_t m = 0;
    for (const Clause& c : clauses)
        for (const Literal& lit : c.literals) m = std::max(m, lit.var.index);
    return m;
}

void validate(const CnfFormula& f) {
    uint32_t m = f.max_referenced_index();
    if (m > f.var_count)
        throw std::invalid_argument("formula references a" + std::to_string(m) +
                                    " but declares only " + std::to_string(f.var_count) +
                                    " variables");
}

Assignment decode_assignment(uint64_t j, uint32_t n) {
    if (n >= 64) throw std::out_of_range("variable count too large for assignment index");
    if (j >= (uint64_t{1} << n)) throw std::out_of_range("assignment index out of range");
    Assignment asg(n);
    for (uint32_t k = 0; k < n; ++k) asg[k] = (j >> k) & 1;
    return asg;
}

uint64_t encode_assignment(const Assignment& asg) {
    if (asg.size() >= 64) throw std::out_of_range("assignment too wide to encode");
    uint64_t j = 0;
    for (size_t k = 0; k < asg.size(); ++k)
        if (asg[k]) j |= uint64_t{1} << k;
    return j;
}

bool eval_clause(const Clause& c, const Assignment& asg) {
    for (const Literal& lit : c.literals) {
        if (lit.var.index > asg.size())
            throw std::out_of_range("assignment does not cover a" + std::to_string(lit.var.index));
        if (asg[lit.var.index - 1] != lit.negated) return true;
    }
    return false;
}

bool eval_cnf(const CnfFormula& f, const Assignment& asg) {
    for (const Clause& c : f.clauses)
        if (!eval_clause(c, asg)) return false;
    return true;
}

std::string literal_text(const Literal& lit) {
    std::string s = lit.negated ? "~a" : "a";
    s += std::to_string(lit.var.index);
    return s;
}

}  // namespace ldo
