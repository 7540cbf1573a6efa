#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Symbolic CNF formulas and direct truth-table evaluation.
//
// Assignment numbering convention (used by every module in this library):
// assignment j sets variable a_k true iff bit (k-1) of j is set, bit 0 being
// the least significant. There are t = 2^n assignments for n variables.

namespace ldo {

/// 1-based variable identifier (the k in a_k).
struct VarId {
    uint32_t index = 1;

    VarId() = default;
    explicit VarId(uint32_t i) : index(i) {
        if (i == 0) throw std::invalid_argument("variable index must be >= 1");
    }

    friend auto operator<=>(const VarId&, const VarId&) = default;
};

struct Literal {
    VarId var;
    bool negated = false;

    friend auto operator<=>(const Literal&, const Literal&) = default;
};

/// Disjunction of literals. Order and duplicates are preserved: they determine
/// disk-push order and therefore cost, which is a first-class output.
struct Clause {
    std::vector<Literal> literals;

    bool empty() const { return literals.empty(); }
    friend bool operator==(const Clause&, const Clause&) = default;
};

/// Conjunction of clauses over variables a_1..a_{var_count}. var_count may
/// exceed the largest referenced index (declared-but-unused variables are
/// "don't care" and double the model count).
struct CnfFormula {
    std::vector<Clause> clauses;
    uint32_t var_count = 0;

    uint32_t clause_count() const { return static_cast<uint32_t>(clauses.size()); }
    uint64_t literal_count() const;
    uint32_t max_referenced_index() const;
    /// Token length of the word form: one per literal, two brackets per
    /// clause, plus the end marker.
    uint64_t word_token_count() const { return literal_count() + 2 * clauses.size() + 1; }

    friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Throws if some literal references a variable above var_count.
void validate(const CnfFormula& f);

/// Truth values indexed by variable: asg[k-1] is the value of a_k.
using Assignment = std::vector<bool>;

/// Assignment number j -> per-variable truth values (bit k-1 of j is a_k).
Assignment decode_assignment(uint64_t j, uint32_t n);

/// Inverse of decode_assignment.
uint64_t encode_assignment(const Assignment& asg);

/// True iff some literal evaluates true. The empty clause is false.
bool eval_clause(const Clause& c, const Assignment& asg);

/// Conjunction over clauses. The empty formula is true.
bool eval_cnf(const CnfFormula& f, const Assignment& asg);

/// "a3" / "~a3" rendering used by the word format, traces and model output.
std::string literal_text(const Literal& lit);

}  // namespace ldo
