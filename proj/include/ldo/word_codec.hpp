#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ldo/formula.hpp"

// Input language of the machine and DIMACS interchange.
//
// Word syntax: clauses are bracketed literal runs, terminated by `$`, e.g.
// `[a1 ~a3]$` or `[~a1 a2 ~a3][a2]$`. Whitespace is insignificant. `[]` is the
// empty clause; a bare `$` is the empty formula. The end marker is mandatory:
// it is what drives the machine's final transition.

namespace ldo {

enum class TokenKind { OpenBracket, CloseBracket, End, Lit };

struct Token {
    TokenKind kind = TokenKind::End;
    VarId var{1};          // meaningful for Lit only
    bool negated = false;  // meaningful for Lit only
    size_t pos = 0;        // byte offset in the source text

    static Token open(size_t pos = 0) { return {TokenKind::OpenBracket, VarId{1}, false, pos}; }
    static Token close(size_t pos = 0) { return {TokenKind::CloseBracket, VarId{1}, false, pos}; }
    static Token end(size_t pos = 0) { return {TokenKind::End, VarId{1}, false, pos}; }
    static Token lit(uint32_t index, bool negated, size_t pos = 0) {
        return {TokenKind::Lit, VarId{index}, negated, pos};
    }
};

struct Word {
    std::vector<Token> tokens;

    uint64_t length() const { return tokens.size(); }
};

/// Parse failure with the byte offset where it was detected.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " at offset " + std::to_string(position)),
          position_(position) {}

    size_t position() const { return position_; }

private:
    size_t position_;
};

std::string token_text(const Token& t);

/// Surface text -> tokens. Rejects unknown characters and malformed literals
/// (`a0`, a bare `a`, an index too large), but does not enforce the grammar.
std::vector<Token> tokenize(std::string_view text);

/// Tokens -> formula, enforcing the word grammar: bracketed runs then `$`,
/// nothing nested, nothing outside brackets, nothing after the end marker.
/// n defaults to the largest referenced index; n_override may only raise it.
CnfFormula parse_word(const std::vector<Token>& tokens,
                      std::optional<uint32_t> n_override = std::nullopt);

/// Formula -> token sequence (the machine input).
Word word_from_formula(const CnfFormula& f);

/// Formula -> canonical surface text; parses back to an equal formula.
std::string encode_word(const CnfFormula& f);

/// Standard DIMACS cnf: `c` comments, one `p cnf <n> <m>` header, clauses as
/// 0-terminated integer runs (line breaks irrelevant). A clause-count mismatch
/// is a warning, not an error; appended to *warnings when given.
CnfFormula parse_dimacs(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string emit_dimacs(const CnfFormula& f);

enum class InputFormat { Auto, WordText, Dimacs };

/// Auto-detection: DIMACS iff the first non-blank line starts with `c` or `p`.
InputFormat detect_format(std::string_view text);

/// One-stop parse honoring the format choice (Auto applies detect_format).
CnfFormula parse_input(std::string_view text, InputFormat format = InputFormat::Auto,
                       std::optional<uint32_t> n_override = std::nullopt,
                       std::vector<std::string>* warnings = nullptr);

}  // namespace ldo
