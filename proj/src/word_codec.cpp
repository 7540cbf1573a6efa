#include "ldo/word_codec.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace ldo {

std::string token_text(const Token& t) {
    switch (t.kind) {
        case TokenKind::OpenBracket: return "[";
        case TokenKind::CloseBracket: return "]";
        case TokenKind::End: return "$";
        case TokenKind::Lit: return literal_text({t.var, t.negated});
    }
    return "?";
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    size_t i = 0;
    auto parse_index = [&](size_t at) -> uint32_t {
        size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw ParseError("literal needs a variable index", at);
        uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, value);
        (void)ptr;
        if (ec != std::errc{} || value == 0 || value > 0xFFFFFFFFull)
            throw ParseError("variable index out of range", at);
        return static_cast<uint32_t>(value);
    };
    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        size_t at = i;
        switch (c) {
            case '[': tokens.push_back(Token::open(at)); ++i; break;
            case ']': tokens.push_back(Token::close(at)); ++i; break;
            case '$': tokens.push_back(Token::end(at)); ++i; break;
            case 'a': ++i; tokens.push_back(Token::lit(parse_index(at), false, at)); break;
            case '~':
                ++i;
                if (i >= text.size() || text[i] != 'a')
                    throw ParseError("expected a variable after '~'", at);
                ++i;
                tokens.push_back(Token::lit(parse_index(at), true, at));
                break;
            default: throw ParseError(std::string("unknown character '") + c + "'", at);
        }
    }
    return tokens;
}

CnfFormula parse_word(const std::vector<Token>& tokens, std::optional<uint32_t> n_override) {
    CnfFormula f;
    bool in_clause = false;
    bool ended = false;
    Clause current;
    if (tokens.empty()) throw ParseError("empty input; expected at least the end marker '$'", 0);
    for (const Token& t : tokens) {
        if (ended) throw ParseError("token '" + token_text(t) + "' after end marker", t.pos);
        switch (t.kind) {
            case TokenKind::OpenBracket:
                if (in_clause) throw ParseError("nested '['", t.pos);
                in_clause = true;
                current.literals.clear();
                break;
            case TokenKind::CloseBracket:
                if (!in_clause) throw ParseError("']' without matching '['", t.pos);
                f.clauses.push_back(current);
                in_clause = false;
                break;
            case TokenKind::Lit:
                if (!in_clause) throw ParseError("literal outside clause", t.pos);
                current.literals.push_back({t.var, t.negated});
                break;
            case TokenKind::End:
                if (in_clause) throw ParseError("end marker inside clause", t.pos);
                ended = true;
                break;
        }
    }
    if (!ended)
        throw ParseError("missing end marker '$'", tokens.empty() ? 0 : tokens.back().pos + 1);
    f.var_count = f.max_referenced_index();
    if (n_override) {
        if (*n_override < f.var_count)
            throw ParseError("declared variable count " + std::to_string(*n_override) +
                                 " is below the largest referenced index " +
                                 std::to_string(f.var_count),
                             0);
        f.var_count = *n_override;
    }
    return f;
}

Word word_from_formula(const CnfFormula& f) {
    Word w;
    w.tokens.reserve(f.word_token_count());
    for (const Clause& c : f.clauses) {
        w.tokens.push_back(Token::open());
        for (const Literal& lit : c.literals)
            w.tokens.push_back(Token::lit(lit.var.index, lit.negated));
        w.tokens.push_back(Token::close());
    }
    w.tokens.push_back(Token::end());
    return w;
}

std::string encode_word(const CnfFormula& f) {
    std::string out;
    for (const Clause& c : f.clauses) {
        out += '[';
        for (size_t i = 0; i < c.literals.size(); ++i) {
            if (i) out += ' ';
            out += literal_text(c.literals[i]);
        }
        out += ']';
    }
    out += '$';
    return out;
}

CnfFormula parse_dimacs(std::string_view text, std::vector<std::string>* warnings) {
    CnfFormula f;
    bool have_header = false;
    uint64_t declared_clauses = 0;
    Clause current;
    bool clause_open = false;

    std::istringstream in{std::string(text)};
    std::string line;
    size_t offset = 0;
    while (std::getline(in, line)) {
        size_t line_start = offset;
        offset += line.size() + 1;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c" || tok[0] == 'c') continue;  // comment line
        if (tok == "p") {
            if (have_header) throw ParseError("duplicate 'p cnf' header", line_start);
            std::string fmt;
            uint64_t n = 0, m = 0;
            if (!(ls >> fmt >> n >> m) || fmt != "cnf")
                throw ParseError("malformed header; expected 'p cnf <vars> <clauses>'",
                                 line_start);
            if (n > 0xFFFFFFFFull) throw ParseError("variable count out of range", line_start);
            have_header = true;
            f.var_count = static_cast<uint32_t>(n);
            declared_clauses = m;
            continue;
        }
        // Clause data line(s).
        if (!have_header) throw ParseError("clause data before 'p cnf' header", line_start);
        ls.clear();
        ls.seekg(0);
        long long v = 0;
        while (ls >> v) {
            if (v == 0) {
                f.clauses.push_back(current);
                current.literals.clear();
                clause_open = false;
            } else {
                uint64_t idx = static_cast<uint64_t>(v < 0 ? -v : v);
                if (idx > f.var_count)
                    throw ParseError("literal " + std::to_string(v) +
                                         " exceeds declared variable count " +
                                         std::to_string(f.var_count),
                                     line_start);
                current.literals.push_back({VarId{static_cast<uint32_t>(idx)}, v < 0});
                clause_open = true;
            }
        }
        if (!ls.eof()) throw ParseError("unexpected token in clause data", line_start);
    }
    if (!have_header) throw ParseError("missing 'p cnf' header", 0);
    if (clause_open) throw ParseError("unterminated final clause (missing 0)", offset);
    if (f.clauses.size() != declared_clauses && warnings)
        warnings->push_back("header declares " + std::to_string(declared_clauses) +
                            " clauses but " + std::to_string(f.clauses.size()) + " were read");
    return f;
}

std::string emit_dimacs(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.var_count) + " " +
                      std::to_string(f.clauses.size()) + "\n";
    for (const Clause& c : f.clauses) {
        for (const Literal& lit : c.literals) {
            if (lit.negated) out += '-';
            out += std::to_string(lit.var.index);
            out += ' ';
        }
        out += "0\n";
    }
    return out;
}

InputFormat detect_format(std::string_view text) {
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return (c == 'p' || c == 'c') ? InputFormat::Dimacs : InputFormat::WordText;
    }
    return InputFormat::WordText;
}

CnfFormula parse_input(std::string_view text, InputFormat format,
                       std::optional<uint32_t> n_override,
                       std::vector<std::string>* warnings) {
    if (format == InputFormat::Auto) format = detect_format(text);
    if (format == InputFormat::Dimacs) {
        CnfFormula f = parse_dimacs(text, warnings);
        if (n_override) {
            if (*n_override < f.max_referenced_index())
                throw ParseError("variable override below largest referenced index", 0);
            f.var_count = std::max(f.var_count, *n_override);
        }
        return f;
    }
    return parse_word(tokenize(text), n_override);
}

}  // namespace ldo
