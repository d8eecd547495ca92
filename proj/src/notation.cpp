#include <szlenk/notation.hpp>

#include <cctype>
#include <limits>

namespace szlenk {

namespace {

enum class Tok { nat, ident, atom, lparen, rparen, plus, star, caret, comma, oplus, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t column; // 1-based byte offset
    Coefficient value = 0;
};

bool starts_with(std::string_view s, std::size_t at, std::string_view prefix) {
    return s.substr(at, prefix.size()) == prefix;
}

constexpr std::string_view utf8_omega = "\xCF\x89";       // ω
constexpr std::string_view utf8_big_omega = "\xCE\xA9";   // Ω
constexpr std::string_view utf8_oplus = "\xE2\x8A\x95";   // ⊕
constexpr std::string_view utf8_subscript = "\xE2\x82";   // ₀..₉ are E2 82 80..89

Coefficient parse_decimal(std::string_view digits) {
    Coefficient v = 0;
    for (char ch : digits) {
        if (__builtin_mul_overflow(v, Coefficient{10}, &v) ||
            __builtin_add_overflow(v, static_cast<Coefficient>(ch - '0'), &v)) {
            throw OverflowError("integer literal '" + std::string(digits) + "' does not fit in 64 bits");
        }
    }
    return v;
}

// Digits after 'W' or 'Ω', ASCII or subscript, normalised to ASCII.
std::string read_atom_digits(std::string_view s, std::size_t& i) {
    std::string digits;
    for (;;) {
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            digits.push_back(s[i++]);
        } else if (starts_with(s, i, utf8_subscript) && i + 2 < s.size() &&
                   static_cast<unsigned char>(s[i + 2]) >= 0x80 && static_cast<unsigned char>(s[i + 2]) <= 0x89) {
            digits.push_back(static_cast<char>('0' + (static_cast<unsigned char>(s[i + 2]) - 0x80)));
            i += 3;
        } else {
            return digits;
        }
    }
}

Token atom_token(std::string digits, std::size_t column) {
    if (digits.empty()) {
        throw SyntaxError(column, "epsilon atom needs an index, as in W1");
    }
    const Coefficient k = parse_decimal(digits);
    if (k == 0) {
        throw SyntaxError(column, "epsilon atom index must be at least 1");
    }
    if (k > std::numeric_limits<std::uint32_t>::max()) {
        throw OverflowError("epsilon atom index too large");
    }
    return Token{Tok::atom, "W" + std::to_string(k), column, k};
}

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const std::size_t col = i + 1;
        const char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            const auto digits = s.substr(i, j - i);
            out.push_back(Token{Tok::nat, std::string(digits), col, parse_decimal(digits)});
            i = j;
        } else if (ch == 'W') {
            ++i;
            out.push_back(atom_token(read_atom_digits(s, i), col));
        } else if (starts_with(s, i, utf8_big_omega)) {
            i += utf8_big_omega.size();
            out.push_back(atom_token(read_atom_digits(s, i), col));
        } else if (starts_with(s, i, utf8_omega)) {
            out.push_back(Token{Tok::ident, "w", col});
            i += utf8_omega.size();
        } else if (std::isalpha(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isalnum(static_cast<unsigned char>(s[j]))) {
                ++j;
            }
            const std::string word(s.substr(i, j - i));
            if (word != "w" && word != "C" && word != "C0" && word != "c0") {
                throw SyntaxError(col, "unknown name '" + word + "'");
            }
            out.push_back(Token{Tok::ident, word, col});
            i = j;
        } else if (starts_with(s, i, "(+)")) {
            out.push_back(Token{Tok::oplus, "(+)", col});
            i += 3;
        } else if (starts_with(s, i, utf8_oplus)) {
            out.push_back(Token{Tok::oplus, "(+)", col});
            i += utf8_oplus.size();
        } else {
            Tok kind;
            switch (ch) {
            case '(':
                kind = Tok::lparen;
                break;
            case ')':
                kind = Tok::rparen;
                break;
            case '+':
                kind = Tok::plus;
                break;
            case '*':
                kind = Tok::star;
                break;
            case '^':
                kind = Tok::caret;
                break;
            case ',':
                kind = Tok::comma;
                break;
            default:
                throw SyntaxError(col, std::string("unexpected character '") + ch + "'");
            }
            out.push_back(Token{kind, std::string(1, ch), col});
            ++i;
        }
    }
    out.push_back(Token{Tok::end, "end of input", s.size() + 1});
    return out;
}

std::string describe(const Token& t) {
    return t.kind == Tok::end ? t.text : "'" + t.text + "'";
}

class Parser {
public:
    explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

    OrdinalExprAst expr() {
        OrdinalExprAst lhs = term();
        while (peek().kind == Tok::plus) {
            const auto col = take().column;
            lhs = binary(OrdinalExprAst::Op::add, col, std::move(lhs), term());
        }
        return lhs;
    }

    SpaceExpr space() {
        std::vector<SpaceExpr> parts;
        parts.push_back(summand());
        while (peek().kind == Tok::oplus) {
            take();
            parts.push_back(summand());
        }
        return SpaceExpr::direct_sum(std::move(parts));
    }

    void expect_end() {
        if (peek().kind != Tok::end) {
            fail("unexpected " + describe(peek()));
        }
    }

private:
    static OrdinalExprAst binary(OrdinalExprAst::Op op, std::size_t col, OrdinalExprAst lhs, OrdinalExprAst rhs) {
        OrdinalExprAst node;
        node.op = op;
        node.column = col;
        node.operands.push_back(std::move(lhs));
        node.operands.push_back(std::move(rhs));
        return node;
    }

    OrdinalExprAst term() {
        OrdinalExprAst lhs = factor();
        while (peek().kind == Tok::star) {
            const auto col = take().column;
            lhs = binary(OrdinalExprAst::Op::mul, col, std::move(lhs), factor());
        }
        return lhs;
    }

    OrdinalExprAst factor() {
        OrdinalExprAst b = base();
        if (peek().kind == Tok::caret) {
            const auto col = take().column;
            return binary(OrdinalExprAst::Op::pow, col, std::move(b), factor());
        }
        return b;
    }

    OrdinalExprAst base() {
        const Token& t = peek();
        OrdinalExprAst node;
        node.column = t.column;
        if (t.kind == Tok::nat) {
            node.op = OrdinalExprAst::Op::literal;
            node.value = t.value;
            take();
            return node;
        }
        if (t.kind == Tok::ident && t.text == "w") {
            node.op = OrdinalExprAst::Op::omega;
            take();
            return node;
        }
        if (t.kind == Tok::atom) {
            node.op = OrdinalExprAst::Op::atom;
            node.value = t.value;
            take();
            return node;
        }
        if (t.kind == Tok::lparen) {
            take();
            OrdinalExprAst inner = expr();
            expect(Tok::rparen, "')'");
            return inner;
        }
        fail("expected an ordinal term, found " + describe(t));
    }

    SpaceExpr summand() {
        const Token& t = peek();
        if (t.kind == Tok::ident && (t.text == "C" || t.text == "C0")) {
            const bool vanishing = t.text == "C0";
            take();
            expect(Tok::lparen, "'('");
            Ordinal alpha = evaluate(expr());
            expect(Tok::rparen, "')'");
            return vanishing ? SpaceExpr::c0(std::move(alpha)) : SpaceExpr::c(std::move(alpha));
        }
        if (t.kind == Tok::ident && t.text == "c0") {
            take();
            expect(Tok::lparen, "'('");
            Ordinal kappa = evaluate(expr());
            expect(Tok::comma, "','");
            SpaceExpr inner = space();
            expect(Tok::rparen, "')'");
            return SpaceExpr::c0_sum(std::move(kappa), std::move(inner));
        }
        if (t.kind == Tok::lparen) {
            take();
            SpaceExpr inner = space();
            expect(Tok::rparen, "')'");
            return inner;
        }
        fail("expected C(...), C0(...), c0(...) or '(', found " + describe(t));
    }

    const Token& peek() const { return tokens_[pos_]; }

    const Token& take() {
        const Token& t = tokens_[pos_];
        if (t.kind != Tok::end) {
            ++pos_;
        }
        return t;
    }

    void expect(Tok kind, const std::string& what) {
        if (peek().kind != kind) {
            fail("expected " + what + ", found " + describe(peek()));
        }
        take();
    }

    [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(peek().column, message); }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

bool renders_atomically(const Ordinal& e) {
    return e.is_finite() || e.is_atom() || e == Ordinal::omega();
}

std::string format_term(const Term& t) {
    std::string out;
    if (t.exponent.is_zero()) {
        return std::to_string(t.coefficient);
    }
    if (t.exponent.is_atom()) {
        out = format_ordinal(t.exponent);
    } else if (t.exponent == Ordinal::finite(1)) {
        out = "w";
    } else if (renders_atomically(t.exponent)) {
        out = "w^" + format_ordinal(t.exponent);
    } else {
        out = "w^(" + format_ordinal(t.exponent) + ")";
    }
    if (t.coefficient > 1) {
        out += "*" + std::to_string(t.coefficient);
    }
    return out;
}

} // namespace

OrdinalExprAst parse_ordinal_ast(std::string_view text) {
    Parser p(text);
    OrdinalExprAst ast = p.expr();
    p.expect_end();
    return ast;
}

Ordinal evaluate(const OrdinalExprAst& ast) {
    switch (ast.op) {
    case OrdinalExprAst::Op::literal:
        return Ordinal::finite(ast.value);
    case OrdinalExprAst::Op::omega:
        return Ordinal::omega();
    case OrdinalExprAst::Op::atom:
        return Ordinal::epsilon_atom(static_cast<std::uint32_t>(ast.value));
    case OrdinalExprAst::Op::add:
        return add(evaluate(ast.operands[0]), evaluate(ast.operands[1]));
    case OrdinalExprAst::Op::mul:
        return mul(evaluate(ast.operands[0]), evaluate(ast.operands[1]));
    case OrdinalExprAst::Op::pow:
        return pow(evaluate(ast.operands[0]), evaluate(ast.operands[1]));
    }
    return {};
}

std::string format_ordinal(const Ordinal& a) {
    if (a.is_zero()) {
        return "0";
    }
    if (a.is_atom()) {
        return "W" + std::to_string(a.atom_index());
    }
    std::string out;
    for (const Term& t : a.terms()) {
        if (!out.empty()) {
            out += " + ";
        }
        out += format_term(t);
    }
    return out;
}

SpaceExpr parse_space(std::string_view text) {
    Parser p(text);
    SpaceExpr s = p.space();
    p.expect_end();
    return s;
}

std::string format_space(const SpaceExpr& s) {
    switch (s.kind()) {
    case SpaceExpr::Kind::c:
        return "C(" + format_ordinal(s.ordinal()) + ")";
    case SpaceExpr::Kind::c0:
        return "C0(" + format_ordinal(s.ordinal()) + ")";
    case SpaceExpr::Kind::c0_sum:
        return "c0(" + format_ordinal(s.ordinal()) + ", " + format_space(s.inner()) + ")";
    case SpaceExpr::Kind::direct_sum: {
        std::string out;
        for (const SpaceExpr& part : s.children()) {
            if (!out.empty()) {
                out += " (+) ";
            }
            if (part.kind() == SpaceExpr::Kind::direct_sum) {
                out += "(" + format_space(part) + ")";
            } else {
                out += format_space(part);
            }
        }
        return out;
    }
    }
    return {};
}

} // namespace szlenk
