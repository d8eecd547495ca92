#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <szlenk/ordinal.hpp>
#include <szlenk/space_algebra.hpp>

// Text syntax shared by the CLI and the Python module.
//
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := base ('^' factor)?          right-associative
//   base   := NAT | 'w' | 'W' NAT | '(' expr ')'
//
//   space  := summand ('(+)' summand)*
//   summand:= 'C(' expr ')' | 'C0(' expr ')' | 'c0(' expr ',' space ')' | '(' space ')'
//
// Whitespace is ignored. On input 'ω' is accepted for w, 'Ω' followed by
// ASCII or subscript digits for W, and '⊕' for (+). Output is ASCII only.
namespace szlenk {

struct OrdinalExprAst {
    enum class Op { literal, omega, atom, add, mul, pow };

    Op op = Op::literal;
    Coefficient value = 0; ///< literal value, or atom index
    std::size_t column = 0;
    std::vector<OrdinalExprAst> operands;
};

/// Throws SyntaxError on malformed input and OverflowError on literals that do
/// not fit a Coefficient.
OrdinalExprAst parse_ordinal_ast(std::string_view text);
Ordinal evaluate(const OrdinalExprAst& ast);

inline Ordinal parse_ordinal(std::string_view text) { return evaluate(parse_ordinal_ast(text)); }

/// Canonical rendering, e.g. "w^(w^2)*3 + w*5 + 7". parse_ordinal inverts it.
std::string format_ordinal(const Ordinal& a);

SpaceExpr parse_space(std::string_view text);
std::string format_space(const SpaceExpr& s);

} // namespace szlenk
