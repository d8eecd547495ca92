#include <doctest.h>

#include <szlenk/notation.hpp>

#include "../support/generators.hpp"

using namespace szlenk;

TEST_CASE("parsing") {
    CHECK(format_ordinal(parse_ordinal("w^(w^2)*3 + w*5 + 7")) == "w^(w^2)*3 + w*5 + 7");
    CHECK(format_ordinal(parse_ordinal("1 + w")) == "w");
    CHECK(format_ordinal(parse_ordinal("2^3^2")) == "512");
    CHECK(format_ordinal(parse_ordinal("  w * 2 ")) == "w*2");
    CHECK(format_ordinal(parse_ordinal("W1*w")) == "w^(W1 + 1)");
    CHECK(format_ordinal(parse_ordinal("W2*3 + W1")) == "W2*3 + W1");
    CHECK(format_ordinal(parse_ordinal("w^W1")) == "W1");
    CHECK(format_ordinal(parse_ordinal("w^w")) == "w^w");
    CHECK(format_ordinal(parse_ordinal("0")) == "0");
}

TEST_CASE("unicode input") {
    CHECK(parse_ordinal("\xCF\x89^2") == parse_ordinal("w^2"));
    CHECK(parse_ordinal("\xCE\xA9\xE2\x82\x81") == parse_ordinal("W1"));
    CHECK(parse_ordinal("\xCE\xA9" "12") == parse_ordinal("W12"));
    CHECK(parse_space("C(w) \xE2\x8A\x95 C0(w)") == parse_space("C(w) (+) C0(w)"));
}

TEST_CASE("syntax errors carry a column") {
    try {
        parse_ordinal("w^^2");
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.column() == 3);
    }
    CHECK_THROWS_AS(parse_ordinal(""), SyntaxError);
    CHECK_THROWS_AS(parse_ordinal("w +"), SyntaxError);
    CHECK_THROWS_AS(parse_ordinal("(w"), SyntaxError);
    CHECK_THROWS_AS(parse_ordinal("x"), SyntaxError);
    CHECK_THROWS_AS(parse_ordinal("W0"), SyntaxError);
    CHECK_THROWS_AS(parse_ordinal("W"), SyntaxError);
    CHECK_THROWS_AS(parse_ordinal("w $"), SyntaxError);
    CHECK_THROWS_AS(parse_ordinal("99999999999999999999"), OverflowError);
    CHECK_THROWS_AS(parse_space("C(w"), SyntaxError);
    CHECK_THROWS_AS(parse_space("c0(w C(w))"), SyntaxError);
    CHECK_THROWS_AS(parse_space("D(w)"), SyntaxError);
    CHECK_THROWS_AS(parse_space("C(0)"), DomainError);
}

TEST_CASE("property: format/parse round trip") {
    testing::OrdinalGen gen(51, testing::GenOptions{3, 4, 1000, true});
    for (int i = 0; i < 3000; ++i) {
        const Ordinal a = gen();
        const std::string text = format_ordinal(a);
        CAPTURE(text);
        CHECK(parse_ordinal(text) == a);
    }
    for (const char* s : {"C(w)", "c0(w^w, C0(w) (+) C(3))", "(C(1) (+) C(2)) (+) C(3)", "c0(W1, C(W1*2))"}) {
        CHECK(format_space(parse_space(s)) == s);
    }
}
