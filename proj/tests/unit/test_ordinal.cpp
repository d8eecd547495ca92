#include <doctest.h>

#include <szlenk/notation.hpp>
#include <szlenk/ordinal.hpp>

#include "../support/generators.hpp"

using namespace szlenk;
using szlenk::testing::GenOptions;
using szlenk::testing::OrdinalGen;

namespace {

Ordinal P(const char* s) { return parse_ordinal(s); }
const Ordinal w = Ordinal::omega();
const Ordinal W1 = Ordinal::epsilon_atom(1);
const Ordinal W2 = Ordinal::epsilon_atom(2);

Ordinal n(Coefficient k) { return Ordinal::finite(k); }

} // namespace

TEST_CASE("construction and canonical form") {
    CHECK(Ordinal().is_zero());
    CHECK(n(0).is_zero());
    CHECK(n(7).is_finite());
    CHECK(n(7).finite_value() == 7);
    CHECK_FALSE(w.is_finite());
    CHECK(w.terms().size() == 1);
    CHECK(W1.is_atom());
    CHECK(W1.atom_index() == 1);
    CHECK(W1.terms().empty());

    // (W1, 1) folds into the atom itself
    auto folded = Ordinal::from_terms({Term{W1, 1}});
    CHECK(folded.is_atom());
    CHECK(folded == W1);
    CHECK(omega_pow(W1) == W1);
    CHECK(Ordinal::from_terms({Term{W1, 2}}).kind() == Ordinal::Kind::cnf);

    CHECK_THROWS_AS(Ordinal::from_terms({Term{n(1), 1}, Term{n(2), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Ordinal::from_terms({Term{n(1), 1}, Term{n(1), 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Ordinal::from_terms({Term{n(1), 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Ordinal::epsilon_atom(0), DomainError);
}

TEST_CASE("ordering") {
    CHECK(n(3) < w);
    CHECK(w < w + n(1));
    CHECK(P("w^w") < P("w^(w+1)"));
    CHECK(P("w^(w^w)*100") < W1);
    CHECK(W1 < W1 + n(1));
    CHECK(W1 * n(2) < P("w^(W1+1)"));
    CHECK(P("w^(W1+1)") < W2);
    CHECK(compare(P("w*2 + 3"), P("w*2 + 3")) == std::strong_ordering::equal);
}

TEST_CASE("absorption witnesses") {
    CHECK(n(1) + w == w);
    CHECK(n(2) * w == w);
    CHECK((w + n(1)) * w == P("w^2"));
    CHECK(w + n(1) != w);
    CHECK(w * n(2) != w);
    CHECK(n(5) + W1 == W1);
    CHECK(w * W1 == W1);
    CHECK(pow(n(2), w) == w);
}

TEST_CASE("worked examples") {
    CHECK(pow(w + n(1), n(2)) == P("w^2 + w + 1"));
    CHECK(pow(P("w^w"), w) == P("w^(w^2)"));
    CHECK(W1 * w == P("w^(W1 + 1)"));
    CHECK(pow(n(0), n(0)) == n(1));
    CHECK(pow(n(0), w).is_zero());
    CHECK(pow(n(1), W1) == n(1));
    CHECK(pow(n(2), n(10)) == n(1024));
    CHECK(pow(n(3), P("w + 2")) == P("w*9"));
    CHECK(pow(w, W1) == W1);
    CHECK(pow(P("w + 3"), P("w^2 + 1")) == P("w^(w^2 + 1) + w^(w^2)*3"));
    CHECK(deg(P("w^(w^2)*3 + w")) == P("w^2"));
    CHECK(trailing_exponent(P("w^3 + w^2*2")) == n(2));
    CHECK(trailing_exponent(n(4)).is_zero());
    CHECK_THROWS_AS(deg(n(0)), DomainError);
}

TEST_CASE("left difference and division") {
    CHECK(left_difference(w, P("w*2 + 1")) == P("w + 1"));
    CHECK(left_difference(n(3), w) == w);
    CHECK(left_difference(n(3), n(7)) == n(4));
    CHECK_THROWS_AS(left_difference(w, n(3)), DomainError);

    auto dm = divmod(P("w^2*3 + w + 4"), w);
    CHECK(dm.quotient == P("w*3 + 1"));
    CHECK(dm.remainder == n(4));
    dm = divmod(P("w*7 + 5"), P("w*2"));
    CHECK(dm.quotient == n(3));
    CHECK(dm.remainder == P("w + 5"));
    CHECK_THROWS_AS(divmod(w, n(0)), DomainError);
}

TEST_CASE("coefficient overflow is reported") {
    const Ordinal big = n(std::numeric_limits<Coefficient>::max());
    CHECK_THROWS_AS(big + n(1), OverflowError);
    CHECK_THROWS_AS(big * n(2), OverflowError);
    CHECK_THROWS_AS(pow(n(2), n(64)), OverflowError);
    CHECK_NOTHROW(w * big);
}

TEST_CASE("property: laws over generated triples") {
    OrdinalGen gen(0x5eed, GenOptions{2, 3, 4, true});
    int checked = 0;
    for (int i = 0; i < 3000; ++i) {
        const Ordinal a = gen(), b = gen(), c = gen();
        CAPTURE(format_ordinal(a));
        CAPTURE(format_ordinal(b));
        CAPTURE(format_ordinal(c));
        REQUIRE(a.is_canonical());
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b).is_canonical());
        CHECK((a * b).is_canonical());
        if (b < c) {
            CHECK(a + b < a + c);
            CHECK(b + a <= c + a);
            if (!a.is_zero()) {
                CHECK(a * b < a * c);
            }
        }
        if (a <= b) {
            CHECK(a + left_difference(a, b) == b);
        }
        if (!b.is_zero()) {
            const DivMod dm = divmod(a, b);
            CHECK(b * dm.quotient + dm.remainder == a);
            CHECK(dm.remainder < b);
        }
        ++checked;
    }
    CHECK(checked == 3000);
}

TEST_CASE("property: power laws") {
    OrdinalGen gen(0xbeef, GenOptions{1, 2, 3, true});
    for (int i = 0; i < 1500; ++i) {
        const Ordinal a = gen(), b = gen(), c = gen();
        CAPTURE(format_ordinal(a));
        CAPTURE(format_ordinal(b));
        CAPTURE(format_ordinal(c));
        try {
            CHECK(pow(a, b + c) == pow(a, b) * pow(a, c));
            CHECK(pow(pow(a, b), c) == pow(a, b * c));
            CHECK(pow(a, n(1)) == a);
            CHECK(pow(a, b).is_canonical());
        } catch (const OverflowError&) {
            // finite powers of finite bases can leave 64 bits
        }
    }
}

TEST_CASE("property: total order") {
    OrdinalGen gen(0xfeed, GenOptions{3, 3, 5, true});
    std::vector<Ordinal> xs;
    for (int i = 0; i < 300; ++i) {
        xs.push_back(gen());
    }
    std::sort(xs.begin(), xs.end());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
        CHECK(xs[i] <= xs[i + 1]);
        CHECK((xs[i] == xs[i + 1]) == (compare(xs[i], xs[i + 1]) == 0));
        CHECK(compare(xs[i + 1], xs[i]) >= 0);
    }
}
