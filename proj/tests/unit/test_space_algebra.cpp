#include <doctest.h>

#include <szlenk/indices.hpp>
#include <szlenk/notation.hpp>
#include <szlenk/space_algebra.hpp>

using namespace szlenk;

namespace {

Ordinal P(const char* s) { return parse_ordinal(s); }
SpaceExpr S(const char* s) { return parse_space(s); }

std::size_t count(const RewriteTrace& t, Rule r) {
    std::size_t k = 0;
    for (const auto& s : t.steps) {
        k += s.rule == r;
    }
    return k;
}

} // namespace

TEST_CASE("space construction") {
    CHECK_THROWS_AS(SpaceExpr::c(P("0")), DomainError);
    CHECK_THROWS_AS(SpaceExpr::c0_sum(P("0"), S("C(1)")), DomainError);
    CHECK_THROWS_AS(SpaceExpr::direct_sum({}), DomainError);
    CHECK(SpaceExpr::direct_sum({S("C(w)")}) == S("C(w)"));
    CHECK(S("C0(w) (+) (C(3) (+) C(2))").children().size() == 2);
    CHECK(format_space(S("C0(w)(+)(C(3)(+)C(2))")) == "C0(w) (+) (C(3) (+) C(2))");

    const SpaceExpr e = S("C(w) (+) c0(w, C0(w^2))");
    CHECK(subtree_at(e, {1, 0}) == S("C0(w^2)"));
    CHECK(replace_at(e, {1, 0}, S("C(5)")) == S("C(w) (+) c0(w, C(5))"));
    CHECK_THROWS_AS(subtree_at(e, {0, 0}), DomainError);
}

TEST_CASE("rule names") {
    CHECK(rule_name(Rule::bp_split) == "R1");
    CHECK(rule_name(Rule::c_to_c0) == "R4");
    CHECK(rule_from_name("R3") == Rule::c0_flatten);
    CHECK_FALSE(rule_from_name("R5").has_value());
}

TEST_CASE("decomposition") {
    const auto t = decompose_bp(P("w^2"), P("w"));
    CHECK(t.source == S("C0(w^3)"));
    CHECK(t.result == S("C0(w) (+) c0(w, C0(w^2))"));
    CHECK(check_trace(t));
    CHECK(check_trace(decompose_bp(P("w + 1"), P("3"))));
    CHECK_THROWS_WITH_AS(decompose_bp(P("w"), P("w^2")), "decomposition requires zeta <= xi", DomainError);
    CHECK_THROWS_AS(decompose_bp(P("w"), P("0")), DomainError);
    CHECK_THROWS_AS(decompose_bp(P("5"), P("2")), DomainError);
}

TEST_CASE("normalization of C0(w^(w^g * n))") {
    for (const char* g : {"0", "1", "2", "w", "W1"}) {
        const Ordinal gamma = P(g);
        const Ordinal kappa = omega_pow(omega_pow(gamma));
        for (Coefficient n = 1; n <= 6; ++n) {
            CAPTURE(g);
            CAPTURE(n);
            const SpaceExpr src = SpaceExpr::c0(omega_pow(omega_pow(gamma) * Ordinal::finite(n)));
            const RewriteTrace t = normalize(src);
            CHECK(check_trace(t));
            if (n == 1) {
                CHECK(t.steps.empty());
                continue;
            }
            CHECK(t.result == SpaceExpr::c0_sum(kappa, SpaceExpr::c0(kappa)));
            CHECK(count(t, Rule::bp_split) == n - 1);
            CHECK(count(t, Rule::pb_absorb) == n - 1);
            CHECK(count(t, Rule::c0_flatten) == n - 2);
            CHECK(t.steps.size() == 3 * n - 4);
        }
    }
}

TEST_CASE("normalization terminates in a normal form") {
    for (const char* s : {"C(w^(w*3)) (+) C(w^2)", "c0(w, c0(w, c0(w, C(w))))", "C(5) (+) C(2)",
                          "c0(w^w, C0(w^(w*2))) (+) C(w)", "C0(W1*2)"}) {
        CAPTURE(s);
        const RewriteTrace t = normalize(S(s));
        CHECK(check_trace(t));
        CHECK(normalize(t.result).steps.empty());
    }
    // finite c0-sums do not flatten
    CHECK(normalize(S("c0(3, c0(3, C(w)))")).result == S("c0(3, c0(3, C0(w)))"));
}

TEST_CASE("trace checking rejects broken chains") {
    RewriteTrace t = normalize(S("C0(w^(w*3))"));
    REQUIRE(t.steps.size() == 5);
    CHECK(check_trace(t));

    RewriteTrace skipped = t;
    skipped.steps.erase(skipped.steps.begin() + 1);
    CHECK_FALSE(check_trace(skipped));

    RewriteTrace relabeled = t;
    relabeled.steps[0].rule = Rule::c0_flatten;
    CHECK_FALSE(check_trace(relabeled));

    RewriteTrace moved = t;
    moved.steps[1].position = {0, 0};
    CHECK_FALSE(check_trace(moved));

    RewriteTrace wrong_end = t;
    wrong_end.result = S("C0(w^w)");
    CHECK_FALSE(check_trace(wrong_end));

    // zeta > xi is not an instance of R1
    const SpaceExpr bad_src = S("C0(w^3)");
    const SpaceExpr bad_dst = S("C0(w^2) (+) c0(w^2, C0(w))");
    CHECK_FALSE(check_trace(RewriteTrace{bad_src, {RewriteStep{Rule::bp_split, {}, bad_src, bad_dst}}, bad_dst}));

    // finite kappa cannot flatten
    const SpaceExpr f_src = S("c0(2, c0(2, C(1)))");
    const SpaceExpr f_dst = S("c0(2, C(1))");
    CHECK_FALSE(check_trace(RewriteTrace{f_src, {RewriteStep{Rule::c0_flatten, {}, f_src, f_dst}}, f_dst}));
}

TEST_CASE("index bounds") {
    auto b = szlenk_bounds(S("C0(w^(w*4))"));
    CHECK(b.exact);
    CHECK(b.lower == P("w^2"));
    b = szlenk_bounds(normalize(S("C0(w^(w*4))")).result);
    CHECK(b.exact);
    CHECK(b.upper == P("w^2"));

    b = szlenk_bounds(S("C(w) (+) C0(w^(w^2))"));
    CHECK(b.exact);
    CHECK(b.lower == P("w^3"));

    b = szlenk_bounds(S("c0(w^w, C0(w))"));
    CHECK_FALSE(b.exact);
    CHECK(b.lower == P("w"));
    CHECK(b.upper == P("w^2"));

    b = szlenk_bounds(S("C(3) (+) C0(5)"));
    CHECK(b.exact);
    CHECK(b.lower == P("1"));
    CHECK_THROWS_AS(szlenk_bounds(S("C(3) (+) C(w)")), DomainError);
}
