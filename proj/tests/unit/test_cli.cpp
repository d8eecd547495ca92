#include <doctest.h>

#include <sstream>

#include <szlenk/cli.hpp>
#include <szlenk/notation.hpp>

using namespace szlenk;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("exit codes") {
    CHECK(run({"eval", "w+1"}).code == cli::success);
    CHECK(run({"gamma", "5"}).code == cli::domain_error);
    CHECK(run({"eval", "w^^2"}).code == cli::syntax_error);
    CHECK(run({"frobnicate"}).code == cli::syntax_error);
    CHECK(run({}).code == cli::syntax_error);
    CHECK(run({"eval", "18446744073709551616"}).code == cli::overflow_error);
    CHECK(run({"--help"}).code == cli::success);
}

TEST_CASE("errors go to stderr only") {
    const Result r = run({"--json", "iso", "w", "W1"});
    CHECK(r.out.empty());
    CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("json output parses") {
    const Result r = run({"--json", "sz", "w^(w^2)"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["szlenk"]["text"] == "w^3");

    const Result n = run({"--json", "normalize-space", "--trace", "C0(w^(w*2))"});
    REQUIRE(n.code == 0);
    const auto t = nlohmann::json::parse(n.out);
    CHECK(t["trace"].size() == 2);
    CHECK(t["trace"][0]["rule"] == "R1");
}

TEST_CASE("json encoding of values") {
    const auto a = cli::ordinal_to_json(parse_ordinal("w^2*3 + 1"));
    CHECK(a["text"] == "w^2*3 + 1");
    CHECK(a["terms"].size() == 2);
    CHECK(a["terms"][0]["coefficient"] == 3);
    CHECK(a["terms"][0]["exponent"]["text"] == "2");
    const auto atom = cli::ordinal_to_json(Ordinal::epsilon_atom(2));
    CHECK(atom["epsilon_atom"] == 2);
    const auto s = cli::space_to_json(parse_space("c0(w, C0(w))"));
    CHECK(s["kind"] == "c0");
    CHECK(s["inner"]["kind"] == "C0");
}
