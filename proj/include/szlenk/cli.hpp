#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include <szlenk/ordinal.hpp>
#include <szlenk/space_algebra.hpp>

namespace szlenk::cli {

enum ExitCode : int {
    success = 0,
    domain_error = 1,
    syntax_error = 2, ///< also usage errors
    overflow_error = 3,
};

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// {"text": "w^2 + 1", "terms": [{"exponent": {...}, "coefficient": 1}, ...]};
/// epsilon atoms are {"text": "W1", "epsilon_atom": 1}.
nlohmann::json ordinal_to_json(const Ordinal& a);
nlohmann::json space_to_json(const SpaceExpr& s);
nlohmann::json trace_to_json(const RewriteTrace& trace);

} // namespace szlenk::cli
