#include <szlenk/cli.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <szlenk/cb_topology.hpp>
#include <szlenk/classification.hpp>
#include <szlenk/indices.hpp>
#include <szlenk/notation.hpp>

namespace szlenk::cli {

using nlohmann::json;

json ordinal_to_json(const Ordinal& a) {
    if (a.is_atom()) {
        return json{{"text", format_ordinal(a)}, {"epsilon_atom", a.atom_index()}};
    }
    json terms = json::array();
    for (const Term& t : a.terms()) {
        terms.push_back(json{{"exponent", ordinal_to_json(t.exponent)}, {"coefficient", t.coefficient}});
    }
    return json{{"text", format_ordinal(a)}, {"terms", std::move(terms)}};
}

json space_to_json(const SpaceExpr& s) {
    json j{{"text", format_space(s)}};
    switch (s.kind()) {
    case SpaceExpr::Kind::c:
        j["kind"] = "C";
        j["alpha"] = ordinal_to_json(s.ordinal());
        break;
    case SpaceExpr::Kind::c0:
        j["kind"] = "C0";
        j["alpha"] = ordinal_to_json(s.ordinal());
        break;
    case SpaceExpr::Kind::c0_sum:
        j["kind"] = "c0";
        j["kappa"] = ordinal_to_json(s.ordinal());
        j["inner"] = space_to_json(s.inner());
        break;
    case SpaceExpr::Kind::direct_sum: {
        j["kind"] = "direct_sum";
        json parts = json::array();
        for (const SpaceExpr& p : s.children()) {
            parts.push_back(space_to_json(p));
        }
        j["parts"] = std::move(parts);
        break;
    }
    }
    return j;
}

json trace_to_json(const RewriteTrace& trace) {
    json steps = json::array();
    for (const RewriteStep& st : trace.steps) {
        steps.push_back(json{{"rule", rule_name(st.rule)},
                             {"position", st.position},
                             {"before", space_to_json(st.before)},
                             {"after", space_to_json(st.after)}});
    }
    return steps;
}

namespace {

std::string format_path(const TreePath& path) {
    if (path.empty()) {
        return "/";
    }
    std::string out;
    for (std::size_t i : path) {
        out += "/" + std::to_string(i);
    }
    return out;
}

std::string order_symbol(std::strong_ordering c) {
    if (c < 0) {
        return "<";
    }
    return c > 0 ? ">" : "=";
}

std::string describe_stage(const DerivedSetDescriptor& d) {
    std::string out = "stage " + format_ordinal(d.stage) + ": ";
    if (d.includes_zero) {
        return out + "[0, " + format_ordinal(d.alpha) + "]";
    }
    if (d.empty()) {
        return out + "empty";
    }
    return out + "{" + format_ordinal(omega_pow(d.stage)) + "*eta : 1 <= eta <= " + format_ordinal(d.quotient) + "}";
}

std::string render_trace(const RewriteTrace& trace) {
    std::string out;
    std::size_t n = 0;
    for (const RewriteStep& st : trace.steps) {
        out += std::to_string(++n) + ". " + std::string(rule_name(st.rule)) + " at " + format_path(st.position) + ": " +
               format_space(st.before) + " -> " + format_space(st.after) + "\n";
    }
    return out;
}

struct Options {
    bool json = false;
    std::vector<std::string> operands;
    std::string stage;
    bool height = false;
    bool trace = false;
};

void emit(std::ostream& out, const Options& opt, const std::string& text, const json& structured) {
    if (opt.json) {
        out << structured.dump(2) << "\n";
    } else {
        out << text;
    }
}

using Handler = void (*)(const Options&, std::ostream&);

void cmd_eval(const Options& o, std::ostream& out) {
    const Ordinal a = parse_ordinal(o.operands[0]);
    emit(out, o, format_ordinal(a) + "\n", json{{"command", "eval"}, {"value", ordinal_to_json(a)}});
}

void cmd_cmp(const Options& o, std::ostream& out) {
    const Ordinal a = parse_ordinal(o.operands[0]);
    const Ordinal b = parse_ordinal(o.operands[1]);
    const std::string sym = order_symbol(compare(a, b));
    emit(out, o, sym + "\n",
         json{{"command", "cmp"}, {"lhs", ordinal_to_json(a)}, {"rhs", ordinal_to_json(b)}, {"order", sym}});
}

void cmd_sz(const Options& o, std::ostream& out) {
    const Ordinal a = parse_ordinal(o.operands[0]);
    const Ordinal sz = szlenk_index(a);
    emit(out, o, format_ordinal(sz) + "\n",
         json{{"command", "sz"}, {"alpha", ordinal_to_json(a)}, {"szlenk", ordinal_to_json(sz)}});
}

void cmd_dz(const Options& o, std::ostream& out) {
    const Ordinal a = parse_ordinal(o.operands[0]);
    const Ordinal dz = dentability_index(a);
    emit(out, o, format_ordinal(dz) + "\n",
         json{{"command", "dz"}, {"alpha", ordinal_to_json(a)}, {"dentability", ordinal_to_json(dz)}});
}

void cmd_gamma(const Options& o, std::ostream& out) {
    const Ordinal a = parse_ordinal(o.operands[0]);
    const Ordinal g = gamma_of(a);
    emit(out, o, format_ordinal(g) + "\n",
         json{{"command", "gamma"}, {"alpha", ordinal_to_json(a)}, {"gamma", ordinal_to_json(g)}});
}

void cmd_report(const Options& o, std::ostream& out) {
    const IndexReport r = index_report(parse_ordinal(o.operands[0]));
    std::string text = "alpha: " + format_ordinal(r.alpha) + "\n";
    json j{{"command", "report"}, {"alpha", ordinal_to_json(r.alpha)}};
    if (r.gamma) {
        text += "gamma: " + format_ordinal(*r.gamma) + "\n";
        j["gamma"] = ordinal_to_json(*r.gamma);
    }
    text += "szlenk: " + format_ordinal(r.szlenk) + "\n";
    j["szlenk"] = ordinal_to_json(r.szlenk);
    if (r.dentability) {
        text += "dentability: " + format_ordinal(*r.dentability) + "\n";
        j["dentability"] = ordinal_to_json(*r.dentability);
    }
    if (r.bracket_low && r.bracket_high) {
        text += "bracket: [" + format_ordinal(*r.bracket_low) + ", " + format_ordinal(*r.bracket_high) + ")\n";
        j["bracket_low"] = ordinal_to_json(*r.bracket_low);
        j["bracket_high"] = ordinal_to_json(*r.bracket_high);
    }
    emit(out, o, text, j);
}

void cmd_iso(const Options& o, std::ostream& out) {
    const Ordinal a = parse_ordinal(o.operands[0]);
    const Ordinal b = parse_ordinal(o.operands[1]);
    const IsoVerdict v = isomorphic(a, b);
    const std::string text = v.isomorphic
                                 ? "isomorphic (beta < alpha^w = " + format_ordinal(v.witness_pow) + ")\n"
                                 : "not isomorphic (beta >= alpha^w = " + format_ordinal(v.witness_pow) + ")\n";
    emit(out, o, text,
         json{{"command", "iso"},
              {"alpha", ordinal_to_json(a)},
              {"beta", ordinal_to_json(b)},
              {"isomorphic", v.isomorphic},
              {"witness_low", ordinal_to_json(v.witness_low)},
              {"witness_pow", ordinal_to_json(v.witness_pow)},
              {"gamma_a", ordinal_to_json(v.gamma_a)},
              {"gamma_b", ordinal_to_json(v.gamma_b)}});
}

void cmd_rep(const Options& o, std::ostream& out) {
    const Ordinal a = parse_ordinal(o.operands[0]);
    const Ordinal r = canonical_representative(a);
    emit(out, o, format_ordinal(r) + "\n",
         json{{"command", "rep"}, {"alpha", ordinal_to_json(a)}, {"representative", ordinal_to_json(r)}});
}

void cmd_cb(const Options& o, std::ostream& out) {
    const Ordinal a = parse_ordinal(o.operands[0]);
    std::string text;
    json j{{"command", "cb"}, {"alpha", ordinal_to_json(a)}};
    if (!o.stage.empty()) {
        const DerivedSetDescriptor d = cb_derivative(a, parse_ordinal(o.stage));
        text += describe_stage(d) + "\n";
        j["stage"] = json{{"stage", ordinal_to_json(d.stage)},
                          {"quotient", ordinal_to_json(d.quotient)},
                          {"includes_zero", d.includes_zero},
                          {"empty", d.empty()}};
    }
    if (o.height || o.stage.empty()) {
        const Ordinal h = cb_height(a);
        text += "height: " + format_ordinal(h) + "\n";
        j["height"] = ordinal_to_json(h);
    }
    emit(out, o, text, j);
}

void cmd_dirac(const Options& o, std::ostream& out) {
    const Ordinal l = parse_ordinal(o.operands[0]);
    const Ordinal r = dirac_rank(l);
    emit(out, o, format_ordinal(r) + "\n",
         json{{"command", "dirac"}, {"lambda", ordinal_to_json(l)}, {"rank", ordinal_to_json(r)}});
}

void cmd_decompose(const Options& o, std::ostream& out) {
    const Ordinal xi = parse_ordinal(o.operands[0]);
    const Ordinal zeta = parse_ordinal(o.operands[1]);
    const RewriteTrace t = decompose_bp(xi, zeta);
    emit(out, o, format_space(t.source) + " ~ " + format_space(t.result) + "\n",
         json{{"command", "decompose"},
              {"xi", ordinal_to_json(xi)},
              {"zeta", ordinal_to_json(zeta)},
              {"source", space_to_json(t.source)},
              {"result", space_to_json(t.result)},
              {"trace", trace_to_json(t)}});
}

void cmd_normalize(const Options& o, std::ostream& out) {
    const SpaceExpr s = parse_space(o.operands[0]);
    const RewriteTrace t = normalize(s);
    std::string text = o.trace ? render_trace(t) : std::string{};
    text += format_space(t.result) + "\n";
    json j{{"command", "normalize-space"},
           {"input", space_to_json(s)},
           {"result", space_to_json(t.result)},
           {"steps", t.steps.size()}};
    if (o.trace) {
        j["trace"] = trace_to_json(t);
    }
    emit(out, o, text, j);
}

void cmd_bounds(const Options& o, std::ostream& out) {
    const SpaceExpr s = parse_space(o.operands[0]);
    const IndexBounds b = szlenk_bounds(s);
    emit(out, o,
         "lower: " + format_ordinal(b.lower) + "\nupper: " + format_ordinal(b.upper) +
             "\nexact: " + (b.exact ? "true" : "false") + "\n",
         json{{"command", "bounds"},
              {"space", space_to_json(s)},
              {"lower", ordinal_to_json(b.lower)},
              {"upper", ordinal_to_json(b.upper)},
              {"exact", b.exact}});
}

struct CommandSpec {
    const char* name;
    const char* description;
    std::vector<const char*> operands;
    Handler handler;
};

const std::vector<CommandSpec>& commands() {
    static const std::vector<CommandSpec> table{
        {"eval", "Normalise an ordinal expression", {"E"}, cmd_eval},
        {"cmp", "Compare two ordinals (prints <, = or >)", {"E1", "E2"}, cmd_cmp},
        {"sz", "Szlenk index of C([0,E])", {"E"}, cmd_sz},
        {"dz", "w*-dentability index of C([0,E]), E >= w", {"E"}, cmd_dz},
        {"gamma", "The gamma with w^(w^gamma) <= E < w^(w^(gamma+1))", {"E"}, cmd_gamma},
        {"report", "All index data for C([0,E])", {"E"}, cmd_report},
        {"iso", "Decide whether C([0,E1]) and C([0,E2]) are isomorphic (countable, >= w)", {"E1", "E2"}, cmd_iso},
        {"rep", "Canonical representative w^(w^gamma) of the class of C([0,E])", {"E"}, cmd_rep},
        {"cb", "Cantor-Bendixson data of [0,E]", {"E"}, cmd_cb},
        {"dirac", "Cantor-Bendixson rank of the point E", {"E"}, cmd_dirac},
        {"decompose", "Split C0(XI*ZETA) into C0(ZETA) (+) c0(ZETA, C0(XI))", {"XI", "ZETA"}, cmd_decompose},
        {"normalize-space", "Rewrite a space expression to normal form", {"S"}, cmd_normalize},
        {"bounds", "Szlenk index bounds for a space expression", {"S"}, cmd_bounds},
    };
    return table;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Szlenk and w*-dentability indices of C([0,alpha]) over Cantor normal form ordinals", "szlenk"};
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    app.add_flag("--json", opt.json, "Structured JSON output");

    std::vector<std::pair<CLI::App*, Handler>> subs;
    for (const CommandSpec& spec : commands()) {
        CLI::App* sub = app.add_subcommand(spec.name, spec.description);
        for (const char* name : spec.operands) {
            sub->add_option(name)->required();
        }
        subs.emplace_back(sub, spec.handler);
    }
    CLI::App* cb = app.get_subcommand("cb");
    cb->add_option("--stage", opt.stage, "Derivation stage to describe");
    cb->add_flag("--height", opt.height, "Print the Cantor-Bendixson height");
    app.get_subcommand("normalize-space")->add_flag("--trace", opt.trace, "Print every rewrite step");

    const auto first = std::find_if(args.begin(), args.end(), [](const std::string& a) { return !a.starts_with("-"); });
    if (first != args.end() && std::none_of(commands().begin(), commands().end(),
                                            [&](const CommandSpec& c) { return *first == c.name; })) {
        err << "error: unknown command '" << *first << "'\n" << app.help();
        return syntax_error;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return syntax_error;
    }

    for (auto& [sub, handler] : subs) {
        if (!sub->parsed()) {
            continue;
        }
        for (const CLI::Option* o : sub->get_options()) {
            if (o->get_positional()) {
                opt.operands.push_back(o->as<std::string>());
            }
        }
        std::ostringstream buffer;
        try {
            handler(opt, buffer);
        } catch (const SyntaxError& e) {
            err << "error: " << e.what() << "\n";
            return syntax_error;
        } catch (const DomainError& e) {
            err << "error: " << e.what() << "\n";
            return domain_error;
        } catch (const OverflowError& e) {
            err << "error: " << e.what() << "\n";
            return overflow_error;
        }
        out << buffer.str();
        return success;
    }
    err << "error: no command given\n" << app.help();
    return syntax_error;
}

} // namespace szlenk::cli
