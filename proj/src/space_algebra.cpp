#include <szlenk/space_algebra.hpp>

#include <algorithm>
#include <stdexcept>

#include <szlenk/indices.hpp>

namespace szlenk {

SpaceExpr SpaceExpr::c(Ordinal alpha) {
    if (alpha.is_zero()) {
        throw DomainError("C(alpha) requires alpha > 0");
    }
    return SpaceExpr{std::make_shared<const Node>(Node{Kind::c, std::move(alpha), {}})};
}

SpaceExpr SpaceExpr::c0(Ordinal alpha) {
    if (alpha.is_zero()) {
        throw DomainError("C0(alpha) requires alpha > 0");
    }
    return SpaceExpr{std::make_shared<const Node>(Node{Kind::c0, std::move(alpha), {}})};
}

SpaceExpr SpaceExpr::direct_sum(std::vector<SpaceExpr> parts) {
    if (parts.empty()) {
        throw DomainError("direct sum of no spaces");
    }
    if (parts.size() == 1) {
        return std::move(parts.front());
    }
    return SpaceExpr{std::make_shared<const Node>(Node{Kind::direct_sum, Ordinal{}, std::move(parts)})};
}

SpaceExpr SpaceExpr::c0_sum(Ordinal kappa, SpaceExpr inner) {
    if (kappa.is_zero()) {
        throw DomainError("c0(kappa, X) requires kappa > 0");
    }
    std::vector<SpaceExpr> children;
    children.push_back(std::move(inner));
    return SpaceExpr{std::make_shared<const Node>(Node{Kind::c0_sum, std::move(kappa), std::move(children)})};
}

bool operator==(const SpaceExpr& a, const SpaceExpr& b) {
    if (a.node_ == b.node_) {
        return true;
    }
    return a.kind() == b.kind() && a.ordinal() == b.ordinal() &&
           std::equal(a.children().begin(), a.children().end(), b.children().begin(), b.children().end());
}

const SpaceExpr& subtree_at(const SpaceExpr& root, const TreePath& path) {
    const SpaceExpr* node = &root;
    for (std::size_t index : path) {
        if (index >= node->children().size()) {
            throw DomainError("tree path leaves the expression");
        }
        node = &node->children()[index];
    }
    return *node;
}

namespace {

SpaceExpr replace_from(const SpaceExpr& node, const TreePath& path, std::size_t depth, SpaceExpr replacement) {
    if (depth == path.size()) {
        return replacement;
    }
    const std::size_t index = path[depth];
    if (index >= node.children().size()) {
        throw DomainError("tree path leaves the expression");
    }
    if (node.kind() == SpaceExpr::Kind::c0_sum) {
        return SpaceExpr::c0_sum(node.ordinal(), replace_from(node.inner(), path, depth + 1, std::move(replacement)));
    }
    std::vector<SpaceExpr> parts(node.children().begin(), node.children().end());
    parts[index] = replace_from(parts[index], path, depth + 1, std::move(replacement));
    return SpaceExpr::direct_sum(std::move(parts));
}

} // namespace

SpaceExpr replace_at(const SpaceExpr& root, const TreePath& path, SpaceExpr replacement) {
    return replace_from(root, path, 0, std::move(replacement));
}

std::string_view rule_name(Rule rule) {
    switch (rule) {
    case Rule::bp_split:
        return "R1";
    case Rule::pb_absorb:
        return "R2";
    case Rule::c0_flatten:
        return "R3";
    case Rule::c_to_c0:
        return "R4";
    }
    return "?";
}

std::optional<Rule> rule_from_name(std::string_view name) {
    for (Rule r : {Rule::bp_split, Rule::pb_absorb, Rule::c0_flatten, Rule::c_to_c0}) {
        if (rule_name(r) == name) {
            return r;
        }
    }
    return std::nullopt;
}

namespace {

const Ordinal& omega_value() {
    static const Ordinal w = Ordinal::omega();
    return w;
}

struct TowerShape {
    Ordinal gamma;
    Coefficient multiplier;
};

// alpha = w^(w^gamma * n)
std::optional<TowerShape> tower_shape(const Ordinal& alpha) {
    Term scratch;
    const auto outer = view_terms(alpha, scratch);
    if (outer.size() != 1 || outer.front().coefficient != 1 || outer.front().exponent.is_zero()) {
        return std::nullopt;
    }
    Term inner_scratch;
    const auto inner = view_terms(outer.front().exponent, inner_scratch);
    if (inner.size() != 1) {
        return std::nullopt;
    }
    return TowerShape{inner.front().exponent, inner.front().coefficient};
}

bool is_tower(const Ordinal& kappa) {
    auto shape = tower_shape(kappa);
    return shape && shape->multiplier == 1;
}

Ordinal tower(const Ordinal& gamma, Coefficient n) {
    return omega_pow(mul(omega_pow(gamma), Ordinal::finite(n)));
}

SpaceExpr bp_result(const Ordinal& xi, const Ordinal& zeta) {
    return SpaceExpr::direct_sum({SpaceExpr::c0(zeta), SpaceExpr::c0_sum(zeta, SpaceExpr::c0(xi))});
}

struct Redex {
    Rule rule;
    TreePath position;
    SpaceExpr after;
};

std::optional<SpaceExpr> try_rule_at(const SpaceExpr& node, Rule& fired) {
    switch (node.kind()) {
    case SpaceExpr::Kind::c:
        if (node.ordinal() >= omega_value()) {
            fired = Rule::c_to_c0;
            return SpaceExpr::c0(node.ordinal());
        }
        return std::nullopt;
    case SpaceExpr::Kind::c0: {
        auto shape = tower_shape(node.ordinal());
        if (!shape || shape->multiplier < 2) {
            return std::nullopt;
        }
        fired = Rule::bp_split;
        return bp_result(tower(shape->gamma, shape->multiplier - 1), tower(shape->gamma, 1));
    }
    case SpaceExpr::Kind::c0_sum: {
        const SpaceExpr& inner = node.inner();
        if (node.ordinal() >= omega_value() && inner.kind() == SpaceExpr::Kind::c0_sum &&
            inner.ordinal() == node.ordinal()) {
            fired = Rule::c0_flatten;
            return SpaceExpr::c0_sum(node.ordinal(), inner.inner());
        }
        return std::nullopt;
    }
    case SpaceExpr::Kind::direct_sum: {
        auto parts = node.children();
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            const SpaceExpr& head = parts[i];
            const SpaceExpr& sum = parts[i + 1];
            if (head.kind() != SpaceExpr::Kind::c0 || !is_tower(head.ordinal())) {
                continue;
            }
            if (sum == SpaceExpr::c0_sum(head.ordinal(), head)) {
                std::vector<SpaceExpr> out(parts.begin(), parts.end());
                out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
                fired = Rule::pb_absorb;
                return SpaceExpr::direct_sum(std::move(out));
            }
        }
        return std::nullopt;
    }
    }
    return std::nullopt;
}

std::optional<Redex> find_redex(const SpaceExpr& node, TreePath& path) {
    for (std::size_t i = 0; i < node.children().size(); ++i) {
        path.push_back(i);
        if (auto found = find_redex(node.children()[i], path)) {
            return found;
        }
        path.pop_back();
    }
    Rule fired{};
    if (auto after = try_rule_at(node, fired)) {
        return Redex{fired, path, std::move(*after)};
    }
    return std::nullopt;
}

bool matches_bp(const SpaceExpr& before, const SpaceExpr& after) {
    if (before.kind() != SpaceExpr::Kind::c0 || after.kind() != SpaceExpr::Kind::direct_sum ||
        after.children().size() != 2) {
        return false;
    }
    const SpaceExpr& small = after.children()[0];
    const SpaceExpr& sum = after.children()[1];
    if (small.kind() != SpaceExpr::Kind::c0 || sum.kind() != SpaceExpr::Kind::c0_sum ||
        sum.inner().kind() != SpaceExpr::Kind::c0) {
        return false;
    }
    const Ordinal& zeta = small.ordinal();
    const Ordinal& xi = sum.inner().ordinal();
    return sum.ordinal() == zeta && !zeta.is_zero() && zeta <= xi && omega_value() <= xi &&
           mul(xi, zeta) == before.ordinal();
}

bool matches_rule(Rule rule, const SpaceExpr& before, const SpaceExpr& after) {
    switch (rule) {
    case Rule::bp_split:
        return matches_bp(before, after);
    case Rule::pb_absorb: {
        if (before.kind() != SpaceExpr::Kind::direct_sum) {
            return false;
        }
        auto parts = before.children();
        for (std::size_t i = 0; i + 1 < parts.size(); ++i) {
            const SpaceExpr& head = parts[i];
            if (head.kind() != SpaceExpr::Kind::c0 || !is_tower(head.ordinal()) ||
                !(parts[i + 1] == SpaceExpr::c0_sum(head.ordinal(), head))) {
                continue;
            }
            std::vector<SpaceExpr> out(parts.begin(), parts.end());
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
            if (SpaceExpr::direct_sum(std::move(out)) == after) {
                return true;
            }
        }
        return false;
    }
    case Rule::c0_flatten:
        return before.kind() == SpaceExpr::Kind::c0_sum && before.ordinal() >= omega_value() &&
               before.inner().kind() == SpaceExpr::Kind::c0_sum && before.inner().ordinal() == before.ordinal() &&
               after == SpaceExpr::c0_sum(before.ordinal(), before.inner().inner());
    case Rule::c_to_c0:
        return before.kind() == SpaceExpr::Kind::c && before.ordinal() >= omega_value() &&
               after == SpaceExpr::c0(before.ordinal());
    }
    return false;
}

// Well beyond any trace the measure allows for expressions of practical size.
constexpr std::size_t max_rewrite_steps = 1'000'000;

} // namespace

RewriteTrace decompose_bp(const Ordinal& xi, const Ordinal& zeta) {
    if (zeta.is_zero()) {
        throw DomainError("decomposition requires 0 < zeta");
    }
    if (zeta > xi) {
        throw DomainError("decomposition requires zeta <= xi");
    }
    if (xi < omega_value()) {
        throw DomainError("decomposition requires w <= xi");
    }
    const SpaceExpr source = SpaceExpr::c0(mul(xi, zeta));
    const SpaceExpr result = bp_result(xi, zeta);
    return RewriteTrace{source, {RewriteStep{Rule::bp_split, {}, source, result}}, result};
}

RewriteTrace normalize(const SpaceExpr& expr) {
    RewriteTrace trace{expr, {}, expr};
    SpaceExpr current = expr;
    for (;;) {
        TreePath path;
        auto redex = find_redex(current, path);
        if (!redex) {
            break;
        }
        if (trace.steps.size() >= max_rewrite_steps) {
            throw std::logic_error("rewrite step bound exceeded");
        }
        const SpaceExpr& before = subtree_at(current, redex->position);
        trace.steps.push_back(RewriteStep{redex->rule, redex->position, before, redex->after});
        current = replace_at(current, redex->position, redex->after);
    }
    trace.result = current;
    return trace;
}

bool check_trace(const RewriteTrace& trace) {
    SpaceExpr current = trace.source;
    for (const RewriteStep& step : trace.steps) {
        try {
            if (!(subtree_at(current, step.position) == step.before)) {
                return false;
            }
        } catch (const DomainError&) {
            return false;
        }
        if (!matches_rule(step.rule, step.before, step.after)) {
            return false;
        }
        current = replace_at(current, step.position, step.after);
    }
    return current == trace.result;
}

namespace {

void collect_parameters(const SpaceExpr& e, bool& any_finite, bool& any_infinite) {
    if (e.kind() != SpaceExpr::Kind::direct_sum) {
        (e.ordinal() < omega_value() ? any_finite : any_infinite) = true;
    }
    for (const SpaceExpr& child : e.children()) {
        collect_parameters(child, any_finite, any_infinite);
    }
}

Ordinal leaf_lower_bound(const SpaceExpr& e) {
    if (e.kind() == SpaceExpr::Kind::c || e.kind() == SpaceExpr::Kind::c0) {
        return szlenk_index(e.ordinal());
    }
    Ordinal best;
    for (const SpaceExpr& child : e.children()) {
        best = std::max(best, leaf_lower_bound(child));
    }
    return best;
}

Ordinal embedding_level(const SpaceExpr& e) {
    switch (e.kind()) {
    case SpaceExpr::Kind::c:
    case SpaceExpr::Kind::c0:
        return gamma_of(e.ordinal());
    case SpaceExpr::Kind::direct_sum: {
        Ordinal level;
        for (const SpaceExpr& part : e.children()) {
            level = std::max(level, embedding_level(part));
        }
        return level;
    }
    case SpaceExpr::Kind::c0_sum:
        return std::max(embedding_level(e.inner()), gamma_of(e.ordinal()));
    }
    return {};
}

} // namespace

IndexBounds szlenk_bounds(const SpaceExpr& expr) {
    bool any_finite = false;
    bool any_infinite = false;
    collect_parameters(expr, any_finite, any_infinite);
    if (any_finite && any_infinite) {
        throw DomainError("Szlenk bounds need all parameters >= w or all finite");
    }
    if (!any_infinite) {
        const Ordinal one = Ordinal::finite(1);
        return IndexBounds{one, one, true};
    }
    IndexBounds b;
    b.lower = leaf_lower_bound(expr);
    b.upper = omega_pow(add(embedding_level(normalize(expr).result), Ordinal::finite(1)));
    if (b.lower > b.upper) {
        throw std::logic_error("Szlenk bounds crossed");
    }
    b.exact = b.lower == b.upper;
    return b;
}

} // namespace szlenk
