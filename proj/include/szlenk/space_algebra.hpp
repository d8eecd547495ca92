#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <szlenk/ordinal.hpp>

namespace szlenk {

/// Symbolic Banach space built from
///   C(alpha)       continuous functions on [0, alpha],
///   C0(alpha)      those vanishing at alpha,
///   X (+) Y (+) .. finite direct sums,
///   c0(kappa, X)   the c0-sum of copies of X indexed by [0, kappa).
/// Every ordinal parameter is positive. Immutable; subtrees are shared.
class SpaceExpr {
public:
    enum class Kind { c, c0, direct_sum, c0_sum };

    static SpaceExpr c(Ordinal alpha);
    static SpaceExpr c0(Ordinal alpha);
    /// A single part is returned unchanged; an empty list is a DomainError.
    static SpaceExpr direct_sum(std::vector<SpaceExpr> parts);
    static SpaceExpr c0_sum(Ordinal kappa, SpaceExpr inner);

    Kind kind() const noexcept { return node_->kind; }
    /// alpha for C/C0, kappa for c0-sums. Zero for direct sums.
    const Ordinal& ordinal() const noexcept { return node_->ordinal; }
    /// Summands of a direct sum, or the single inner space of a c0-sum.
    std::span<const SpaceExpr> children() const noexcept { return node_->children; }
    const SpaceExpr& inner() const { return node_->children.front(); }

    friend bool operator==(const SpaceExpr& a, const SpaceExpr& b);

private:
    struct Node {
        Kind kind;
        Ordinal ordinal;
        std::vector<SpaceExpr> children;
    };
    explicit SpaceExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Child indices from the root: summand index for direct sums, 0 for the
/// inner space of a c0-sum.
using TreePath = std::vector<std::size_t>;

const SpaceExpr& subtree_at(const SpaceExpr& root, const TreePath& path);
SpaceExpr replace_at(const SpaceExpr& root, const TreePath& path, SpaceExpr replacement);

enum class Rule {
    bp_split,    ///< R1  C0(xi*zeta) -> C0(zeta) (+) c0(zeta, C0(xi)),  0 < zeta <= xi, w <= xi
    pb_absorb,   ///< R2  C0(k) (+) c0(k, C0(k)) -> c0(k, C0(k)),  k = w^(w^gamma)
    c0_flatten,  ///< R3  c0(k, c0(k, X)) -> c0(k, X),  k >= w
    c_to_c0,     ///< R4  C(alpha) -> C0(alpha),  alpha >= w
};

std::string_view rule_name(Rule rule);
std::optional<Rule> rule_from_name(std::string_view name);

struct RewriteStep {
    Rule rule;
    TreePath position;
    SpaceExpr before; ///< the rewritten subtree
    SpaceExpr after;  ///< its replacement
};

/// A chain of isomorphisms source ~ ... ~ result, one rule application per step.
struct RewriteTrace {
    SpaceExpr source;
    std::vector<RewriteStep> steps;
    SpaceExpr result;
};

/// C0(xi*zeta) ~ C0(zeta) (+) c0(zeta, C0(xi)) for 0 < zeta <= xi and w <= xi.
/// The returned trace has the single R1 step. Throws DomainError naming the
/// violated hypothesis.
RewriteTrace decompose_bp(const Ordinal& xi, const Ordinal& zeta);

/// Rewrites to normal form with the leftmost-innermost strategy.
///
/// R1 only fires in the pattern C0(w^(w^gamma * n)), n >= 2, splitting with
/// zeta = w^(w^gamma) and xi = w^(w^gamma * (n-1)); free factoring is not
/// confluent. Termination: the triple
///   ( sum over C/C0 leaves of 3^n, where n is the multiplier when the leaf is
///     C0(w^(w^gamma * n)) or C(w^(w^gamma * n)) and 1 otherwise,
///     number of c0-sum nodes,
///     number of C leaves )
/// decreases lexicographically with every step: R1 trades 3^n for 3 + 3^(n-1),
/// R2 drops a leaf, R3 drops a c0 node, R4 drops a C leaf.
/// For C0(w^(w^gamma * n)) the trace has n-1 R1 steps, n-1 R2 steps and n-2
/// R3 steps.
RewriteTrace normalize(const SpaceExpr& expr);

/// Replays the trace from its source: every step must match its rule schema
/// (hypotheses checked with ordinal arithmetic), sit at a position holding
/// `before`, and the replay must end at `result`.
bool check_trace(const RewriteTrace& trace);

struct IndexBounds {
    Ordinal lower;
    Ordinal upper;
    bool exact = false;
};

/// Bounds on the Szlenk index of a space expression.
///
/// lower: the largest Szlenk index of a C/C0 leaf; every leaf embeds
/// isometrically in the whole space.
///
/// upper: every expression whose parameters are infinite embeds into some
/// C0(w^(w^g * n)), whose index is w^(g+1). The level g is computed
/// bottom-up on the normal form:
///   - C(alpha), C0(alpha): gamma(alpha);
///   - direct sums: the largest level of a summand;
///   - c0(kappa, X): max(level(X), gamma(kappa)). With g that maximum,
///     kappa <= w^(w^g * m) and X inside C0(w^(w^g * n)) for some n >= m, and
///     c0(w^(w^g * m), C0(w^(w^g * n))) is a summand of C0(w^(w^g * (n+m))).
/// The bounds are exact on C(alpha), C0(alpha), c0(w^(w^g), C0(w^(w^g * n)))
/// and direct sums of these. A c0-sum over an index set from a higher level
/// than its inner space gives a non-exact interval.
///
/// Expressions whose parameters are all finite are finite-dimensional and get
/// exactly 1. Mixing finite and infinite parameters is a DomainError.
IndexBounds szlenk_bounds(const SpaceExpr& expr);

} // namespace szlenk
