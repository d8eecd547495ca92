#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <szlenk/oracle.hpp>
#include <szlenk/ordinal.hpp>

namespace szlenk {

/// The xi-th Cantor-Bendixson derivative of the ordinal interval [0, alpha].
///
/// For xi >= 1 the derived set is {w^xi * eta : 1 <= eta <= quotient}, where
/// quotient is the left quotient of alpha by w^xi; it is empty iff
/// alpha < w^xi. Stage 0 is the whole interval: the same set with xi = 0 and
/// quotient = alpha, plus the point 0 (`includes_zero`).
///
/// `quotient` is the largest multiplier, not always the order type: for
/// infinite quotient q the set has order type q + 1.
struct DerivedSetDescriptor {
    Ordinal alpha;
    Ordinal stage;
    Ordinal quotient;
    bool includes_zero = false;

    bool empty() const { return quotient.is_zero() && !includes_zero; }
    /// Largest point of the set. Requires !empty().
    Ordinal max_point() const;
    bool contains(const Ordinal& point) const;
};

DerivedSetDescriptor cb_derivative(const Ordinal& alpha, const Ordinal& xi);

/// The xi-th derivative of an already derived set. Derivation composes:
/// derive(cb_derivative(alpha, eta), xi) == cb_derivative(alpha, eta + xi).
DerivedSetDescriptor derive(const DerivedSetDescriptor& set, const Ordinal& xi);

/// Least xi whose derivative of [0, alpha] is empty: deg(alpha) + 1, and 1 for
/// alpha = 0 (a single point).
Ordinal cb_height(const Ordinal& alpha);

/// Number of derivation stages the point lambda survives, i.e. its
/// Cantor-Bendixson rank: the exponent of the last CNF term, and 0 for the
/// isolated point 0. For lambda = w^zeta this is zeta, so the Dirac functional
/// at w^(w^gamma) survives w^gamma stages of the Szlenk derivation on
/// C([0, alpha])* whenever w^(w^gamma) <= alpha.
///
/// The general (non w-power) case is the folklore point-rank formula and is
/// checked only against the concrete oracle below w^4.
Ordinal dirac_rank(const Ordinal& lambda);

/// One stage of the concrete derivation computed by `concrete_derivative_oracle`.
struct ConcreteStage {
    bool empty = true;
    /// Largest point of the stage; meaningful when !empty.
    oracle::SmallOrdinal max_point;
    /// max_point with the stage's trailing zero coefficients shifted out.
    oracle::SmallOrdinal quotient;
    /// Every point of the stage whose coefficients all lie in [0, window].
    std::vector<oracle::SmallOrdinal> window_points;
};

inline constexpr std::uint64_t concrete_coefficient_cap = 16;
inline constexpr unsigned concrete_max_steps = 4;

/// Independent Cantor-Bendixson derivation of [0, alpha] for alpha < w^4.
///
/// Points are coefficient vectors. Stage 0 is [0, alpha]; a point of stage k
/// survives to stage k+1 iff it is a limit of stage-k points from below. 0 and
/// successors (nonzero units coefficient) are isolated; for a limit x whose
/// lowest nonzero coefficient sits at degree j, points of the form
/// x - w^j + w^(j-1)*T + (small lower coefficients) with T far beyond any
/// coefficient in play are cofinal below x, and x is a limit of the stage iff
/// one of them belongs to it. No division or CNF arithmetic is used.
///
/// Returns stages 0..steps. Throws DomainError when steps exceeds
/// concrete_max_steps or a coefficient of alpha exceeds concrete_coefficient_cap.
std::vector<ConcreteStage> concrete_derivative_oracle(const oracle::SmallOrdinal& alpha, unsigned steps);

/// Largest k <= concrete_max_steps with `point` in the k-th concrete derived
/// set of [0, alpha]; nullopt when point > alpha.
std::optional<unsigned> concrete_point_rank(const oracle::SmallOrdinal& alpha, const oracle::SmallOrdinal& point);

} // namespace szlenk
