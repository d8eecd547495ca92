#pragma once

#include <optional>

#include <szlenk/ordinal.hpp>

namespace szlenk {

/// The unique gamma with w^(w^gamma) <= alpha < w^(w^(gamma+1)).
/// Throws DomainError for finite alpha.
Ordinal gamma_of(const Ordinal& alpha);

/// Szlenk index of C([0, alpha]): 1 for finite alpha, otherwise w^(gamma+1).
Ordinal szlenk_index(const Ordinal& alpha);

/// w*-dentability index of C([0, alpha]) for alpha >= w: w^(1+gamma+1).
/// Finite alpha is rejected with DomainError; no exact value is known to us
/// for the finite-dimensional spaces beyond Dz <= w.
Ordinal dentability_index(const Ordinal& alpha);

struct IndexReport {
    Ordinal alpha;
    std::optional<Ordinal> gamma;
    Ordinal szlenk;
    std::optional<Ordinal> dentability;
    std::optional<Ordinal> bracket_low;  ///< w^(w^gamma)
    std::optional<Ordinal> bracket_high; ///< w^(w^(gamma+1))
};

IndexReport index_report(const Ordinal& alpha);

} // namespace szlenk
