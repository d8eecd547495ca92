#pragma once

#include <szlenk/ordinal.hpp>

namespace szlenk {

/// Outcome of the isomorphism test for C([0, alpha]) and C([0, beta]).
struct IsoVerdict {
    bool isomorphic = false;
    Ordinal witness_low; ///< min(alpha, beta)
    Ordinal witness_pow; ///< witness_low^w; isomorphic iff max(alpha, beta) < witness_pow
    Ordinal gamma_a;
    Ordinal gamma_b;
};

/// Isomorphism of C([0, alpha]) and C([0, beta]) for countable alpha, beta >= w:
/// with alpha <= beta, the spaces are isomorphic iff beta < alpha^w.
/// The criterion fails in general past the first uncountable ordinal, so any
/// argument containing an epsilon atom is rejected with DomainError.
IsoVerdict isomorphic(const Ordinal& alpha, const Ordinal& beta);

/// w^(w^gamma), the representative of the isomorphism class of C([0, alpha]).
Ordinal canonical_representative(const Ordinal& alpha);

} // namespace szlenk
