#include <szlenk/classification.hpp>

#include <stdexcept>

#include <szlenk/indices.hpp>

namespace szlenk {

namespace {

void require_classifiable(const Ordinal& a, const char* name) {
    if (a < Ordinal::omega()) {
        throw DomainError(std::string("isomorphic classification requires ") + name + " >= w");
    }
    if (!is_countable(a)) {
        throw DomainError(std::string("isomorphic classification does not hold in general for uncountable ") +
                          name);
    }
}

} // namespace

IsoVerdict isomorphic(const Ordinal& alpha, const Ordinal& beta) {
    require_classifiable(alpha, "alpha");
    require_classifiable(beta, "beta");
    const bool ordered = alpha <= beta;
    const Ordinal& low = ordered ? alpha : beta;
    const Ordinal& high = ordered ? beta : alpha;

    IsoVerdict v;
    v.witness_low = low;
    v.witness_pow = pow(low, Ordinal::omega());
    v.isomorphic = high < v.witness_pow;
    v.gamma_a = gamma_of(alpha);
    v.gamma_b = gamma_of(beta);
    return v;
}

Ordinal canonical_representative(const Ordinal& alpha) {
    require_classifiable(alpha, "alpha");
    Ordinal rep = omega_pow(omega_pow(gamma_of(alpha)));
    if (!isomorphic(alpha, rep).isomorphic) {
        throw std::logic_error("canonical representative self-check failed");
    }
    return rep;
}

} // namespace szlenk
