#include <szlenk/indices.hpp>

#include <stdexcept>

namespace szlenk {

namespace {

const Ordinal& omega_value() {
    static const Ordinal w = Ordinal::omega();
    return w;
}

Ordinal successor(const Ordinal& a) {
    return add(a, Ordinal::finite(1));
}

} // namespace

Ordinal gamma_of(const Ordinal& alpha) {
    if (alpha < omega_value()) {
        throw DomainError("gamma bracket defined for infinite ordinals only");
    }
    Ordinal gamma = deg(deg(alpha));

    const Ordinal low = omega_pow(omega_pow(gamma));
    const Ordinal high = omega_pow(omega_pow(successor(gamma)));
    if (!(low <= alpha && alpha < high)) {
        throw std::logic_error("gamma bracket self-check failed");
    }
    return gamma;
}

Ordinal szlenk_index(const Ordinal& alpha) {
    if (alpha < omega_value()) {
        return Ordinal::finite(1);
    }
    return omega_pow(successor(gamma_of(alpha)));
}

Ordinal dentability_index(const Ordinal& alpha) {
    if (alpha < omega_value()) {
        throw DomainError("dentability index is only determined for infinite alpha");
    }
    return omega_pow(successor(add(Ordinal::finite(1), gamma_of(alpha))));
}

IndexReport index_report(const Ordinal& alpha) {
    IndexReport r;
    r.alpha = alpha;
    r.szlenk = szlenk_index(alpha);
    if (alpha >= omega_value()) {
        r.gamma = gamma_of(alpha);
        r.dentability = dentability_index(alpha);
        r.bracket_low = omega_pow(omega_pow(*r.gamma));
        r.bracket_high = omega_pow(omega_pow(successor(*r.gamma)));
    }
    return r;
}

} // namespace szlenk
