#include <szlenk/cb_topology.hpp>

#include <algorithm>
#include <stdexcept>

namespace szlenk {

Ordinal DerivedSetDescriptor::max_point() const {
    if (empty()) {
        throw DomainError("empty derived set has no largest point");
    }
    return mul(omega_pow(stage), quotient);
}

bool DerivedSetDescriptor::contains(const Ordinal& point) const {
    if (point.is_zero()) {
        return includes_zero;
    }
    if (quotient.is_zero() || point > max_point()) {
        return false;
    }
    return divmod(point, omega_pow(stage)).remainder.is_zero();
}

DerivedSetDescriptor cb_derivative(const Ordinal& alpha, const Ordinal& xi) {
    DerivedSetDescriptor d;
    d.alpha = alpha;
    d.stage = xi;
    if (xi.is_zero()) {
        d.quotient = alpha;
        d.includes_zero = true;
        return d;
    }
    d.quotient = divmod(alpha, omega_pow(xi)).quotient;
    return d;
}

DerivedSetDescriptor derive(const DerivedSetDescriptor& set, const Ordinal& xi) {
    if (xi.is_zero()) {
        return set;
    }
    // Away from the isolated point 0, the set is homeomorphic to [1, quotient]
    // via eta -> w^stage * eta.
    DerivedSetDescriptor d;
    d.alpha = set.alpha;
    d.stage = add(set.stage, xi);
    d.quotient = divmod(set.quotient, omega_pow(xi)).quotient;
    return d;
}

Ordinal cb_height(const Ordinal& alpha) {
    if (alpha.is_zero()) {
        return Ordinal::finite(1);
    }
    return add(deg(alpha), Ordinal::finite(1));
}

Ordinal dirac_rank(const Ordinal& lambda) {
    return trailing_exponent(lambda);
}

namespace {

using oracle::SmallOrdinal;

constexpr std::uint64_t far_coefficient = std::uint64_t{1} << 20;

bool in_stage(const SmallOrdinal& alpha, unsigned k, const SmallOrdinal& x);

bool is_limit_of_stage(const SmallOrdinal& alpha, unsigned k, const SmallOrdinal& x) {
    int j = -1;
    for (int i = 0; i < 4; ++i) {
        if (x.c[static_cast<std::size_t>(i)] != 0) {
            j = i;
            break;
        }
    }
    if (j <= 0) {
        return false; // 0 or a successor
    }
    const auto ju = static_cast<std::size_t>(j);
    SmallOrdinal base = x;
    base.c[ju] -= 1;
    base.c[ju - 1] = far_coefficient;
    const unsigned free_slots = static_cast<unsigned>(ju - 1);
    for (unsigned mask = 0; mask < (1u << free_slots); ++mask) {
        SmallOrdinal y = base;
        for (unsigned i = 0; i < free_slots; ++i) {
            y.c[i] = (mask >> i) & 1u;
        }
        if (in_stage(alpha, k, y)) {
            return true;
        }
    }
    return false;
}

bool in_stage(const SmallOrdinal& alpha, unsigned k, const SmallOrdinal& x) {
    if (k == 0) {
        return oracle::o_compare(x, alpha) <= 0;
    }
    return in_stage(alpha, k - 1, x) && is_limit_of_stage(alpha, k - 1, x);
}

} // namespace

std::vector<ConcreteStage> concrete_derivative_oracle(const SmallOrdinal& alpha, unsigned steps) {
    if (steps > concrete_max_steps) {
        throw DomainError("concrete derivation supports at most 4 steps");
    }
    std::uint64_t window = 1;
    for (auto c : alpha.c) {
        if (c > concrete_coefficient_cap) {
            throw DomainError("concrete derivation coefficient out of range");
        }
        window = std::max(window, c);
    }

    // The largest point of every stage is alpha with some low coefficients
    // zeroed, so it always lies inside the window.
    std::vector<SmallOrdinal> points;
    for (std::uint64_t c3 = 0; c3 <= window; ++c3) {
        for (std::uint64_t c2 = 0; c2 <= window; ++c2) {
            for (std::uint64_t c1 = 0; c1 <= window; ++c1) {
                for (std::uint64_t c0 = 0; c0 <= window; ++c0) {
                    const auto p = SmallOrdinal::from_high(c3, c2, c1, c0);
                    if (oracle::o_compare(p, alpha) <= 0) {
                        points.push_back(p);
                    }
                }
            }
        }
    }
    std::sort(points.begin(), points.end(),
              [](const SmallOrdinal& a, const SmallOrdinal& b) { return oracle::o_compare(a, b) < 0; });

    std::vector<ConcreteStage> stages;
    for (unsigned k = 0; k <= steps; ++k) {
        ConcreteStage st;
        for (const auto& p : points) {
            if (in_stage(alpha, k, p)) {
                st.window_points.push_back(p);
            }
        }
        st.empty = st.window_points.empty();
        if (!st.empty) {
            st.max_point = st.window_points.back();
            if (k == 0) {
                st.quotient = alpha;
            } else {
                for (unsigned i = 0; i < 4; ++i) {
                    if (i < k && st.max_point.c[i] != 0) {
                        throw std::logic_error("concrete derived point below its stage");
                    }
                    if (i + k < 4) {
                        st.quotient.c[i] = st.max_point.c[i + k];
                    }
                }
            }
        }
        stages.push_back(std::move(st));
    }
    return stages;
}

std::optional<unsigned> concrete_point_rank(const SmallOrdinal& alpha, const SmallOrdinal& point) {
    if (oracle::o_compare(point, alpha) > 0) {
        return std::nullopt;
    }
    unsigned k = 0;
    while (k < concrete_max_steps && in_stage(alpha, k + 1, point)) {
        ++k;
    }
    return k;
}

} // namespace szlenk
