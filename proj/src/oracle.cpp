#include <szlenk/oracle.hpp>

namespace szlenk::oracle {

namespace {

std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("oracle coefficient overflow");
    }
    return r;
}

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("oracle coefficient overflow");
    }
    return r;
}

} // namespace

int SmallOrdinal::degree() const {
    for (int i = 3; i >= 0; --i) {
        if (c[static_cast<std::size_t>(i)] != 0) {
            return i;
        }
    }
    return -1;
}

std::strong_ordering o_compare(const SmallOrdinal& a, const SmallOrdinal& b) {
    for (int i = 3; i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        if (a.c[k] != b.c[k]) {
            return a.c[k] <=> b.c[k];
        }
    }
    return std::strong_ordering::equal;
}

SmallOrdinal o_add(const SmallOrdinal& a, const SmallOrdinal& b) {
    const int j = b.degree();
    if (j < 0) {
        return a;
    }
    SmallOrdinal r;
    for (int i = 0; i < 4; ++i) {
        const auto k = static_cast<std::size_t>(i);
        if (i > j) {
            r.c[k] = a.c[k];
        } else if (i == j) {
            r.c[k] = add_checked(a.c[k], b.c[k]);
        } else {
            r.c[k] = b.c[k];
        }
    }
    return r;
}

SmallOrdinal o_mul(const SmallOrdinal& a, const SmallOrdinal& b) {
    const int d = a.degree();
    const int db = b.degree();
    if (d < 0 || db < 0) {
        return {};
    }
    if (d + db > 3) {
        throw OverflowError("oracle product leaves w^4");
    }
    SmallOrdinal r;
    const auto du = static_cast<std::size_t>(d);
    for (std::size_t j = 1; j < 4; ++j) {
        if (b.c[j] != 0) {
            r.c[du + j] = b.c[j];
        }
    }
    if (b.c[0] != 0) {
        r.c[du] = mul_checked(a.c[du], b.c[0]);
        for (std::size_t i = 0; i < du; ++i) {
            r.c[i] = a.c[i];
        }
    }
    return r;
}

Ordinal to_ordinal(const SmallOrdinal& a) {
    std::vector<Term> terms;
    for (int i = 3; i >= 0; --i) {
        const auto k = static_cast<std::size_t>(i);
        if (a.c[k] != 0) {
            terms.push_back(Term{Ordinal::finite(k), a.c[k]});
        }
    }
    return Ordinal::from_terms(std::move(terms));
}

SmallOrdinal from_ordinal(const Ordinal& a) {
    if (a.is_atom()) {
        throw DomainError("epsilon atom outside oracle range");
    }
    SmallOrdinal r;
    for (const Term& t : a.terms()) {
        if (!t.exponent.is_finite() || t.exponent.finite_value() > 3) {
            throw DomainError("ordinal outside oracle range");
        }
        r.c[t.exponent.finite_value()] = t.coefficient;
    }
    return r;
}

} // namespace szlenk::oracle
