#pragma once

#include <array>
#include <compare>
#include <cstdint>

#include <szlenk/ordinal.hpp>

// Hand-specialised arithmetic on ordinals below w^4, used as ground truth for
// the general engine. Nothing here calls into ordinal.cpp except the two
// embedding functions.
namespace szlenk::oracle {

/// w^3*c[3] + w^2*c[2] + w*c[1] + c[0]. Note the index is the degree.
struct SmallOrdinal {
    std::array<std::uint64_t, 4> c{};

    static SmallOrdinal from_high(std::uint64_t c3, std::uint64_t c2, std::uint64_t c1, std::uint64_t c0) {
        return SmallOrdinal{{c0, c1, c2, c3}};
    }

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    /// Highest index with a nonzero coefficient; -1 for zero.
    int degree() const;

    friend bool operator==(const SmallOrdinal&, const SmallOrdinal&) = default;
};

std::strong_ordering o_compare(const SmallOrdinal& a, const SmallOrdinal& b);

/// Closed form of a + b below w^4: with j = degree(b), a's coefficients above j
/// survive, the two degree-j coefficients add, and b supplies everything below
/// j (a's lower part is absorbed). Follows from a + w^j*k = a' + w^j*(a_j + k)
/// where a' keeps a's terms of degree > j, since any x < w^j has x + w^j = w^j.
SmallOrdinal o_add(const SmallOrdinal& a, const SmallOrdinal& b);

/// Closed form of a * b below w^4, with d = degree(a) >= 0:
///   result[d + j] = b[j]  for j >= 1,
///   and if b[0] > 0: result[d] = a[d] * b[0], result[i] = a[i] for i < d,
///   otherwise result[i] = 0 for i <= d.
/// Derived from a * w^j = w^(d+j) for j >= 1 (a sits between w^d and w^(d+1),
/// so a*w^j is squeezed to w^(d+j)), and a * n = w^d*(a_d*n) + (a below w^d)
/// by repeated addition. Throws OverflowError if the product leaves w^4.
SmallOrdinal o_mul(const SmallOrdinal& a, const SmallOrdinal& b);

Ordinal to_ordinal(const SmallOrdinal& a);
/// Throws DomainError when `a` is not below w^4 or contains an epsilon atom.
SmallOrdinal from_ordinal(const Ordinal& a);

} // namespace szlenk::oracle
